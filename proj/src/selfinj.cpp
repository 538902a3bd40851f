#include "sforge/representation.hpp"

namespace sforge {

namespace {

// D(Λ e_t) as a right module: dual basis to the paths of e_u Λ e_t, arrow
// action transposed from left multiplication on the left projective.
Representation injective_rep(const Algebra& A, int t) {
  Representation I;
  I.A = &A;
  I.dims.resize(A.n());
  for (int u = 0; u < A.n(); u++) I.dims[u] = int(A.block[u][t].size());
  for (size_t a = 0; a < A.pres.quiver.arrows.size(); a++) {
    const Arrow& ar = A.pres.quiver.arrows[a];
    Mat L(I.dims[ar.target], I.dims[ar.source]);  // left mult: e_v Λ e_t -> e_u Λ e_t
    for (int c = 0; c < I.dims[ar.target]; c++) {
      Path p = A.basis[A.block[ar.target][t][c]];
      Path ap;
      ap.source = ar.source;
      ap.arrows.push_back(int(a));
      ap.arrows.insert(ap.arrows.end(), p.arrows.begin(), p.arrows.end());
      AlgebraElement x = A.reduce_path(ap);
      for (auto& [idx, s] : x.terms) L.at(c, A.pos_in_block[idx]) = s;
    }
    I.act.push_back(transpose(L));
  }
  return I;
}

}  // namespace

std::vector<int> nakayama_permutation(const Algebra& A) {
  std::vector<int> nu(A.n(), -1);
  std::vector<int> hits(A.n(), 0);
  for (int i = 0; i < A.n(); i++) {
    if (A.socle_dim[i] != 1)
      fail("NotSelfInjective",
           "socle of P_" + std::to_string(i + 1) + " is not simple");
    for (int v = 0; v < A.n(); v++)
      if (A.socle_rows[i][v].r > 0) nu[i] = v;
    hits[nu[i]]++;
  }
  for (int v = 0; v < A.n(); v++)
    if (hits[v] != 1)
      fail("NotSelfInjective", "socle vertices do not form a permutation");

  // P_i must actually be injective: compare with D(Λ e_nu(i)). Both have a
  // simple essential socle, so any hom that is nonzero on the socle is
  // injective, and equal dimensions then force an isomorphism.
  const Field& F = A.pres.field;
  for (int i = 0; i < A.n(); i++) {
    int t = nu[i];
    Representation P = rep_projective(A, i);
    Representation I = injective_rep(A, t);
    if (P.dims != I.dims)
      fail("NotSelfInjective",
           "P_" + std::to_string(i + 1) + " and the injective at vertex " +
               std::to_string(t + 1) + " have different dimension vectors");
    std::vector<Scalar> soc = A.socle_rows[i][t].row(0);
    bool found = false;
    for (const ModuleHom& h : hom_space(P, I)) {
      bool nz = false;
      for (int c = 0; c < I.dims[t] && !nz; c++) {
        Scalar s = F.zero();
        for (size_t m = 0; m < soc.size(); m++)
          s = F.add(s, F.mul(soc[m], h.h[t].at(int(m), c)));
        if (!F.is_zero(s)) nz = true;
      }
      if (nz && hom_invertible(P, I, h)) {
        found = true;
        break;
      }
    }
    if (!found)
      fail("NotSelfInjective",
           "P_" + std::to_string(i + 1) + " is not isomorphic to an injective");
  }

  bool idperm = true;
  for (int i = 0; i < A.n(); i++)
    if (nu[i] != i) idperm = false;
  if (idperm != A.weakly_symmetric)
    fail("Internal", "Nakayama permutation disagrees with the weak symmetry flag");
  return nu;
}

}  // namespace sforge
