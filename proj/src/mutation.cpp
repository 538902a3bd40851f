#include "sforge/mutation.hpp"

#include <algorithm>
#include <functional>

namespace sforge {

namespace {

const Field& fld(const Algebra& A) { return A.pres.field; }

int hom_rank(const Field& F, const ModuleHom& f) {
  int r = 0;
  for (const Mat& m : f.h) r += rank(F, m);
  return r;
}

std::vector<Scalar> flat_hom(const ModuleHom& f) {
  std::vector<Scalar> out;
  for (const Mat& m : f.h) out.insert(out.end(), m.d.begin(), m.d.end());
  return out;
}

// rows of g (a subspace basis per vertex) span the same space as rows of h
bool same_subspace(const Field& F, const ModuleHom& g, const ModuleHom& h) {
  for (size_t v = 0; v < g.h.size(); v++) {
    const Mat& a = g.h[v];
    const Mat& b = h.h[v];
    if (a.c != b.c || rank(F, a) != rank(F, b)) return false;
    Echelon e(F, a.c);
    for (int i = 0; i < a.r; i++) e.add_row(a.row(i));
    for (int i = 0; i < b.r; i++)
      if (e.add_row(b.row(i))) return false;
  }
  return true;
}

// Coefficients c over basis so that particular + sum c_s basis_s passes `ok`:
// tries the particular map, greedy rank growth, seeded random combinations,
// then exhaustive enumeration when the coefficient space is small.
std::optional<std::vector<Scalar>> search_combo(
    const Field& F, const Representation& M, const Representation& N,
    const ModuleHom* particular, const std::vector<ModuleHom>& basis, std::uint64_t seed,
    int tries, const std::function<bool(const ModuleHom&)>& ok) {
  ModuleHom base = particular ? *particular : hom_zero(M, N);
  auto build = [&](const std::vector<Scalar>& cs) {
    ModuleHom h = base;
    for (size_t s = 0; s < basis.size(); s++)
      if (!F.is_zero(cs[s])) h = hom_add(M, h, hom_scale(M, cs[s], basis[s]));
    return h;
  };
  std::vector<Scalar> cs(basis.size(), F.zero());
  if (ok(base)) return cs;

  ModuleHom acc = base;
  for (size_t s = 0; s < basis.size(); s++) {
    ModuleHom cand = hom_add(M, acc, basis[s]);
    if (hom_rank(F, cand) > hom_rank(F, acc)) {
      acc = cand;
      cs[s] = F.one();
      if (ok(acc)) return cs;
    }
  }

  SplitMix64 rng(seed);
  for (int t = 0; t < tries && !basis.empty(); t++) {
    std::vector<Scalar> trial(basis.size());
    for (size_t s = 0; s < basis.size(); s++)
      trial[s] = F.is_prime_field()
                     ? F.from_int((long long)rng.below((std::uint64_t)F.characteristic()))
                     : F.from_int((long long)rng.below(9) - 4);
    if (ok(build(trial))) return trial;
  }

  if (F.is_prime_field() && !basis.empty() && basis.size() <= 20) {
    double total = 1;
    for (size_t s = 0; s < basis.size(); s++) total *= (double)F.characteristic();
    if (total <= 1e6) {
      std::vector<long long> digit(basis.size(), 0);
      while (true) {
        std::vector<Scalar> trial(basis.size());
        for (size_t s = 0; s < basis.size(); s++) trial[s] = F.from_int(digit[s]);
        if (ok(build(trial))) return trial;
        size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == F.characteristic()) digit[pos++] = 0;
        if (pos == digit.size()) break;
      }
    }
  }
  return std::nullopt;
}

ModuleHom res_hom(const Algebra& A, const Resolution& R, int j) {  // f^{j+1}
  return am_to_hom(A, R.f[j]);
}

}  // namespace

void mutate_step(const Algebra& A, Resolution& R) {
  const Field& F = fld(A);
  if (R.Q.empty()) R.Q.push_back({R.vertex});
  int j = (int)R.f.size();
  ProjSum Qj = proj_sum(A, R.Q[j]);

  Representation X;   // module whose approximation gives the next step
  ModuleHom pi;       // Q_j -> X
  ModuleHom fprev;    // f^j when j >= 1
  if (j == 0) {
    X = Qj.rep;
    pi = hom_identity(X);
  } else {
    fprev = res_hom(A, R, j - 1);
    QuotRep c = cokernel_of(proj_sum(A, R.Q[j - 1]).rep, Qj.rep, fprev);
    X = c.rep;
    pi = c.proj;
  }

  Approximation ap = minimal_left_approximation(X, R.vertex);
  ModuleHom fnew = (j == 0) ? ap.f : hom_compose(Qj.rep, pi, ap.f);

  // factorization in K^b: every chain map P^(j) -> P_t[0] is a u: Q_j -> P_t
  // with f^j then u = 0, and it must factor as fnew then (Q_{j+1} -> P_t)
  for (int t = 0; t < A.n(); t++) {
    if (t == R.vertex) continue;
    Representation Pt = rep_projective(A, t);
    std::vector<ModuleHom> down = hom_space(ap.Q.rep, Pt);
    Echelon span(F, (int)flat_hom(hom_zero(Qj.rep, Pt)).size());
    for (const ModuleHom& h : down)
      span.add_row(flat_hom(hom_compose(Qj.rep, fnew, h)));
    for (const ModuleHom& u : hom_space(Qj.rep, Pt)) {
      if (j >= 1) {
        ModuleHom thru = hom_compose(proj_sum(A, R.Q[j - 1]).rep, fprev, u);
        if (!hom_is_zero(proj_sum(A, R.Q[j - 1]).rep, thru)) continue;
      }
      if (!span.contains(flat_hom(u)))
        fail("ApproximationVerificationFailed",
             "a chain map to the stalk of P_" + std::to_string(t + 1) +
                 " does not factor through the approximation at step " + std::to_string(j + 1));
    }
  }

  if (j == 0) {
    SubRep ker = kernel_of(Qj.rep, ap.Q.rep, fnew);
    SubRep soc = socle_of(Qj.rep);
    R.kernel_is_socle = same_subspace(F, ker.incl, soc.incl);
  } else {
    int corner = Qj.rep.total() - hom_rank(F, fprev);
    R.exact.push_back(hom_rank(F, fnew) == corner);
  }

  R.f.push_back(hom_to_am(A, Qj, ap.Q, fnew));
  R.Q.push_back(ap.verts);
}

Resolution build_addq_resolution(const Algebra& A, int vertex, int steps) {
  if (vertex < 0 || vertex >= A.n())
    fail("ParseError", "vertex " + std::to_string(vertex + 1) + " out of range");
  Resolution R;
  R.vertex = vertex;
  R.Q.push_back({vertex});
  for (int k = 0; k < steps; k++) mutate_step(A, R);
  return R;
}

ProjComplex mutation_complex(const Algebra& A, const Resolution& R, int k) {
  if (k < 0 || k > (int)R.f.size()) fail("Internal", "resolution too short");
  ProjComplex C;
  C.A = &A;
  C.lo = -k;
  for (int t = 0; t <= k; t++) C.terms.push_back(proj_sum(A, R.Q[t]));
  for (int t = 0; t < k; t++) C.d.push_back(res_hom(A, R, t));
  complex_validate(C);
  return C;
}

std::vector<ProjComplex> silting_summands(const Algebra& A, const ProjComplex& P, int vertex) {
  std::vector<ProjComplex> out;
  out.push_back(P);
  for (int t = 0; t < A.n(); t++)
    if (t != vertex) out.push_back(stalk_complex(A, {t}, 0));
  return out;
}

Closure find_periodic_closure(const Algebra& A, const Resolution& R) {
  const Field& F = fld(A);
  int m = (int)R.f.size();
  Closure out;
  if (m < 1) {
    out.note = "empty resolution";
    return out;
  }
  int i = R.vertex;
  const std::vector<int>& vm = R.Q[m];
  const std::vector<int>& vp = R.Q[m - 1];

  // unknown x: Q_m -> P_i, block coordinates per summand
  std::vector<int> uoff(vm.size() + 1, 0);
  for (size_t c = 0; c < vm.size(); c++)
    uoff[c + 1] = uoff[c] + (int)A.block[i][vm[c]].size();
  int nunk = uoff[vm.size()];

  std::vector<int> coff(vp.size() + 1, 0);
  for (size_t r = 0; r < vp.size(); r++)
    coff[r + 1] = coff[r] + (int)A.block[i][vp[r]].size();
  int ncon = coff[vp.size()];

  Mat E(nunk, ncon);
  for (size_t c = 0; c < vm.size(); c++) {
    for (int b = 0; b < (int)A.block[i][vm[c]].size(); b++) {
      AlgebraElement u = element_basis(A, A.block[i][vm[c]][b]);
      for (size_t r = 0; r < vp.size(); r++) {
        AlgebraElement prod = multiply(A, u, R.f[m - 1].ent[r][c]);
        std::vector<Scalar> coords = element_coords(A, prod, i, vp[r]);
        for (size_t t = 0; t < coords.size(); t++)
          E.at(uoff[c] + b, coff[r] + (int)t) = coords[t];
      }
    }
  }
  Mat Z = left_kernel(F, E);

  ProjSum Qm = proj_sum(A, vm);
  Representation Pi = rep_projective(A, i);
  auto to_am = [&](const std::vector<Scalar>& row) {
    AlgMat x = am_zero(A, vm, {i});
    for (size_t c = 0; c < vm.size(); c++) {
      std::vector<Scalar> coords(row.begin() + uoff[c], row.begin() + uoff[c + 1]);
      x.ent[c][0] = element_from_coords(A, coords, i, vm[c]);
    }
    return x;
  };

  std::vector<ModuleHom> basis;
  std::vector<AlgMat> basis_am;
  for (int zr = 0; zr < Z.r; zr++) {
    basis_am.push_back(to_am(Z.row(zr)));
    basis.push_back(am_to_hom(A, basis_am.back()));
  }

  // A right approximation must hit exactly the trace of add Q in P_i: the
  // span of all composites passing through another vertex. Without a loop at
  // i the trace is rad P_i; with a loop it is strictly smaller, since no map
  // from add Q can reach the loop itself.
  std::vector<Echelon> trace;
  trace.reserve(A.n());
  int trace_dim = 0;
  for (int v = 0; v < A.n(); v++) {
    Echelon e(F, (int)A.block[i][v].size());
    for (int t = 0; t < A.n(); t++) {
      if (t == i) continue;
      for (int w : A.block[i][t]) {
        AlgebraElement lead = element_basis(A, w);
        for (int y : A.block[t][v])
          e.add_row(element_coords(A, multiply(A, lead, element_basis(A, y)), i, v));
      }
    }
    trace_dim += e.rank();
    trace.push_back(std::move(e));
  }

  int want_rank = Qm.rep.total() - hom_rank(F, res_hom(A, R, m - 1));
  if (trace_dim != want_rank) {
    out.note = "no candidate can have the add-Q trace as image and the right kernel";
    return out;
  }
  auto ok = [&](const ModuleHom& x) {
    if (hom_rank(F, x) != want_rank) return false;
    for (int v = 0; v < A.n(); v++)
      for (int r = 0; r < x.h[v].r; r++)
        if (!trace[v].contains(x.h[v].row(r))) return false;  // image escapes the trace
    return true;
  };

  std::optional<std::vector<Scalar>> got =
      search_combo(F, Qm.rep, Pi, nullptr, basis, 0x2b7e151628aed2a6ULL, 200, ok);
  if (!got) {
    out.note = "no closing map with the required image and kernel was found";
    return out;
  }
  AlgMat d = am_zero(A, vm, {i});
  for (size_t s = 0; s < basis_am.size(); s++)
    if (!F.is_zero((*got)[s])) d = am_add(A, d, am_scale(A, (*got)[s], basis_am[s]));
  out.kind = ClosureKind::Found;
  out.d_plus = d;
  return out;
}

std::vector<int> periodic_term(const Resolution& R, int k) {
  int m = (int)R.f.size();
  if (k <= m) return R.Q[k];
  return R.Q[((k - m - 1) % m) + 1];
}

AlgMat periodic_step(const Algebra& A, const Resolution& R, const AlgMat& d_plus, int k) {
  int m = (int)R.f.size();
  if (m < 1) fail("Internal", "empty resolution");
  if (k < 1) fail("Internal", "periodic_step needs k >= 1");
  if (k <= m) return R.f[k - 1];
  int j = (k - m - 1) % m;
  if (j == 0) return almul(A, d_plus, R.f[0]);
  return R.f[j];
}

ProjComplex mutation_complex_extended(const Algebra& A, const Resolution& R,
                                      const AlgMat& d_plus, int k) {
  if (k <= (int)R.f.size()) return mutation_complex(A, R, k);
  ProjComplex C;
  C.A = &A;
  C.lo = -k;
  for (int t = 0; t <= k; t++) C.terms.push_back(proj_sum(A, periodic_term(R, t)));
  for (int t = 1; t <= k; t++) C.d.push_back(am_to_hom(A, periodic_step(A, R, d_plus, t)));
  complex_validate(C);
  return C;
}

std::optional<Coresolution> from_projective_resolution(const Algebra& A, int vertex,
                                                       int max_steps) {
  const Field& F = fld(A);
  Coresolution out;
  out.res.vertex = vertex;
  out.res.Q.push_back({vertex});

  Representation M = rep_simple(A, vertex);
  Envelope env = injective_envelope(M);
  if (env.E.verts != std::vector<int>{vertex}) return std::nullopt;

  ProjSum prevE = env.E;
  ModuleHom prev_emb = env.emb;  // M_k -> E_k
  Representation Mk = M;
  for (int k = 1; k <= max_steps; k++) {
    QuotRep c = cokernel_of(Mk, prevE.rep, prev_emb);
    if (c.rep.total() == 0) return std::nullopt;
    Envelope nxt = injective_envelope(c.rep);
    ModuleHom dk = hom_compose(prevE.rep, c.proj, nxt.emb);  // E_{k-1} -> E_k

    if (nxt.E.verts == std::vector<int>{vertex}) {
      if (k == 1) return std::nullopt;  // degenerate loop with no interior
      out.d_plus = hom_to_am(A, prevE, nxt.E, dk);
      // fill the honesty flags the add-Q construction records
      Resolution& R = out.res;
      ProjSum P0 = proj_sum(A, {vertex});
      ModuleHom f1 = am_to_hom(A, R.f[0]);
      R.kernel_is_socle = same_subspace(
          F, kernel_of(P0.rep, proj_sum(A, R.Q[1]).rep, f1).incl, socle_of(P0.rep).incl);
      for (size_t j = 1; j < R.f.size(); j++) {
        int corner = proj_sum(A, R.Q[j]).rep.total() - hom_rank(F, am_to_hom(A, R.f[j - 1]));
        R.exact.push_back(hom_rank(F, am_to_hom(A, R.f[j])) == corner);
      }
      return out;
    }
    for (int w : nxt.E.verts)
      if (w == vertex) return std::nullopt;  // interior term touches P_i

    out.res.f.push_back(hom_to_am(A, prevE, nxt.E, dk));
    out.res.Q.push_back(nxt.E.verts);
    Mk = c.rep;
    prevE = nxt.E;
    prev_emb = nxt.emb;
  }
  return std::nullopt;
}

Resolution canonical_form(const Algebra& A, const Resolution& R) {
  const Field& F = fld(A);
  int m = (int)R.f.size();
  Resolution C = build_addq_resolution(A, R.vertex, m);
  for (int k = 0; k <= m; k++) {
    std::vector<int> a = C.Q[k], b = R.Q[k];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      fail("ApproximationVerificationFailed",
           "resolution summands differ from the canonical ones at step " + std::to_string(k));
  }

  ProjSum P0 = proj_sum(A, {R.vertex});
  ModuleHom phi = hom_identity(P0.rep);
  Representation dom = P0.rep;
  for (int k = 0; k < m; k++) {
    ProjSum Ck = proj_sum(A, C.Q[k]), Cn = proj_sum(A, C.Q[k + 1]);
    ProjSum Rn = proj_sum(A, R.Q[k + 1]);
    ModuleHom g = am_to_hom(A, C.f[k]);
    ModuleHom fr = am_to_hom(A, R.f[k]);
    ModuleHom rhs = hom_compose(Ck.rep, phi, fr);  // C_k -> R_{k+1}

    // solve g then psi = rhs for psi: C_{k+1} -> R_{k+1}, then pick an
    // invertible member of the affine solution space
    std::vector<ModuleHom> basis = hom_space(Cn.rep, Rn.rep);
    Mat rows((int)basis.size(), (int)flat_hom(rhs).size());
    for (size_t s = 0; s < basis.size(); s++) {
      std::vector<Scalar> v = flat_hom(hom_compose(Ck.rep, g, basis[s]));
      rows.set_row((int)s, v);
    }
    Mat target(1, rows.c);
    target.set_row(0, flat_hom(rhs));
    Mat sol;
    if (!solve_left(F, rows, target, sol))
      fail("ApproximationVerificationFailed",
           "the canonical square does not commute at step " + std::to_string(k + 1));
    ModuleHom particular = hom_zero(Cn.rep, Rn.rep);
    for (size_t s = 0; s < basis.size(); s++)
      if (!F.is_zero(sol.at(0, (int)s)))
        particular = hom_add(Cn.rep, particular, hom_scale(Cn.rep, sol.at(0, (int)s), basis[s]));

    Mat K = left_kernel(F, rows);
    std::vector<ModuleHom> kb;
    for (int zr = 0; zr < K.r; zr++) {
      ModuleHom h = hom_zero(Cn.rep, Rn.rep);
      for (size_t s = 0; s < basis.size(); s++)
        if (!F.is_zero(K.at(zr, (int)s)))
          h = hom_add(Cn.rep, h, hom_scale(Cn.rep, K.at(zr, (int)s), basis[s]));
      kb.push_back(h);
    }
    auto ok = [&](const ModuleHom& x) { return hom_invertible(Cn.rep, Rn.rep, x); };
    std::optional<std::vector<Scalar>> nxt =
        search_combo(F, Cn.rep, Rn.rep, &particular, kb, 0x7ad5f3b2c9e1d804ULL, 64, ok);
    if (!nxt)
      fail("ApproximationVerificationFailed",
           "no invertible ladder map at step " + std::to_string(k + 1));
    phi = particular;
    for (size_t s = 0; s < kb.size(); s++)
      if (!F.is_zero((*nxt)[s])) phi = hom_add(Cn.rep, phi, hom_scale(Cn.rep, (*nxt)[s], kb[s]));
    dom = Cn.rep;
  }
  (void)dom;
  return C;
}

}  // namespace sforge
