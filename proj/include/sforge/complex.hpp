#pragma once

#include "sforge/representation.hpp"

namespace sforge {

// Matrix over the algebra: a map  ⊕_r P_{src[r]} -> ⊕_c P_{dst[c]}  with
// ent[r][c] ∈ e_{dst[c]} Λ e_{src[r]} acting by left multiplication.
struct AlgMat {
  std::vector<int> src, dst;
  std::vector<std::vector<AlgebraElement>> ent;  // [r over src][c over dst]
};

AlgMat am_zero(const Algebra& A, const std::vector<int>& src, const std::vector<int>& dst);
// composition X then Y: almul(X, Y)[r][e] = Σ_c  Y[c][e] ·_Λ X[r][c]
AlgMat almul(const Algebra& A, const AlgMat& X, const AlgMat& Y);
AlgMat am_add(const Algebra& A, const AlgMat& X, const AlgMat& Y);
AlgMat am_scale(const Algebra& A, const Scalar& c, const AlgMat& X);
bool am_is_zero(const AlgMat& X);
bool am_eq(const Algebra& A, const AlgMat& X, const AlgMat& Y);
std::string am_str(const Algebra& A, const AlgMat& X);

ModuleHom am_to_hom(const Algebra& A, const AlgMat& X);  // proj_sum(src) -> proj_sum(dst)
AlgMat hom_to_am(const Algebra& A, const ProjSum& S, const ProjSum& T, const ModuleHom& f);

// Bounded cohomological complex of projective sums; d raises degree.
// terms[k] sits in degree lo + k.
struct ProjComplex {
  const Algebra* A = nullptr;
  int lo = 0;
  std::vector<ProjSum> terms;
  std::vector<ModuleHom> d;  // d[k]: terms[k] -> terms[k+1]
  int hi() const { return lo + (int)terms.size() - 1; }
};

ProjComplex stalk_complex(const Algebra& A, const std::vector<int>& verts, int degree);
// term and differential by absolute degree, zero padded outside the range
ProjSum term_at(const ProjComplex& C, int i);
ModuleHom d_at(const ProjComplex& C, int i);

void complex_validate(const ProjComplex& C);  // shapes, intertwining, d∘d = 0
bool complex_eq(const ProjComplex& C, const ProjComplex& D);

// C[s]: (C[s])_i = C_{i+s}, differential scaled by (-1)^s
ProjComplex shift_complex(const ProjComplex& C, int s);
ProjComplex complex_direct_sum(const ProjComplex& X, const ProjComplex& Y);

// degreewise components of a chain map X -> Y; comps[k] is at degree lo + k
struct ChainMap {
  int lo = 0;
  std::vector<ModuleHom> comps;
};
ModuleHom chain_comp_at(const ProjComplex& X, const ProjComplex& Y, const ChainMap& u, int i);
void chain_map_validate(const ProjComplex& X, const ProjComplex& Y, const ChainMap& u);
ChainMap chain_identity(const ProjComplex& X);
// u: X -> Y then w: Y -> Z, composed degreewise
ChainMap chain_compose(const ProjComplex& X, const ProjComplex& Y, const ProjComplex& Z,
                       const ChainMap& u, const ChainMap& w);

// mapping cone: C_i = X_{i+1} ⊕ Y_i, d(x, y) = (-d_X x, f x + d_Y y)
ProjComplex cone_of(const ProjComplex& X, const ProjComplex& Y, const ChainMap& f);

// Hom in K^b(proj Λ): chain maps modulo homotopy, with canonical class
// representatives and the data needed to coordinatize any chain map.
struct KbHomSpace {
  int lo = 0, hi = 0;  // aligned degree range of the chain map components
  int dim = 0;
  std::vector<ChainMap> reps;
  Echelon span;                // fed: homotopy boundaries first, then chain maps
  std::vector<int> rep_inputs; // echelon input indices of the reps
  KbHomSpace(const Field& F, int width) : span(F, width) {}
};

KbHomSpace hom_complex(const ProjComplex& X, const ProjComplex& Y);
// class coordinates over reps; throws Internal if u is not a chain map in the span
std::vector<Scalar> kb_coords(const ProjComplex& X, const ProjComplex& Y,
                              const KbHomSpace& H, const ChainMap& u);
// Σ c[t] · reps[t] as an honest chain map
ChainMap chain_linear(const ProjComplex& X, const ProjComplex& Y, const KbHomSpace& H,
                      const std::vector<Scalar>& c);

// Hom_{K^b}(T, T[s]) = 0 for every s != 0
bool is_tilting(const ProjComplex& T);

}  // namespace sforge
