#pragma once

#include "sforge/complex.hpp"

namespace sforge {

// Finite dimensional algebra carried as a multiplication table over a fixed
// basis. Each basis element lives in one idempotent block (src, tgt), the
// idempotents themselves are basis elements, and products across mismatched
// blocks are zero. Multiplication follows the path convention: x * y means
// x then y, so it is defined on blocks (k,l) x (l,m) -> (k,m).
struct TableAlgebra {
  Field F = Field::rationals();
  int nidem = 0;
  std::vector<int> src, tgt;  // block of each basis element
  std::vector<int> idem;      // idem[k] = basis index of the k-th idempotent
  // table[x][y] = basis[x] * basis[y], sparse (index, coeff), index sorted
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> table;
  int dim() const { return (int)src.size(); }
};

std::vector<Scalar> t_unit_vec(const TableAlgebra& T, int k);
std::vector<Scalar> t_one(const TableAlgebra& T);
std::vector<Scalar> t_add(const TableAlgebra& T, const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b);
std::vector<Scalar> t_scale(const TableAlgebra& T, const Scalar& c,
                            const std::vector<Scalar>& a);
std::vector<Scalar> t_mul(const TableAlgebra& T, const std::vector<Scalar>& a,
                          const std::vector<Scalar>& b);

TableAlgebra table_from_algebra(const Algebra& A);

// Quotient by the two-sided ideal spanned by the given rows (table
// coordinates). Rows must span a block homogeneous ideal that misses the
// idempotents; violations throw Internal.
TableAlgebra table_quotient(const TableAlgebra& T, const Mat& ideal_rows);

// End_{K^b}(T_0 ⊕ ... ⊕ T_{r-1}) as a table algebra. A basis element in
// block (k,l) names a homotopy class T_l -> T_k, mirroring the way a path
// i -> j in Λ names the map P_j -> P_i, so table products compose the same
// way paths do. The identity classes are the idempotents and always sit
// first in their diagonal block.
struct EndoData {
  TableAlgebra T;
  std::vector<ProjComplex> summands;
  std::vector<ChainMap> chains;  // representative chain map per basis element
  std::vector<std::vector<std::vector<int>>> members;  // members[k][l] = basis indices
  std::vector<std::vector<KbHomSpace>> kb;             // kb[k][l] = Hom(T_l, T_k)
  std::vector<Mat> change;  // diagonal blocks: final basis over kb reps
};

// throws NotBasic when an isomorphism between two summands is found
EndoData endo_algebra(const Algebra& A, const std::vector<ProjComplex>& summands);

// class coordinates of u: T_l -> T_k over the basis of block (k,l)
std::vector<Scalar> endo_coords(const EndoData& E, int k, int l, const ChainMap& u);

// Quiver and admissible relations presenting a split basic table algebra,
// with the presented algebra rebuilt and its dimensions checked against the
// table. Vertex k of the quiver is the block of idem[k].
struct PresentedAlgebra {
  AlgebraPresentation pres;
  Algebra alg;
  Mat jbasis;  // radical basis rows in table coordinates
  int loewy = 0;
  std::vector<std::vector<Scalar>> arrow_lift;  // table coords per quiver arrow
};

// throws NonSplitEndomorphism when a diagonal block has no scalar residue or
// the residue complement fails to be a nilpotent ideal, DegreeBoundTooSmall
// when degree_cap is below the Loewy length of the table algebra
PresentedAlgebra present_table(const TableAlgebra& T, int degree_cap = 40);

// Λ/soc Λ and Λ/(socle line of P_i), re-presented by quiver and relations.
// The second form needs soc P_i inside e_i Λ e_i and throws
// NotWeaklySymmetric otherwise.
PresentedAlgebra socle_quotient(const Algebra& A, int degree_cap = 40);
PresentedAlgebra socle_quotient_at(const Algebra& A, int i, int degree_cap = 40);

}  // namespace sforge
