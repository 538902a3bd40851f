#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sforge/matrix.hpp"
#include "sforge/quiver.hpp"

namespace sforge {

struct RelTerm {
  Scalar coeff;
  Path path;
};
using Relation = std::vector<RelTerm>;

struct AlgebraPresentation {
  Field field;
  Quiver quiver;
  std::vector<Relation> relations;
  // Free-form key/value payload carried through files untouched. Generators
  // stamp orbit data here; classify_loops reads it back.
  std::map<std::string, std::string> meta;
};

// Sparse element of one e_src Λ e_tgt, coordinates over the global basis.
// src/tgt are -1 on the zero element (which belongs to every block).
struct AlgebraElement {
  int src = -1, tgt = -1;
  std::vector<std::pair<int, Scalar>> terms;  // (global basis index, coeff), index-sorted
  bool is_zero() const { return terms.empty(); }
};

class Algebra {
 public:
  AlgebraPresentation pres;
  int loewy_length = 0;

  std::vector<Path> basis;     // global normal-form basis, deg-lex order
  std::vector<int> idem;       // idem[v] = global index of the lazy path at v
  // block[i][j] = ascending global indices spanning e_i Λ e_j
  std::vector<std::vector<std::vector<int>>> block;

  int n() const { return pres.quiver.n; }
  int dim() const { return (int)basis.size(); }

  // mult_table[x][y] = normal form of basis[x] * basis[y]
  std::vector<std::vector<AlgebraElement>> mult_table;

  // normal form of an arbitrary path (zero when it hits the ideal)
  AlgebraElement reduce_path(const Path& p) const;

  // radical filtration: layer_dim[k][i][j] = dim e_i J^k e_j for 0 <= k <= loewy;
  // layer_rows[k][i][j] has rows = basis of e_i J^k e_j in block (i,j) coordinates
  std::vector<std::vector<std::vector<int>>> layer_dim;
  std::vector<std::vector<std::vector<Mat>>> layer_rows;

  // soc(P_i) as rows over the block (i, v) coordinates, per vertex v
  // socle_rows[i][v]: (dim soc(P_i) at v) x (dim e_i Λ e_v)
  std::vector<std::vector<Mat>> socle_rows;
  std::vector<int> socle_dim;  // total per i
  bool weakly_symmetric = false;

  // position of a global basis index inside its block list
  std::vector<int> pos_in_block;

  // right multiplication by arrow a on P_i = e_i Λ: block (i, src a) -> (i, tgt a)
  Mat arrow_action(int i, int a) const;

  // e_i J e_j basis as global indices (length >= 1 basis paths of the block)
  std::vector<int> rad_block(int i, int j) const;

 private:
  friend Algebra build_algebra(const AlgebraPresentation&, int);
  // lookup key independent of the quiver so Algebra stays copyable
  using PathKey = std::pair<int, std::vector<int>>;
  static PathKey key(const Path& p) { return {p.source, p.arrows}; }
  std::map<PathKey, int> basis_index_;
  std::map<PathKey, AlgebraElement> pivot_;
  std::vector<std::vector<int>> forbidden_;  // monomial relation words (arrow seqs)
  bool contains_forbidden(const std::vector<int>& word) const;
};

Algebra build_algebra(const AlgebraPresentation& pres, int degree_cap = 40);

AlgebraElement element_zero();
AlgebraElement element_unit(const Algebra& A, int v);           // ε_v
AlgebraElement element_basis(const Algebra& A, int k);          // k-th basis element
AlgebraElement element_add(const Algebra& A, const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement element_scale(const Algebra& A, const Scalar& c, const AlgebraElement& x);
AlgebraElement multiply(const Algebra& A, const AlgebraElement& x, const AlgebraElement& y);
bool element_eq(const Algebra& A, const AlgebraElement& x, const AlgebraElement& y);
std::string element_str(const Algebra& A, const AlgebraElement& x);

// coordinates over block (src,tgt); zero element maps to a zero vector
std::vector<Scalar> element_coords(const Algebra& A, const AlgebraElement& x, int src, int tgt);
AlgebraElement element_from_coords(const Algebra& A, const std::vector<Scalar>& v, int src, int tgt);

enum class SymVerdict { Found, None, Inconclusive };
struct SymmetricForm {
  SymVerdict verdict = SymVerdict::None;
  std::vector<Scalar> lambda;  // functional over the global basis when Found
  std::string note;
};
SymmetricForm check_symmetric(const Algebra& A);

// identity permutation iff weakly symmetric; throws NotSelfInjective.
// Verified honestly: P_i is checked isomorphic to the injective envelope
// of S_{nu(i)} at module level, not just by socle inspection.
std::vector<int> nakayama_permutation(const Algebra& A);

// ω spanning soc(P_i) ∩ e_i Λ e_i; throws NotWeaklySymmetric
AlgebraElement socle_generator(const Algebra& A, int i);

int center_dimension(const Algebra& A);

}  // namespace sforge
