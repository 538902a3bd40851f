#pragma once

#include <string>
#include <vector>

#include "sforge/endo.hpp"
#include "sforge/mutation.hpp"

namespace sforge {

// Numerical fingerprint stable under renaming of vertices and arrows.
// cartan and layers are stored after applying the vertex permutation that
// makes the flattened pair (cartan, layers) lexicographically least. The
// permutation search runs all n! orders for n <= 7; past that exact_perm
// is false and only order-free data may be compared.
struct InvariantRecord {
  int dim = 0;
  int center = 0;
  int loewy = 0;
  bool exact_perm = true;
  std::vector<std::vector<int>> cartan;               // dim e_i Λ e_j
  std::vector<std::vector<std::vector<int>>> layers;  // [k][i][j] = dim e_i J^k e_j, k >= 1
};

InvariantRecord invariants(const Algebra& A);

// True when the records cannot tell the algebras apart. On mismatch the
// first differing quantity is written to *witness.
bool same_invariants(const InvariantRecord& a, const InvariantRecord& b,
                     std::string* witness = nullptr);

// An isomorphism A -> B as explicit substitution data: vertex v goes to
// vertex_map[v] and the arrow at position t of quiver.arrows goes to
// arrow_image[t], an element of B supported on paths of length >= 1.
struct IsoCertificate {
  std::vector<int> vertex_map;
  std::vector<AlgebraElement> arrow_image;
};

// Recheck from scratch: the vertex map is a bijection, arrow images sit in
// the matching radical blocks, every defining relation of A evaluates to
// zero in B, the images generate J_B modulo its square, and the dimensions
// agree. Those five facts force an isomorphism in both directions.
bool verify_iso_certificate(const Algebra& A, const Algebra& B, const IsoCertificate& c,
                            std::string* why = nullptr);

// Λ/soc(P_i) -> E/soc(~P_i) recorded over the endo table basis, where the
// table was built on the silting summands with the mutated complex first.
// Summand 0 of the table plays the role of vertex i; stalk vertices keep
// their order around it. Row x of phi holds the image of global basis
// element x of the algebra.
struct PhiCertificate {
  int vertex = -1;
  Mat phi;
  std::vector<Scalar> socle_line;  // table coordinates of the defect socle class
};

bool verify_phi_certificate(const Algebra& A, const TableAlgebra& T, const PhiCertificate& c,
                            std::string* why = nullptr);

enum class VerdictKind { Isomorphic, SocleEquivalentAt, Distinct, Inconclusive };

// Search outcomes are values, never exceptions: Distinct carries the
// separating invariant in note, Inconclusive the reason the search stopped.
struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  int vertex = -1;     // SocleEquivalentAt
  IsoCertificate iso;  // Isomorphic
  PhiCertificate phi;  // SocleEquivalentAt, when built by construct_phi
  std::string note;
};

// Bounded isomorphism search. Invariant screen first, then vertex
// bijections compatible with the fingerprint, then per bijection a depth
// first scan over blockwise linear substitutions x_a -> Σ c_ab x_b. A leaf
// whose relation residues all sit deep enough in the radical is finished
// by iterated linear corrections of degree >= 2. Positive answers are
// re-verified through verify_iso_certificate before being returned; the
// budget caps search nodes and correction rounds together.
EquivalenceVerdict iso_search(const Algebra& A, const Algebra& B, long long budget = 200000);

// Socle equivalence certificate for a closed resolution at vertex i = R.vertex.
// E must be the endo data of the silting summands, mutated complex first.
// Basis element x of the algebra becomes a chain map class by
//   stalk to stalk   the one-component map given by x itself,
//   out of P_i       postcompose with d+,
//   into P_i         lift through d+,
//   P_i to P_i       ladder lift along the resolution.
// Multiplicativity is then verified on every composable basis pair: exact
// when neither end touches i, modulo the socle line of the mutated summand
// otherwise. Failures throw PhiVerificationFailed naming the first bad pair.
EquivalenceVerdict construct_phi(const Algebra& A, const Resolution& R, const AlgMat& d_plus,
                                 const EndoData& E);

}  // namespace sforge
