#pragma once

#include <optional>

#include "sforge/complex.hpp"

namespace sforge {

// P_i -> Q_1 -> Q_2 -> ... by minimal left approximations into add(Λ/P_i),
// each step being (cokernel of the previous map) -> (its approximation).
// f[j] is the algebra matrix of f^{j+1}: Q_j -> Q_{j+1}, with Q_0 = P_i.
struct Resolution {
  int vertex = 0;
  std::vector<std::vector<int>> Q;  // Q[0] = {vertex}
  std::vector<AlgMat> f;
  // exact[j]: im f^{j+1} = ker f^{j+2} at the corner Q_{j+1}
  std::vector<bool> exact;
  bool kernel_is_socle = false;  // ker f^1 = soc P_i
};

// Extends R by one approximation step. On top of the module-level minimality
// checks this verifies the factorization property directly in K^b: every
// chain map P^(k) -> P_t[0], t != i, factors through the new f. Throws
// ApproximationVerificationFailed when it does not.
void mutate_step(const Algebra& A, Resolution& R);
Resolution build_addq_resolution(const Algebra& A, int vertex, int steps);

// the complex P^(k): P_i -> Q_1 -> ... -> Q_k in degrees -k..0
ProjComplex mutation_complex(const Algebra& A, const Resolution& R, int k);

// summands of the silting object P^(k) ⊕ ⊕_{t != i} P_t[0], the complex first
std::vector<ProjComplex> silting_summands(const Algebra& A, const ProjComplex& P, int vertex);

enum class ClosureKind { Found, NoneFound };
struct Closure {
  ClosureKind kind = ClosureKind::NoneFound;
  AlgMat d_plus;  // Q_m -> P_i with im = rad P_i and ker = im f^m
  std::string note;
};
// Solves f^m then x = 0 for x: Q_m -> P_i and hunts for a solution with
// im x = rad P_i and ker x = im f^m: greedy rank growth, then seeded random
// combinations, then exhaustive enumeration when the space is small.
Closure find_periodic_closure(const Algebra& A, const Resolution& R);

// Periodic continuation once the loop is closed: the terms repeat with
// period m, the seam map f^{m+1} is d+ then f^1, and later steps reuse the
// stored ones. Valid for k >= 1.
std::vector<int> periodic_term(const Resolution& R, int k);
AlgMat periodic_step(const Algebra& A, const Resolution& R, const AlgMat& d_plus, int k);
ProjComplex mutation_complex_extended(const Algebra& A, const Resolution& R,
                                      const AlgMat& d_plus, int k);

// The add-Q resolution read off the injective coresolution of S_i, with the
// closing map back to P_i. nullopt when the envelope of S_i is not P_i, when
// an interior term touches P_i, or when the loop does not close within
// max_steps.
struct Coresolution {
  Resolution res;
  AlgMat d_plus;
};
std::optional<Coresolution> from_projective_resolution(const Algebra& A, int vertex,
                                                       int max_steps);

// Rebuilds the canonical resolution of the same length and verifies R is
// isomorphic to it through an explicit ladder of invertible maps fixing P_i.
// Returns the canonical resolution; throws ApproximationVerificationFailed
// when the ladder cannot be established.
Resolution canonical_form(const Algebra& A, const Resolution& R);

}  // namespace sforge
