#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sforge/algebra.hpp"

namespace sforge {

// right module over A: arrow a: u -> v acts by a dims[u] x dims[v] matrix on
// row vectors
struct Representation {
  const Algebra* A = nullptr;
  std::vector<int> dims;
  std::vector<Mat> act;
  int total() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

// per-vertex matrices of a module map M -> N, acting on row vectors
struct ModuleHom {
  std::vector<Mat> h;
};

Representation rep_zero(const Algebra& A);
Representation rep_simple(const Algebra& A, int v);
Representation rep_projective(const Algebra& A, int v);

// direct sum of projectives with explicit coordinate bookkeeping
struct ProjSum {
  const Algebra* A = nullptr;
  std::vector<int> verts;  // summand vertices in order
  Representation rep;
  std::vector<std::vector<int>> chunk;  // chunk[c][u] = offset of copy c inside vertex u
  int gen_coord(int c) const;           // coordinate of the generator of copy c
};
ProjSum proj_sum(const Algebra& A, const std::vector<int>& verts);

void rep_validate(const Representation& M);

ModuleHom hom_zero(const Representation& M, const Representation& N);
ModuleHom hom_identity(const Representation& M);
ModuleHom hom_compose(const Representation& M, const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_add(const Representation& M, const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_scale(const Representation& M, const Scalar& c, const ModuleHom& f);
bool hom_is_zero(const Representation& M, const ModuleHom& f);
bool hom_eq(const Representation& M, const ModuleHom& f, const ModuleHom& g);
bool hom_invertible(const Representation& M, const Representation& N, const ModuleHom& f);
void hom_check(const Representation& M, const Representation& N, const ModuleHom& f);

// canonical basis of Hom(M, N)
std::vector<ModuleHom> hom_space(const Representation& M, const Representation& N);

// map P_v -> M sending the generator to the row m (coordinates in M at vertex v)
ModuleHom hom_from_generator(const Representation& M, int v, const std::vector<Scalar>& m);

// left multiplication by x in e_j Λ e_l as a map P_l -> P_j
ModuleHom left_mult_hom(const Algebra& A, const AlgebraElement& x);

struct SubRep {
  Representation rep;
  ModuleHom incl;
};
struct QuotRep {
  Representation rep;
  ModuleHom proj;
};

SubRep kernel_of(const Representation& M, const Representation& N, const ModuleHom& f);
SubRep image_of(const Representation& M, const Representation& N, const ModuleHom& f);
QuotRep cokernel_of(const Representation& M, const Representation& N, const ModuleHom& f);
SubRep radical_of(const Representation& M);
SubRep socle_of(const Representation& M);

struct Cover {
  ProjSum P;
  ModuleHom p;  // P -> M, a projective cover
};
Cover projective_cover(const Representation& M);

struct Syzygy {
  Cover cover;
  Representation omega;  // kernel of the cover
  ModuleHom incl;        // omega -> cover.P.rep
};
Syzygy syzygy(const Representation& M);  // throws ZeroModule on M = 0

struct Envelope {
  ProjSum E;
  ModuleHom emb;  // M -> E, an injective envelope
};
Envelope injective_envelope(const Representation& M);

enum class IsoKind { Iso, Distinct, Inconclusive };
struct IsoOutcome {
  IsoKind kind = IsoKind::Inconclusive;
  ModuleHom iso;
  std::string witness;
};
IsoOutcome module_iso(const Representation& M, const Representation& N);

std::optional<int> period_of_simple(const Algebra& A, int i, int max_d);

struct Approximation {
  std::vector<int> verts;  // codomain (left) or domain (right) summand vertices
  ProjSum Q;
  ModuleHom f;  // X -> Q (left) or Q -> X (right)
};
Approximation minimal_left_approximation(const Representation& X, int avoid_vertex);
Approximation minimal_right_approximation(const Representation& X, int avoid_vertex);

}  // namespace sforge
