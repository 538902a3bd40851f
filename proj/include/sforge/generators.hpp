#pragma once

#include <vector>

#include "sforge/algebra.hpp"

namespace sforge {

// Socle-deformed weighted surface algebra on the triangulation quiver with
// two proper triangles, one self-folded triangle and one border loop
// (vertices 1..5). The weights m, n, p sit on the cycle orbits
// (alpha beta eps eta nu delta rho), (xi mu) and (sigma); a, c, d are the
// orbit parameters and b the border scalar attached to vertex 1.
struct WSAParams {
  int m = 1;
  int n = 2;
  int p = 3;
  Scalar a{1, 1};  // nonzero
  Scalar c{1, 1};  // nonzero
  Scalar d{1, 1};  // nonzero
  Scalar b{0, 1};  // border deformation, zero allowed
  // With n = 1 the arrows xi and mu collapse onto the paths beta*nu and
  // delta*alpha. That folded presentation is only built when this flag is
  // set; without it n = 1 is rejected outright.
  bool fold_virtual = false;
};

AlgebraPresentation weighted_surface_example(const Field& F, const WSAParams& params);

// Cyclic quiver on `vertices` vertices, all paths of length `loewy` set to
// zero. Weakly symmetric iff loewy = 1 mod vertices; that is left to
// check_symmetric rather than assumed here.
struct NakayamaParams {
  int vertices = 1;
  int loewy = 2;
};

AlgebraPresentation symmetric_nakayama(const Field& F, const NakayamaParams& params);

enum class LoopKind { None, Border, SelfFolded };

const char* loop_kind_name(LoopKind k);

// Per-vertex loop classification, read back from the metadata the weighted
// surface generator stamps. Throws MetadataMissing when the presentation
// does not carry it.
std::vector<LoopKind> classify_loops(const AlgebraPresentation& pres);

}  // namespace sforge
