#include "doctest.h"
#include "oracles.hpp"
#include "sforge/generators.hpp"
#include "sforge/representation.hpp"

using namespace sforge;

using oracle::same_presentation;
using oracle::same_relation;

namespace {

bool rejected_weights(const Field& F, const WSAParams& q) {
  try {
    weighted_surface_example(F, q);
    return false;
  } catch (const Error& e) {
    return e.code == "InvalidWeights";
  }
}

}  // namespace

TEST_CASE("the generated weighted surface instance matches the frozen fixture") {
  Field F = Field::prime(5);
  AlgebraPresentation G = weighted_surface_example(F, WSAParams{});
  CHECK(same_presentation(G, oracle::pres_wsa123_f5()));
  CHECK(G.meta.at("generator") == "weighted-surface");
  CHECK(G.meta.at("weights") == "m=1 n=2 p=3");
  CHECK(G.meta.at("f-orbits") == "(alpha xi delta) (mu beta nu) (eps sigma eta) (rho)");
  CHECK(G.meta.at("g-orbits") == "(sigma) (xi mu) (alpha beta eps eta nu delta rho)");
  CHECK(G.meta.count("loops") == 1);
}

TEST_CASE("the border scalar moves exactly one relation") {
  Field F = Field::prime(5);
  AlgebraPresentation G0 = weighted_surface_example(F, WSAParams{});
  WSAParams pb;
  pb.b = F.one();
  AlgebraPresentation G1 = weighted_surface_example(F, pb);
  REQUIRE(G0.relations.size() == G1.relations.size());
  int moved = -1, count = 0;
  for (size_t r = 0; r < G0.relations.size(); r++)
    if (!same_relation(G0.relations[r], G1.relations[r])) {
      moved = (int)r;
      count++;
    }
  CHECK(count == 1);
  CHECK(moved == 9);  // the loop-squared relation at the border vertex
  REQUIRE(G1.relations[9].size() == 3);
  const RelTerm& extra = G1.relations[9].back();
  CHECK(extra.coeff == F.from_int(-1));
  CHECK(extra.path.arrows.size() == 7);
  Algebra A1 = build_algebra(G1);
  CHECK(A1.dim() == 60);
  CHECK(A1.weakly_symmetric);
}

TEST_CASE("weight guards reject what the construction cannot express") {
  Field F = Field::prime(5);
  WSAParams q;
  q.p = 2;
  CHECK(rejected_weights(F, q));
  q = WSAParams{};
  q.m = 0;
  CHECK(rejected_weights(F, q));
  q = WSAParams{};
  q.n = 1;  // without the fold flag
  CHECK(rejected_weights(F, q));
  q = WSAParams{};
  q.fold_virtual = true;  // fold flag with n = 2
  CHECK(rejected_weights(F, q));
  q = WSAParams{};
  q.a = F.zero();
  CHECK(rejected_weights(F, q));
  q = WSAParams{};
  q.d = F.zero();
  CHECK(rejected_weights(F, q));
}

TEST_CASE("grid instances build with the orbit-weight dimension and period four simples") {
  Field F = Field::prime(5);
  for (int m : {1, 2})
    for (int n : {2, 3})
      for (int p : {3, 4}) {
        WSAParams q;
        q.m = m;
        q.n = n;
        q.p = p;
        Algebra A = build_algebra(weighted_surface_example(F, q));
        CHECK(A.dim() == 49 * m + 4 * n + p);
        CHECK(A.weakly_symmetric);
        for (int i = 0; i < 5; i++)
          CHECK(period_of_simple(A, i, 4) == std::optional<int>(4));
      }
}

TEST_CASE("the folded variant drops the virtual arrows but keeps the algebra") {
  Field F = Field::prime(5);
  WSAParams q;
  q.n = 1;
  q.fold_virtual = true;
  AlgebraPresentation G = weighted_surface_example(F, q);
  CHECK(G.quiver.arrows.size() == 8);
  CHECK(G.quiver.arrow_by_id("xi") < 0);
  CHECK(G.quiver.arrow_by_id("mu") < 0);
  Algebra A = build_algebra(G);
  oracle::OracleAlgebra O = oracle::oracle_build(G);
  CHECK(A.dim() == O.dim);
  CHECK(A.dim() == 49 + 4 + 3);
  CHECK(A.weakly_symmetric);
  CHECK(check_symmetric(A).verdict == SymVerdict::Found);
  for (int i = 0; i < 5; i++)
    CHECK(period_of_simple(A, i, 4) == std::optional<int>(4));
}

TEST_CASE("loop classification reads the stamped metadata") {
  Field F = Field::prime(5);
  AlgebraPresentation G = weighted_surface_example(F, WSAParams{});
  std::vector<LoopKind> kinds = classify_loops(G);
  REQUIRE(kinds.size() == 5);
  CHECK(kinds[0] == LoopKind::Border);
  CHECK(kinds[1] == LoopKind::None);
  CHECK(kinds[2] == LoopKind::None);
  CHECK(kinds[3] == LoopKind::None);
  CHECK(kinds[4] == LoopKind::SelfFolded);
  CHECK(std::string(loop_kind_name(kinds[0])) == "border");
  CHECK(std::string(loop_kind_name(kinds[4])) == "self-folded");
  G.meta.clear();
  try {
    classify_loops(G);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "MetadataMissing");
  }
}

TEST_CASE("the cyclic nakayama generator matches its fixture") {
  Field F = Field::prime(5);
  AlgebraPresentation G = symmetric_nakayama(F, {2, 3});
  CHECK(same_presentation(G, oracle::pres_nakayama(F, 2, 3)));
  CHECK(G.meta.at("generator") == "nakayama");
  CHECK(G.meta.at("weights") == "n=2 ell=3");
  try {
    classify_loops(G);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "MetadataMissing");
  }

  Algebra A12 = build_algebra(symmetric_nakayama(F, {1, 2}));
  CHECK(A12.n() == 1);
  CHECK(A12.dim() == 2);
  CHECK(A12.loewy_length == 2);

  // weakly symmetric exactly when the length is 1 mod the vertex count
  Algebra A34 = build_algebra(symmetric_nakayama(F, {3, 4}));
  CHECK(A34.weakly_symmetric);
  CHECK(check_symmetric(A34).verdict == SymVerdict::Found);
  CHECK(!build_algebra(symmetric_nakayama(F, {2, 4})).weakly_symmetric);

  try {
    symmetric_nakayama(F, {0, 2});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "InvalidWeights");
  }
  try {
    symmetric_nakayama(F, {2, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code == "InvalidWeights");
  }
}
