#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sforge/equivalence.hpp"

using namespace sforge;

namespace {

Algebra n23() { return build_algebra(oracle::pres_nakayama(Field::prime(5), 2, 3)); }

// loop at the chosen vertex plus one arrow out of it, rho^2 = rho alpha = 0
AlgebraPresentation pres_loop_out(const Field& F, int loop_at) {
  AlgebraPresentation P;
  P.field = F;
  P.quiver.n = 2;
  int other = 1 - loop_at;
  P.quiver.arrows = {{"rho", loop_at, loop_at}, {"alpha", loop_at, other}};
  P.quiver.finalize();
  P.relations = {{{F.one(), oracle::opath(P.quiver, {"rho", "rho"})}},
                 {{F.one(), oracle::opath(P.quiver, {"rho", "alpha"})}}};
  return P;
}

// mirror image: arrows point into the loop vertex instead of out of it
AlgebraPresentation pres_loop_in(const Field& F) {
  AlgebraPresentation P;
  P.field = F;
  P.quiver.n = 2;
  P.quiver.arrows = {{"rho", 1, 1}, {"alpha", 0, 1}};
  P.quiver.finalize();
  P.relations = {{{F.one(), oracle::opath(P.quiver, {"rho", "rho"})}},
                 {{F.one(), oracle::opath(P.quiver, {"alpha", "rho"})}}};
  return P;
}

AlgebraPresentation pres_square_twisted(const Field& F) {
  AlgebraPresentation P = oracle::pres_square(F);
  P.relations = {{{F.one(), oracle::opath(P.quiver, {"a", "b"})},
                  {F.from_int(-2), oracle::opath(P.quiver, {"c", "d"})}}};
  return P;
}

}  // namespace

TEST_CASE("invariants do not depend on the vertex labeling") {
  Field F = Field::prime(5);
  Algebra A = build_algebra(pres_loop_out(F, 0));
  Algebra B = build_algebra(pres_loop_out(F, 1));
  std::string w;
  CHECK(same_invariants(invariants(A), invariants(B), &w));
  CHECK(w.empty());

  InvariantRecord r = invariants(A);
  CHECK(r.dim == 4);
  CHECK(r.loewy == 2);
  CHECK(r.exact_perm);
}

TEST_CASE("an algebra is isomorphic to itself through the identity") {
  Algebra A = build_algebra(oracle::pres_wsa123_f5());
  EquivalenceVerdict v = iso_search(A, A);
  REQUIRE(v.kind == VerdictKind::Isomorphic);
  for (int t = 0; t < A.n(); t++) CHECK(v.iso.vertex_map[t] == t);
  CHECK(verify_iso_certificate(A, A, v.iso));
}

TEST_CASE("a twisted relation coefficient is absorbed by rescaling arrows") {
  Field F = Field::prime(5);
  Algebra A = build_algebra(oracle::pres_square(F));
  Algebra B = build_algebra(pres_square_twisted(F));
  EquivalenceVerdict v = iso_search(A, B);
  REQUIRE(v.kind == VerdictKind::Isomorphic);
  CHECK(verify_iso_certificate(A, B, v.iso));

  // the identity substitution is not one: some arrow must pick up a scalar
  bool rescaled = false;
  for (const AlgebraElement& e : v.iso.arrow_image) {
    REQUIRE(e.terms.size() == 1);
    if (!F.is_one(e.terms[0].second)) rescaled = true;
  }
  CHECK(rescaled);

  IsoCertificate broken = v.iso;
  broken.arrow_image[3] = element_zero();
  std::string why;
  CHECK(!verify_iso_certificate(A, B, broken, &why));
  CHECK(why.find("zero") != std::string::npos);
}

TEST_CASE("relabeled vertices are matched by the bijection scan") {
  Field F = Field::prime(5);
  Algebra A = build_algebra(pres_loop_out(F, 0));
  Algebra C = build_algebra(pres_loop_out(F, 1));
  EquivalenceVerdict v = iso_search(A, C);
  REQUIRE(v.kind == VerdictKind::Isomorphic);
  CHECK(v.iso.vertex_map == std::vector<int>{1, 0});
  CHECK(verify_iso_certificate(A, C, v.iso));
}

TEST_CASE("invariant screens separate what they can") {
  Field F = Field::prime(5);
  Algebra D2 = build_algebra(oracle::pres_dual_numbers(F));
  AlgebraPresentation x3 = oracle::pres_dual_numbers(F);
  x3.relations = {{{F.one(), oracle::opath(x3.quiver, {"rho", "rho", "rho"})}}};
  Algebra D3 = build_algebra(x3);
  EquivalenceVerdict v = iso_search(D2, D3);
  CHECK(v.kind == VerdictKind::Distinct);
  CHECK(v.note.find("dimension") != std::string::npos);

  v = iso_search(n23(), build_algebra(oracle::pres_square(F)));
  CHECK(v.kind == VerdictKind::Distinct);
  CHECK(v.note.find("vertex count") != std::string::npos);

  // mirror images share all counts except the aligned Cartan form
  Algebra A = build_algebra(pres_loop_out(F, 0));
  Algebra B = build_algebra(pres_loop_in(F));
  v = iso_search(A, B);
  CHECK(v.kind == VerdictKind::Distinct);
  CHECK(v.note.find("Cartan") != std::string::npos);
}

TEST_CASE("an exhausted budget is reported as inconclusive") {
  Algebra A = build_algebra(oracle::pres_wsa123_f5());
  EquivalenceVerdict v = iso_search(A, A, 1);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.note.find("budget exhausted") != std::string::npos);
}

TEST_CASE("sequential socle quotients match the full one") {
  Algebra A = n23();
  PresentedAlgebra full = socle_quotient(A);
  CHECK(full.alg.dim() == 4);

  PresentedAlgebra step1 = socle_quotient_at(A, 0);
  CHECK(step1.alg.dim() == 5);
  PresentedAlgebra step2 = socle_quotient_at(step1.alg, 1);
  CHECK(step2.alg.dim() == 4);

  EquivalenceVerdict v = iso_search(step2.alg, full.alg);
  CHECK(v.kind == VerdictKind::Isomorphic);
}

TEST_CASE("the socle quotient of the dual numbers is the base field") {
  Field F = Field::prime(5);
  PresentedAlgebra sq = socle_quotient(build_algebra(oracle::pres_dual_numbers(F)));
  CHECK(sq.alg.dim() == 1);
  CHECK(sq.alg.n() == 1);
  CHECK(sq.pres.quiver.arrows.empty());

  CHECK_THROWS_AS(socle_quotient(build_algebra(oracle::pres_square(F))), Error);
}

TEST_CASE("the quotient map certificate is built and rechecked at both vertices") {
  Algebra A = n23();
  for (int i = 0; i < 2; i++) {
    Resolution R = build_addq_resolution(A, i, 2);
    Closure c = find_periodic_closure(A, R);
    REQUIRE(c.kind == ClosureKind::Found);
    ProjComplex P = mutation_complex(A, R, 2);
    EndoData E = endo_algebra(A, silting_summands(A, P, i));
    EquivalenceVerdict v = construct_phi(A, R, c.d_plus, E);
    CHECK(v.kind == VerdictKind::SocleEquivalentAt);
    CHECK(v.vertex == i);
    std::string why;
    CHECK(verify_phi_certificate(A, E.T, v.phi, &why));
    CHECK(why.empty());

    // the certificate pins an isomorphism between the two socle quotients
    Mat line(1, E.T.dim());
    line.set_row(0, v.phi.socle_line);
    PresentedAlgebra eq = present_table(table_quotient(E.T, line));
    PresentedAlgebra aq = socle_quotient_at(A, i);
    EquivalenceVerdict w = iso_search(aq.alg, eq.alg);
    CHECK(w.kind == VerdictKind::Isomorphic);
  }
}

TEST_CASE("tampered quotient certificates are rejected") {
  Algebra A = n23();
  Resolution R = build_addq_resolution(A, 0, 2);
  Closure c = find_periodic_closure(A, R);
  REQUIRE(c.kind == ClosureKind::Found);
  EndoData E = endo_algebra(A, silting_summands(A, mutation_complex(A, R, 2), 0));
  EquivalenceVerdict v = construct_phi(A, R, c.d_plus, E);

  Field F = A.pres.field;
  PhiCertificate bent = v.phi;
  int row = -1;
  for (int g = 0; g < A.dim(); g++)
    if (g != A.idem[0] && g != A.idem[1]) {
      row = g;
      break;
    }
  REQUIRE(row >= 0);
  std::vector<Scalar> r = bent.phi.row(row);
  for (Scalar& s : r) s = F.mul(F.from_int(2), s);
  bent.phi.set_row(row, r);
  std::string why;
  CHECK(!verify_phi_certificate(A, E.T, bent, &why));
  CHECK(!why.empty());

  PhiCertificate blank = v.phi;
  for (Scalar& s : blank.socle_line) s = F.zero();
  CHECK(!verify_phi_certificate(A, E.T, blank, &why));
  CHECK(why.find("zero") != std::string::npos);
}
