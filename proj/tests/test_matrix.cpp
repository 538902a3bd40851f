#include "doctest.h"
#include "sforge/matrix.hpp"

using namespace sforge;

namespace {

Mat from_ints(const Field& F, int r, int c, std::initializer_list<int> vals) {
  Mat M(r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; i++)
    for (int j = 0; j < c; j++) M.at(i, j) = F.from_int(*it++);
  return M;
}

}  // namespace

TEST_CASE("rref hand example") {
  Field Q = Field::rationals();
  Mat M = from_ints(Q, 3, 4, {1, 2, 0, 3, 2, 4, 1, 7, 0, 0, 1, 1});
  std::vector<int> piv = rref(Q, M);
  REQUIRE(piv == std::vector<int>{0, 2});
  CHECK(M.at(0, 0) == Q.one());
  CHECK(M.at(0, 1) == Q.from_int(2));
  CHECK(M.at(0, 2) == Q.zero());
  CHECK(M.at(0, 3) == Q.from_int(3));
  CHECK(M.at(1, 2) == Q.one());
  CHECK(M.at(1, 3) == Q.one());
  CHECK(is_zero(Q, Mat(M.r - 2, M.c)) == true);
  CHECK(rank(Q, M) == 2);
}

TEST_CASE("left kernel annihilates and has full rank") {
  Field F = Field::prime(5);
  Mat M = from_ints(F, 3, 2, {1, 2, 2, 4, 1, 0});
  Mat K = left_kernel(F, M);
  REQUIRE(K.r == 1);
  CHECK(is_zero(F, mul(F, K, M)));
  Field Q = Field::rationals();
  Mat Id = mat_identity(Q, 3);
  CHECK(left_kernel(Q, Id).r == 0);
  Mat Z(2, 3);
  CHECK(left_kernel(Q, Z).r == 2);
}

TEST_CASE("solve_left finds canonical solutions") {
  Field Q = Field::rationals();
  Mat A = from_ints(Q, 2, 3, {1, 0, 1, 0, 1, 1});
  Mat B = from_ints(Q, 2, 3, {1, 1, 2, 2, 3, 5});
  Mat X(0, 0);
  REQUIRE(solve_left(Q, A, B, X));
  CHECK(equal(mul(Q, X, A), B));
  Mat bad = from_ints(Q, 1, 3, {1, 0, 0});
  CHECK(!solve_left(Q, A, bad, X));
}

TEST_CASE("inverse") {
  Field F = Field::prime(7);
  Mat A = from_ints(F, 2, 2, {1, 2, 3, 4});
  Mat Inv(0, 0);
  REQUIRE(inverse(F, A, Inv));
  CHECK(is_identity(F, mul(F, A, Inv)));
  CHECK(is_identity(F, mul(F, Inv, A)));
  Mat S = from_ints(F, 2, 2, {1, 2, 2, 4});
  CHECK(!inverse(F, S, Inv));
}

TEST_CASE("matrix algebra identities") {
  Field F = Field::prime(11);
  Mat A = from_ints(F, 2, 3, {1, 2, 3, 4, 5, 6});
  Mat B = from_ints(F, 3, 2, {7, 8, 9, 10, 0, 1});
  Mat C = from_ints(F, 2, 2, {1, 1, 0, 1});
  CHECK(equal(mul(F, mul(F, A, B), C), mul(F, A, mul(F, B, C))));
  CHECK(equal(transpose(mul(F, A, B)), mul(F, transpose(B), transpose(A))));
  CHECK(equal(add(F, A, neg(F, A)), Mat(2, 3)));
  Mat H = hstack(A, A);
  CHECK(H.r == 2);
  CHECK(H.c == 6);
  Mat V = vstack(A, A);
  CHECK(V.r == 4);
  CHECK(V.c == 3);
}

TEST_CASE("echelon tracks expressions") {
  Field F = Field::prime(5);
  Echelon e(F, 3);
  std::vector<Scalar> r1 = {F.from_int(1), F.from_int(2), F.from_int(0)};
  std::vector<Scalar> r2 = {F.from_int(0), F.from_int(1), F.from_int(1)};
  std::vector<Scalar> r3 = {F.from_int(1), F.from_int(3), F.from_int(1)};  // r1 + r2
  CHECK(e.add_row(r1));
  CHECK(e.add_row(r2));
  std::vector<Scalar> combo;
  CHECK(!e.add_row(r3, &combo));
  REQUIRE(combo.size() == 2);
  // r3 = 1*r1 + 1*r2 in terms of the added rows
  CHECK(combo[0] == F.one());
  CHECK(combo[1] == F.one());
  CHECK(e.rank() == 2);
  CHECK(e.added() == 3);
  CHECK(e.contains(r3));
  std::vector<Scalar> out = {F.one(), F.zero(), F.zero()};
  CHECK(!e.contains(out));
  // contains reports the expression too
  std::vector<Scalar> expr;
  CHECK(e.contains(r1, &expr));
  CHECK(expr[0] == F.one());
  CHECK(expr[1] == F.zero());
}

TEST_CASE("echelon basis is canonical regardless of feed order") {
  Field Q = Field::rationals();
  Echelon a(Q, 3), b(Q, 3);
  std::vector<Scalar> r1 = {Q.from_int(1), Q.from_int(1), Q.from_int(0)};
  std::vector<Scalar> r2 = {Q.from_int(0), Q.from_int(1), Q.from_int(1)};
  a.add_row(r1);
  a.add_row(r2);
  b.add_row(r2);
  b.add_row(r1);
  CHECK(equal(a.basis(), b.basis()));
}
