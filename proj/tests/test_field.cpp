#include "doctest.h"
#include "sforge/field.hpp"

using namespace sforge;

TEST_CASE("prime field arithmetic") {
  Field F = Field::prime(7);
  CHECK(F.is_prime_field());
  CHECK(F.characteristic() == 7);
  Scalar three = F.from_int(3), five = F.from_int(5);
  CHECK(F.add(three, five) == F.from_int(1));
  CHECK(F.sub(three, five) == F.from_int(5));
  CHECK(F.mul(three, five) == F.from_int(1));
  CHECK(F.mul(F.inv(three), three) == F.one());
  CHECK(F.from_int(-1) == F.from_int(6));
  CHECK(F.from_int(700) == F.zero());
  CHECK(F.is_zero(F.sub(three, three)));
  CHECK(F.to_string(F.from_int(5)) == "5");
  CHECK(F.parse("12") == F.from_int(5));
  CHECK(F.parse("-2") == F.from_int(5));
  CHECK(F.parse("3/4") == F.mul(three, F.inv(F.from_int(4))));
}

TEST_CASE("prime field division by zero") {
  Field F = Field::prime(5);
  CHECK_THROWS_AS(F.inv(F.zero()), Error);
}

TEST_CASE("rational arithmetic stays reduced") {
  Field Q = Field::rationals();
  Scalar half = Q.from_fraction(1, 2);
  Scalar third = Q.from_fraction(1, 3);
  Scalar s = Q.add(half, third);
  CHECK(s.a == 5);
  CHECK(s.b == 6);
  Scalar p = Q.mul(Q.from_fraction(2, 3), Q.from_fraction(3, 4));
  CHECK(p.a == 1);
  CHECK(p.b == 2);
  CHECK(Q.sub(half, half) == Q.zero());
  CHECK(Q.from_fraction(-2, -4) == half);
  CHECK(Q.from_fraction(2, -4) == Q.neg(half));
  CHECK(Q.inv(Q.from_fraction(-3, 7)) == Q.from_fraction(-7, 3));
  CHECK(Q.to_string(Q.from_fraction(-1, 3)) == "-1/3");
  CHECK(Q.to_string(Q.from_int(4)) == "4");
  CHECK(Q.parse("-6/8") == Q.from_fraction(-3, 4));
}

TEST_CASE("rational overflow is an error, not a wrap") {
  Field Q = Field::rationals();
  Scalar big = Q.from_int(1);
  bool threw = false;
  try {
    for (int i = 0; i < 80; i++) big = Q.mul(big, Q.from_int(1000000));
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code == "Overflow");
  }
  CHECK(threw);
}

TEST_CASE("field parse rejects junk") {
  Field Q = Field::rationals();
  CHECK_THROWS_AS(Q.parse("abc"), Error);
  CHECK_THROWS_AS(Q.parse("1/0"), Error);
  CHECK_THROWS_AS(Q.parse(""), Error);
}

TEST_CASE("splitmix64 is the reference sequence") {
  SplitMix64 r(0);
  CHECK(r.next() == 0xE220A8397B1DCDAFull);
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 20; i++) CHECK(a.next() == b.next());
  SplitMix64 c(7);
  for (int i = 0; i < 100; i++) CHECK(c.below(13) < 13);
}
