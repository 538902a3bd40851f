#include "sforge/field.hpp"

#include <cstdlib>
#include <limits>

namespace sforge {

void fail(const std::string& code, const std::string& msg) {
  throw Error(code, msg);
}

namespace {

using i128 = __int128;

long long const I64_MAX = std::numeric_limits<long long>::max();

i128 iabs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 x, i128 y) {
  x = iabs128(x);
  y = iabs128(y);
  while (y != 0) {
    i128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

long long narrow(i128 x, const char* what) {
  if (x > (i128)I64_MAX || x < -(i128)I64_MAX)
    fail("Overflow", std::string("rational ") + what +
                         " exceeds 64 bits; consider a prime field");
  return (long long)x;
}

// Reduce num/den to lowest terms with den > 0, checking the result fits.
Scalar make_rat(i128 num, i128 den) {
  if (den == 0) fail("Internal", "rational with zero denominator");
  if (num == 0) return {0, 1};
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  num /= g;
  den /= g;
  return {narrow(num, "numerator"), narrow(den, "denominator")};
}

long long mod_reduce(long long n, long long p) {
  long long r = n % p;
  return r < 0 ? r + p : r;
}

long long mul_mod(long long x, long long y, long long p) {
  return (long long)((i128)x * y % p);
}

// Extended Euclid. p prime, 0 < a < p.
long long inv_mod(long long a, long long p) {
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return mod_reduce(t, p);
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(long long p) {
  if (!is_prime(p))
    fail("ParseError", "field.prime must be a prime number, got " + std::to_string(p));
  Field F;
  F.kind_ = FieldKind::Prime;
  F.p_ = p;
  return F;
}

Field Field::rationals() { return Field{}; }

Scalar Field::from_int(long long n) const {
  if (kind_ == FieldKind::Prime) return {mod_reduce(n, p_), 1};
  return {n, 1};
}

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) fail("ParseError", "zero denominator in coefficient");
  if (kind_ == FieldKind::Prime) {
    long long d = mod_reduce(den, p_);
    if (d == 0) fail("ParseError", "coefficient denominator divisible by field characteristic");
    return {mul_mod(mod_reduce(num, p_), inv_mod(d, p_), p_), 1};
  }
  return make_rat(num, den);
}

Scalar Field::add(const Scalar& x, const Scalar& y) const {
  if (kind_ == FieldKind::Prime) {
    long long s = x.a + y.a;
    if (s >= p_) s -= p_;
    return {s, 1};
  }
  return make_rat((i128)x.a * y.b + (i128)y.a * x.b, (i128)x.b * y.b);
}

Scalar Field::sub(const Scalar& x, const Scalar& y) const {
  if (kind_ == FieldKind::Prime) {
    long long s = x.a - y.a;
    if (s < 0) s += p_;
    return {s, 1};
  }
  return make_rat((i128)x.a * y.b - (i128)y.a * x.b, (i128)x.b * y.b);
}

Scalar Field::mul(const Scalar& x, const Scalar& y) const {
  if (kind_ == FieldKind::Prime) return {mul_mod(x.a, y.a, p_), 1};
  return make_rat((i128)x.a * y.a, (i128)x.b * y.b);
}

Scalar Field::neg(const Scalar& x) const {
  if (kind_ == FieldKind::Prime) return {x.a == 0 ? 0 : p_ - x.a, 1};
  return {-x.a, x.b};
}

Scalar Field::inv(const Scalar& x) const {
  if (x.a == 0) fail("Internal", "division by zero scalar");
  if (kind_ == FieldKind::Prime) return {inv_mod(x.a, p_), 1};
  return make_rat((i128)x.b, (i128)x.a);
}

std::string Field::to_string(const Scalar& x) const {
  if (x.b == 1) return std::to_string(x.a);
  return std::to_string(x.a) + "/" + std::to_string(x.b);
}

Scalar Field::parse(const std::string& text) const {
  if (text.empty()) fail("ParseError", "empty coefficient");
  std::size_t slash = text.find('/');
  char* end = nullptr;
  errno = 0;
  if (slash == std::string::npos) {
    long long n = std::strtoll(text.c_str(), &end, 10);
    if (errno != 0 || end != text.c_str() + text.size())
      fail("ParseError", "bad coefficient '" + text + "'");
    return from_int(n);
  }
  std::string ns = text.substr(0, slash), ds = text.substr(slash + 1);
  long long n = std::strtoll(ns.c_str(), &end, 10);
  if (errno != 0 || ns.empty() || end != ns.c_str() + ns.size())
    fail("ParseError", "bad coefficient '" + text + "'");
  errno = 0;
  long long d = std::strtoll(ds.c_str(), &end, 10);
  if (errno != 0 || ds.empty() || end != ds.c_str() + ds.size())
    fail("ParseError", "bad coefficient '" + text + "'");
  return from_fraction(n, d);
}

}  // namespace sforge
