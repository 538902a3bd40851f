#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sforge {

// Every engine failure is thrown as an Error with a stable code string.
// The CLI maps codes to exit codes; tests match on the code, not the text.
struct Error : std::runtime_error {
  std::string code;
  Error(std::string c, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)) {}
};

[[noreturn]] void fail(const std::string& code, const std::string& msg);

enum class FieldKind { Prime, Rational };

// Meaning depends on the owning Field.
//   Prime field: a = residue in [0, p), b = 1 always.
//   Rationals:   a/b in lowest terms, b > 0.
// Rational arithmetic runs through 128-bit intermediates and throws
// Error("Overflow") if a reduced result leaves 64 bits. It never wraps.
struct Scalar {
  long long a = 0;
  long long b = 1;
  bool operator==(const Scalar& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }
};

class Field {
 public:
  static Field prime(long long p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }
  long long characteristic() const { return kind_ == FieldKind::Prime ? p_ : 0; }

  Scalar zero() const { return {0, 1}; }
  Scalar one() const { return {1, 1}; }
  Scalar from_int(long long n) const;
  Scalar from_fraction(long long num, long long den) const;

  bool is_zero(const Scalar& x) const { return x.a == 0; }
  bool is_one(const Scalar& x) const { return x.a == 1 && x.b == 1; }
  bool eq(const Scalar& x, const Scalar& y) const { return x == y; }

  Scalar add(const Scalar& x, const Scalar& y) const;
  Scalar sub(const Scalar& x, const Scalar& y) const;
  Scalar mul(const Scalar& x, const Scalar& y) const;
  Scalar neg(const Scalar& x) const;
  Scalar inv(const Scalar& x) const;
  Scalar div(const Scalar& x, const Scalar& y) const { return mul(x, inv(y)); }

  std::string to_string(const Scalar& x) const;
  // Accepts "n" and "n/d", with optional leading minus.
  Scalar parse(const std::string& text) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  FieldKind kind_ = FieldKind::Rational;
  long long p_ = 0;
};

// Fixed-sequence PRNG for the seeded search fallbacks. <random> engines are
// not bit-stable across standard libraries; this is.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
};

}  // namespace sforge
