#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hyperstir {

/// Combinatorial index (n, k, m, i, r, j, q). Values are arbitrary precision,
/// indices are not.
using Index = std::int64_t;

class Rational;

/// Arbitrary-precision signed integer. Zero has a unique representation.
class Integer {
 public:
  Integer() = default;
  Integer(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Integer(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Integer(long long value);           // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class value) : v_(std::move(value)) {}

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  Integer abs() const { return Integer(mpz_class(::abs(v_))); }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  /// Exact quotient; throws std::domain_error if `d` is zero or does not divide.
  Integer divide_exact(const Integer& d) const;

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  /// Optional-sign decimal.
  std::string to_string() const { return v_.get_str(10); }
  /// Throws std::invalid_argument on malformed text.
  static Integer parse(std::string_view text);

  /// Returns true and stores the value if it fits in int64.
  bool fits_int64(std::int64_t* out = nullptr) const;

  const mpz_class& raw() const { return v_; }

 private:
  mpz_class v_;
};

/// Arbitrary-precision fraction, always in lowest terms with positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : v_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : v_(value.raw()) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error if `den` is zero.
  Rational(const Integer& num, const Integer& den);
  explicit Rational(mpq_class value);

  Integer numerator() const { return Integer(mpz_class(v_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  /// Throws std::domain_error for zero.
  Rational reciprocal() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(Index exponent) const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  /// Accepts "p" or "p/q" with optional sign on p; the result is canonicalized.
  static Rational parse(std::string_view text);

  /// Throws std::domain_error if not an integer.
  Integer to_integer() const;

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// n! for n >= 0. Throws std::invalid_argument for negative n.
Integer factorial(Index n);

/// Binomial coefficient for all integer pairs: 0 when k < 0, and the
/// upper-negation extension C(n, k) = (-1)^k C(k - n - 1, k) when n < 0.
Integer binomial(Index n, Index k);

/// x (x + 1) ... (x + k - 1); 1 for k = 0.
Rational rising_factorial_value(const Rational& x, Index k);

/// (-1)^n as an integer sign.
constexpr int alternating_sign(Index n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace hyperstir
