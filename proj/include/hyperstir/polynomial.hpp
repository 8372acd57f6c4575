#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperstir/exact.hpp"

namespace hyperstir {

/// Dense univariate polynomial over Rational. Coefficient i multiplies x^i;
/// the leading coefficient is never zero, so the zero polynomial has no
/// coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  /// Constant polynomial.
  static Polynomial constant(const Rational& c);
  /// c * x^degree.
  static Polynomial monomial(const Rational& c, Index degree);
  /// x + a.
  static Polynomial linear(const Rational& a);

  /// nullopt for the zero polynomial (degree minus infinity).
  std::optional<Index> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k; zero beyond the degree or for k < 0.
  Rational coefficient(Index k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Horner evaluation.
  Rational evaluate(const Rational& x) const;
  /// order-th formal derivative.
  Polynomial derivative(Index order = 1) const;
  /// p(x + a).
  Polynomial shift(const Rational& a) const;
  /// p^e for e >= 0.
  Polynomial pow(Index e) const;

  /// "c0 + c1*x + c2*x^2 + ..." over the nonzero coefficients; "0" for zero.
  std::string to_string() const;
  /// JSON array of canonical coefficient strings, ascending degree.
  std::string to_json() const;
  /// Inverse of to_json. Throws std::invalid_argument on malformed input.
  static Polynomial from_json(const std::string& text);

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, const Rational& c);
Rational poly_eval(const Polynomial& p, const Rational& x);
Polynomial poly_derivative(const Polynomial& p, Index order);
Polynomial poly_shift(const Polynomial& p, const Rational& a);

/// x (x + 1) ... (x + m - 1). The coefficient of x^k is [m, k].
Polynomial rising_factorial_poly(Index m);

/// C(x + n, m) = (x + n)(x + n - 1) ... (x + n - m + 1) / m! as a polynomial in x.
Polynomial binomial_poly(Index n, Index m);

}  // namespace hyperstir
