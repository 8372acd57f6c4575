#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hyperstir/exact.hpp"
#include "hyperstir/polynomial.hpp"

namespace hyperstir {

/// Formal power series known modulo t^order.
///
/// Binary operations on operands of different orders truncate to the smaller
/// one, so coefficient k of a result depends only on coefficients <= k of the
/// operands.
class TruncatedSeries {
 public:
  static constexpr std::size_t kDefaultOrder = 16;

  explicit TruncatedSeries(std::size_t order = kDefaultOrder);
  /// Pads with zeros or truncates to `order`.
  TruncatedSeries(std::vector<Rational> coefficients, std::size_t order);

  static TruncatedSeries constant(const Rational& c, std::size_t order = kDefaultOrder);
  /// The series t.
  static TruncatedSeries variable(std::size_t order = kDefaultOrder);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order = kDefaultOrder);

  std::size_t order() const { return coeffs_.size(); }
  /// Zero for k >= order.
  const Rational& coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) { return a * c; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

  /// "order=N: [c0, c1, ...]"
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Precondition failures of the transcendental series operations.
class SeriesError : public std::domain_error {
 public:
  enum class Kind {
    ExpNeedsZeroConstant,
    LogNeedsUnitConstant,
    InvertNeedsNonzeroConstant,
  };
  SeriesError(Kind kind, const std::string& what) : std::domain_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// exp(s); requires s(0) = 0.
TruncatedSeries exp(const TruncatedSeries& s);
/// log(s); requires s(0) = 1.
TruncatedSeries log(const TruncatedSeries& s);
/// 1 / s; requires s(0) != 0.
TruncatedSeries invert(const TruncatedSeries& s);
/// s^e; negative exponents require s(0) != 0.
TruncatedSeries power(const TruncatedSeries& s, Index e);

}  // namespace hyperstir
