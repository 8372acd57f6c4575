#include "hyperstir/series.hpp"

#include <algorithm>

namespace hyperstir {

namespace {
const Rational kZero;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients, std::size_t order)
    : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t order) {
  TruncatedSeries s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order > 1) s.coeffs_[1] = Rational(1);
  return s;
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  return TruncatedSeries(p.coefficients(), order);
}

const Rational& TruncatedSeries::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : kZero;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out(std::min(a.order(), b.order()));
  const std::size_t n = out.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const Rational& c) {
  TruncatedSeries out = a;
  for (auto& v : out.coeffs_) v *= c;
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::string out = "order=" + std::to_string(order()) + ": [";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) out += ", ";
    out += coeffs_[k].to_string();
  }
  return out + "]";
}

TruncatedSeries exp(const TruncatedSeries& s) {
  const std::size_t n = s.order();
  if (n > 0 && !s.coefficient(0).is_zero()) {
    throw SeriesError(SeriesError::Kind::ExpNeedsZeroConstant,
                      "exp: series constant term must be 0, got " + s.coefficient(0).to_string());
  }
  // E' = s' E  =>  k E_k = sum_{j=1}^{k} j s_j E_{k-j}
  std::vector<Rational> e(n);
  if (n > 0) e[0] = Rational(1);
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (s.coefficient(j).is_zero()) continue;
      acc += Rational(static_cast<long>(j)) * s.coefficient(j) * e[k - j];
    }
    e[k] = acc / Rational(static_cast<long>(k));
  }
  return TruncatedSeries(std::move(e), n);
}

TruncatedSeries log(const TruncatedSeries& s) {
  const std::size_t n = s.order();
  if (n > 0 && s.coefficient(0) != Rational(1)) {
    throw SeriesError(SeriesError::Kind::LogNeedsUnitConstant,
                      "log: series constant term must be 1, got " + s.coefficient(0).to_string());
  }
  // L' s = s'  =>  k L_k = k s_k - sum_{j=1}^{k-1} j L_j s_{k-j}
  std::vector<Rational> l(n);
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * s.coefficient(k);
    for (std::size_t j = 1; j < k; ++j) {
      acc -= Rational(static_cast<long>(j)) * l[j] * s.coefficient(k - j);
    }
    l[k] = acc / Rational(static_cast<long>(k));
  }
  return TruncatedSeries(std::move(l), n);
}

TruncatedSeries invert(const TruncatedSeries& s) {
  const std::size_t n = s.order();
  if (n == 0) return s;
  if (s.coefficient(0).is_zero()) {
    throw SeriesError(SeriesError::Kind::InvertNeedsNonzeroConstant,
                      "invert: series constant term must be nonzero");
  }
  const Rational c0_inv = s.coefficient(0).reciprocal();
  std::vector<Rational> b(n);
  b[0] = c0_inv;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += s.coefficient(j) * b[k - j];
    b[k] = -acc * c0_inv;
  }
  return TruncatedSeries(std::move(b), n);
}

TruncatedSeries power(const TruncatedSeries& s, Index e) {
  if (e < 0) return power(invert(s), -e);
  TruncatedSeries result = TruncatedSeries::constant(Rational(1), s.order());
  TruncatedSeries base = s;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

}  // namespace hyperstir
