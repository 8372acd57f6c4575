#include "hyperstir/polynomial.hpp"

#include <stdexcept>

#include <json.hpp>

namespace hyperstir {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, Index degree) {
  if (degree < 0) throw std::invalid_argument("Polynomial::monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Rational& a) { return Polynomial({a, Rational(1)}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<Index> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<Index>(coeffs_.size()) - 1;
}

Rational Polynomial::coefficient(Index k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= coeffs_.size()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative(Index order) const {
  if (order < 0) throw std::invalid_argument("Polynomial::derivative: negative order");
  const auto ord = static_cast<std::size_t>(order);
  if (coeffs_.size() <= ord) return {};
  std::vector<Rational> out(coeffs_.size() - ord);
  for (std::size_t k = 0; k < out.size(); ++k) {
    // d^ord/dx^ord x^(k+ord) = (k+1)(k+2)...(k+ord) x^k
    Integer falling(1);
    for (std::size_t t = 1; t <= ord; ++t) falling *= Integer(static_cast<long>(k + t));
    out[k] = coeffs_[k + ord] * Rational(falling);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shift(const Rational& a) const {
  // Horner in the ring: p(x + a) = (...(c_n (x+a) + c_{n-1})(x+a) + ...) + c_0.
  Polynomial acc;
  const Polynomial step = linear(a);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * step + constant(*it);
  }
  return acc;
}

Polynomial Polynomial::pow(Index e) const {
  if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial out = constant(Rational(1));
  for (Index t = 0; t < e; ++t) out *= *this;
  return out;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[k].to_string();
    if (k == 1) out += "*x";
    if (k > 1) out += "*x^" + std::to_string(k);
  }
  return out;
}

std::string Polynomial::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : coeffs_) arr.push_back(c.to_string());
  return arr.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("Polynomial::from_json: ") + e.what());
  }
  if (!j.is_array()) throw std::invalid_argument("Polynomial::from_json: expected an array");
  std::vector<Rational> coeffs;
  for (const auto& v : j) {
    if (!v.is_string()) throw std::invalid_argument("Polynomial::from_json: expected strings");
    coeffs.push_back(Rational::parse(v.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_scale(const Polynomial& p, const Rational& c) { return p * c; }
Rational poly_eval(const Polynomial& p, const Rational& x) { return p.evaluate(x); }
Polynomial poly_derivative(const Polynomial& p, Index order) { return p.derivative(order); }
Polynomial poly_shift(const Polynomial& p, const Rational& a) { return p.shift(a); }

Polynomial rising_factorial_poly(Index m) {
  if (m < 0) throw std::invalid_argument("rising_factorial_poly: negative m");
  Polynomial out = Polynomial::constant(Rational(1));
  for (Index t = 0; t < m; ++t) out *= Polynomial::linear(Rational(Integer(t)));
  return out;
}

Polynomial binomial_poly(Index n, Index m) {
  if (m < 0) return {};
  Polynomial out = Polynomial::constant(Rational(1));
  for (Index t = 0; t < m; ++t) out *= Polynomial::linear(Rational(Integer(n - t)));
  return out * Rational(Integer(1), factorial(m));
}

}  // namespace hyperstir
