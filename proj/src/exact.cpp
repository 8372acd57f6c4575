#include "hyperstir/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace hyperstir {

static_assert(sizeof(long) == sizeof(long long), "Integer(long long) assumes an LP64 target");

Integer::Integer(long long value) : v_(static_cast<long>(value)) {}

Integer Integer::divide_exact(const Integer& d) const {
  if (d.is_zero()) {
    throw std::domain_error("Integer::divide_exact: division by zero");
  }
  if (!mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t())) {
    throw std::domain_error("Integer::divide_exact: " + to_string() + " is not divisible by " +
                            d.to_string());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
  return Integer(std::move(q));
}

namespace {

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_mpz(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!is_decimal(digits)) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  mpz_class v(std::string(digits), 10);
  return negative ? mpz_class(-v) : v;
}

}  // namespace

Integer Integer::parse(std::string_view text) { return Integer(parse_mpz(text)); }

bool Integer::fits_int64(std::int64_t* out) const {
  if (!v_.fits_slong_p()) return false;
  if (out != nullptr) *out = v_.get_si();
  return true;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) {
    throw std::domain_error("Rational: zero denominator");
  }
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("Rational: division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw std::domain_error("Rational: reciprocal of zero");
  }
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(Index exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), e);
  // Powers of coprime integers stay coprime, so no canonicalize is needed.
  mpq_class out;
  out.get_num() = num;
  out.get_den() = den;
  Rational r;
  r.v_ = std::move(out);
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(Integer(parse_mpz(text)));
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_decimal(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer d(mpz_class(std::string(den), 10));
  if (d.is_zero()) {
    throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
  }
  return Rational(Integer(parse_mpz(text.substr(0, slash))), d);
}

Integer Rational::to_integer() const {
  if (!is_integer()) {
    throw std::domain_error("Rational::to_integer: " + to_string() + " is not an integer");
  }
  return Integer(mpz_class(v_.get_num()));
}

Integer factorial(Index n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
  }
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(std::move(out));
}

Integer binomial(Index n, Index k) {
  if (k < 0) return Integer(0);
  if (n < 0) {
    Integer v = binomial(k - n - 1, k);
    return alternating_sign(k) > 0 ? v : -v;
  }
  if (k > n) return Integer(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Integer(std::move(out));
}

Rational rising_factorial_value(const Rational& x, Index k) {
  if (k < 0) {
    throw std::invalid_argument("rising_factorial_value: negative length " + std::to_string(k));
  }
  Rational out(1);
  Rational term = x;
  for (Index t = 0; t < k; ++t) {
    out *= term;
    term += Rational(1);
  }
  return out;
}

}  // namespace hyperstir
