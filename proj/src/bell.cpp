#include "hyperstir/bell.hpp"

#include <stdexcept>
#include <string>

#include "hyperstir/stirling.hpp"

namespace hyperstir {

namespace {

void require_args(const char* who, Index n, const BellArguments& args) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative index");
  if (static_cast<std::size_t>(n) > args.size()) {
    throw std::invalid_argument(std::string(who) + ": needs " + std::to_string(n) +
                                " arguments, got " + std::to_string(args.size()));
  }
}

}  // namespace

Rational complete_bell(Index n, const BellArguments& args) {
  require_args("complete_bell", n, args);
  std::vector<Rational> y(static_cast<std::size_t>(n) + 1);
  y[0] = Rational(1);
  for (Index m = 0; m < n; ++m) {
    Rational acc;
    for (Index k = 0; k <= m; ++k) {
      acc += Rational(binomial(m, k)) * y[static_cast<std::size_t>(m - k)] * args.at(k + 1);
    }
    y[static_cast<std::size_t>(m + 1)] = std::move(acc);
  }
  return y.back();
}

Rational complete_bell_via_series(Index n, const BellArguments& args) {
  require_args("complete_bell_via_series", n, args);
  const auto order = static_cast<std::size_t>(n) + 1;
  std::vector<Rational> inner(order);
  for (Index j = 1; j <= n; ++j) {
    inner[static_cast<std::size_t>(j)] = args.at(j) / Rational(factorial(j));
  }
  TruncatedSeries e = exp(TruncatedSeries(std::move(inner), order));
  return e.coefficient(static_cast<std::size_t>(n)) * Rational(factorial(n));
}

Rational p_polynomial(Index i, const BellArguments& args) {
  require_args("p_polynomial", i, args);
  BellArguments twisted;
  twisted.values.reserve(static_cast<std::size_t>(i));
  for (Index k = 1; k <= i; ++k) {
    twisted.values.push_back(-Rational(factorial(k - 1)) * args.at(k));
  }
  Rational y = complete_bell(i, twisted);
  return alternating_sign(i) > 0 ? y : -y;
}

BellArguments harmonic_arguments(Index j, Index count, const Rational& alpha) {
  BellArguments args;
  args.values.reserve(static_cast<std::size_t>(count));
  for (Index k = 1; k <= count; ++k) args.values.push_back(shifted_harmonic(j, k, alpha));
  return args;
}

Rational p_number(Index i, Index j, Index r) {
  if (i < 0 || j < 0 || r < 0) throw std::invalid_argument("p_number: negative index");
  return p_polynomial(i, harmonic_arguments(j, i, Rational(Integer(r))));
}

namespace {

void check_kolbig_alpha(Index j, const Rational& alpha) {
  if (alpha.is_integer() && alpha.sign() < 0 && -alpha <= Rational(Integer(j))) {
    throw std::domain_error("kolbig: alpha = " + alpha.to_string() + " is excluded (alpha in {-1, ..., -" +
                            std::to_string(j) + "})");
  }
}

}  // namespace

Rational kolbig_s(Index j, Index q, const Rational& alpha) {
  if (j < 0 || q < 0) throw std::invalid_argument("kolbig_s: negative index");
  check_kolbig_alpha(j, alpha);
  const Rational base = Rational(1) + alpha;
  Rational sum;
  for (Index t = q; t <= j; ++t) {
    sum += Rational(binomial(t, q) * stirling1(j, t)) * base.pow(t - q);
  }
  return sum;
}

Rational kolbig_p_value(Index j, Index q, const Rational& alpha) {
  if (q > j) {
    check_kolbig_alpha(j, alpha);
    return Rational(0);
  }
  return Rational(factorial(q)) * kolbig_s(j, q, alpha) /
         rising_factorial_value(Rational(1) + alpha, j);
}

}  // namespace hyperstir
