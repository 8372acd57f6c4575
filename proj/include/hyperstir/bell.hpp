#pragma once

#include <vector>

#include "hyperstir/exact.hpp"
#include "hyperstir/series.hpp"

namespace hyperstir {

/// Argument vector (x_1, ..., x_n) of a complete Bell polynomial; values[0] is x_1.
struct BellArguments {
  std::vector<Rational> values;

  std::size_t size() const { return values.size(); }
  /// x_j for 1 <= j <= size().
  const Rational& at(Index j) const { return values.at(static_cast<std::size_t>(j - 1)); }
};

/// Complete exponential Bell polynomial Y_n at the given point, by
/// Y_{n+1} = sum_{k=0}^{n} C(n, k) Y_{n-k} x_{k+1}, Y_0 = 1.
/// Throws std::invalid_argument if fewer than n arguments are supplied.
Rational complete_bell(Index n, const BellArguments& args);

/// n! [t^n] exp(sum_j x_j t^j / j!), through TruncatedSeries.
Rational complete_bell_via_series(Index n, const BellArguments& args);

/// P_i(x_1, ..., x_i) = (-1)^i Y_i(-0! x_1, -1! x_2, ..., -(i-1)! x_i).
/// Throws std::invalid_argument for short argument vectors.
Rational p_polynomial(Index i, const BellArguments& args);

/// (H(j, 1; alpha), ..., H(j, count; alpha)).
BellArguments harmonic_arguments(Index j, Index count, const Rational& alpha);

/// P(i, j + r, r) = P_i(H(j, 1; r), ..., H(j, i; r)); P(0, ., .) = 1.
Rational p_number(Index i, Index j, Index r);

/// S(j, q; alpha) = sum_{t=q}^{j} C(t, q) [j, t] (1 + alpha)^(t - q).
/// Zero when q > j. Throws std::domain_error when alpha is one of -1, ..., -j,
/// and std::invalid_argument for negative j or q.
Rational kolbig_s(Index j, Index q, const Rational& alpha);

/// Kolbig's closed form for P_q(H(j, 1; alpha), ..., H(j, q; alpha)):
/// q! S(j, q; alpha) / (1 + alpha)^(rising j) for q <= j, and 0 for q > j.
Rational kolbig_p_value(Index j, Index q, const Rational& alpha);

}  // namespace hyperstir
