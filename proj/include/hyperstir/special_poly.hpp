#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "hyperstir/exact.hpp"
#include "hyperstir/polynomial.hpp"

namespace hyperstir {

// Named polynomial families. Where several constructions exist, the
// unsuffixed function is the production route (cached where listed in
// PolyFamily) and the suffixed ones are the alternative routes the test
// suites and identity registry compare against.

enum class PolyFamily { R, RBar, Q, Hyperharmonic, HyperharmonicShifted, Bernoulli, PowerSum };

/// Cache key; `second` is only meaningful for R, RBar and Q.
struct PolyFamilyKey {
  PolyFamily family = PolyFamily::R;
  Index first = 0;
  Index second = 0;

  friend auto operator<=>(const PolyFamilyKey&, const PolyFamilyKey&) = default;
};

/// Cached lookup. Throws std::invalid_argument on invalid indices.
Polynomial family_polynomial(const PolyFamilyKey& key);
void clear_family_cache();
std::size_t family_cache_size();

std::string poly_family_name(PolyFamily family);
/// Accepts R, RBar, Q, Hyperharmonic, HyperharmonicShifted, Bernoulli,
/// PowerSum (case-insensitive; '-' and '_' ignored).
PolyFamily parse_poly_family(const std::string& name);
/// Number of indices the family takes (2 for R/RBar/Q, else 1).
int poly_family_arity(PolyFamily family);

/// R_{m,i}(x) = sum_{j=0}^{m-i} C(i+j, i) [m, i+j] x^j. Requires 0 <= i <= m.
Polynomial r_poly(Index m, Index i);
/// R_{m,i}(x) = sum_{j=0}^{m-i} C(m, j) [m-j, i] x^(rising j).
Polynomial r_poly_defining_form(Index m, Index i);
/// R_{m,i}(x) = (1/i!) d^i/dx^i x^(rising m).
Polynomial r_poly_via_derivative(Index m, Index i);

/// Rbar_{m,i}(x) = sum_{j=0}^{m-i} C(i+j, i) [m+1, i+j+1] x^j. Requires 0 <= i <= m.
Polynomial r_bar_poly(Index m, Index i);
/// R_{m,i}(x + 1).
Polynomial r_bar_poly_via_shift(Index m, Index i);

/// q_{m,i}(n), the coefficient polynomial of the power-sum form of the hyper-sums.
/// Coincides with r_bar_poly(m, i).
Polynomial q_poly(Index m, Index i);

/// H_{j+1}^(x) = R_{j+1,1}(x) / (j+1)!, degree j.
Polynomial hyperharmonic_poly(Index j);
/// (1/(j+1)!) d/dx x^(rising j+1).
Polynomial hyperharmonic_poly_via_derivative(Index j);

/// H_{j+1}^(x+1) = Rbar_{j+1,1}(x) / (j+1)!.
Polynomial hyperharmonic_poly_shifted(Index j);
/// sum_{t=0}^{j} C(x + t, t) / (j + 1 - t).
Polynomial hyperharmonic_poly_shifted_via_binomials(Index j);

/// i-th derivative of H_{j+1}^(x) (or of H_{j+1}^(x+1) when `shifted`) in
/// closed form:
///   ((i+1)! / (j+1)!) sum_{t=0}^{j-i} C(i+t+1, i+1) [j+1+s, i+t+1+s] x^t,
/// with s = 1 when shifted. Requires 0 <= i <= j.
Polynomial hyperharmonic_derivative(Index j, Index i, bool shifted);

/// Bernoulli numbers with B_1 = -1/2 (Akiyama-Tanigawa, memoized).
Rational bernoulli_number(Index k);

/// B_k(x) = sum_j C(k, j) B_j x^(k-j).
Polynomial bernoulli_poly(Index k);
/// B_k(x) = (-1)^k sum_{j=0}^{k} (-1)^j j! {k+1, j+1} H_{j+1}^(x).
Polynomial bernoulli_poly_via_hyperharmonic(Index k);

/// Higher-order Bernoulli number B_k^(i) = k! [t^k] (t / (e^t - 1))^i, i >= 1.
Rational higher_bernoulli(Index k, Index i);
/// sum_{j=0}^{k} (-1)^j [i+j, i] {k, j} / C(i+j, i).
Rational higher_bernoulli_kim(Index k, Index i);
/// sum_{j=0}^{k} (-1)^j C(k+i, i+j) C(i+j-1, i-1) {k+j, j} / C(k+j, j).
Rational higher_bernoulli_srivastava(Index k, Index i);

/// S_k(n) = 1^k + ... + n^k as a polynomial in n, by
/// (B_{k+1}(n + 1) - B_{k+1}(1)) / (k + 1).
Polynomial power_sum_poly(Index k);
/// Direct summation 1^k + ... + n^k.
Integer power_sum_direct(Index k, Index n);

/// S_k^(m)(n) through the r-Stirling coefficients:
///   (1/m!) sum_{i=0}^{m} (-1)^i [m+n+1, i+n+1]_{n+1} S_{k+i}(n).
Integer hyper_sum(Index k, Index m, Index n);
/// Same sum with q_{m,i}(n) in place of the r-Stirling numbers.
Integer hyper_sum_via_q(Index k, Index m, Index n);
/// m-fold iterated partial sums of directly summed powers.
Integer hyper_sum_by_recursion(Index k, Index m, Index n);

}  // namespace hyperstir
