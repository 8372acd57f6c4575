#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "hyperstir/exact.hpp"

namespace hyperstir {

/// Memoized triangle of r-Stirling numbers of the first kind.
///
/// Rows are keyed by (n, r) and hold the entries k = r..n. A request for row n
/// fills every missing row from the base row n = r upward with
///
///   [n, k]_r = (n - 1) [n - 1, k]_r + [n - 1, k - 1]_r,   [r, k]_r = [k == r].
///
/// Out-of-domain arguments (n < r, k < r, k > n) read as 0. Safe for concurrent
/// use; every observed value equals the sequential recomputation.
class RStirlingTable {
 public:
  Integer value(Index n, Index k, Index r) const;
  /// Entries k = r..n of row n; empty when n < r.
  std::vector<Integer> row(Index n, Index r) const;

  void clear();
  std::size_t cached_rows() const;

 private:
  // Fills rows for `r` up to n and returns a copy of row n.
  std::vector<Integer> ensure_row(Index n, Index r) const;

  mutable std::shared_mutex mu_;
  mutable std::map<Index, std::vector<std::vector<Integer>>> rows_;
};

/// Process-wide table used by the free functions below.
RStirlingTable& r_stirling_table();

/// Unsigned Stirling number of the first kind; the r = 0 triangle.
Integer stirling1(Index n, Index k);

/// Stirling number of the second kind (memoized).
Integer stirling2(Index n, Index k);

/// r-Stirling number of the first kind [n, k]_r via the recurrence table.
Integer r_stirling1(Index n, Index k, Index r);

/// [m+n+1, i+n+1]_{n+1} from the sum
///   sum_{j=i}^{m} C(m, j) [j, i] (n+1)^(rising m-j).
/// Throws std::invalid_argument if i > m.
Integer r_stirling1_via_broder(Index m, Index i, Index n);

/// Parameters of the shifted generalized harmonic sum
///   H(j, k; r) = sum_{t=1}^{j} 1 / (t + r)^k.
struct HarmonicSpec {
  Index j = 0;
  Index k = 1;
  Index r = 0;
};

/// Throws std::invalid_argument unless j >= 0, k >= 1, r >= 0.
Rational harmonic(const HarmonicSpec& spec);

/// Plain harmonic number H_n (0 for n <= 0).
Rational harmonic_number(Index n);

/// H(j, k; alpha) for a rational shift. Throws std::domain_error if some
/// t + alpha vanishes for 1 <= t <= j.
Rational shifted_harmonic(Index j, Index k, const Rational& alpha);

/// Hyperharmonic number H_n^(r): 0 if n <= 0 or r < 0, 1/n for r = 0, and the
/// closed form [n + r, r + 1]_r / n! for r >= 1.
Rational hyperharmonic(Index n, Index r);

/// The iterated-partial-sum definition of H_n^(r), O(n r). Kept as an oracle.
Rational hyperharmonic_by_recursion(Index n, Index r);

// Triangle export.

enum class TriangleFamily { Stirling1, Stirling2, RStirling1 };

/// Rows n = r..nmax (n = 0..nmax for the ordinary families), entries k = r..n.
struct Triangle {
  TriangleFamily family = TriangleFamily::Stirling1;
  Index r = 0;
  Index nmax = 0;
  std::vector<std::vector<Integer>> rows;
};

Triangle make_triangle(TriangleFamily family, Index nmax, Index r = 0);

std::string family_name(TriangleFamily family);
/// Accepts "stirling1", "stirling2", "r-stirling1". Throws std::invalid_argument.
TriangleFamily parse_triangle_family(const std::string& name);

/// Delimited text: a "# family=... r=... nmax=..." header line, then one line
/// per row of canonical integers joined by `separator`.
std::string triangle_to_delimited(const Triangle& t, char separator);
/// {"family": ..., "r": ..., "nmax": ..., "rows": [["1"], ["2", "1"], ...]}
std::string triangle_to_json(const Triangle& t);

}  // namespace hyperstir
