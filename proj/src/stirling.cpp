#include "hyperstir/stirling.hpp"

#include <mutex>
#include <stdexcept>

#include <json.hpp>

namespace hyperstir {

std::vector<Integer> RStirlingTable::ensure_row(Index n, Index r) const {
  const auto idx = static_cast<std::size_t>(n - r);
  {
    std::shared_lock lock(mu_);
    auto it = rows_.find(r);
    if (it != rows_.end() && idx < it->second.size()) return it->second[idx];
  }
  std::unique_lock lock(mu_);
  auto& rows = rows_[r];
  if (rows.empty()) rows.push_back({Integer(1)});  // [r, r]_r = 1
  while (rows.size() <= idx) {
    const std::vector<Integer>& prev = rows.back();  // row n - 1, entries k = r..n-1
    const Index n_cur = r + static_cast<Index>(rows.size());
    const Integer mult(n_cur - 1);
    std::vector<Integer> next(prev.size() + 1);
    for (std::size_t c = 0; c < next.size(); ++c) {
      // column c is k = r + c
      Integer v;
      if (c < prev.size()) v = mult * prev[c];
      if (c >= 1) v += prev[c - 1];
      next[c] = std::move(v);
    }
    rows.push_back(std::move(next));
  }
  return rows[idx];
}

Integer RStirlingTable::value(Index n, Index k, Index r) const {
  if (r < 0 || n < r || k < r || k > n) return Integer(0);
  auto row = ensure_row(n, r);
  return row[static_cast<std::size_t>(k - r)];
}

std::vector<Integer> RStirlingTable::row(Index n, Index r) const {
  if (r < 0 || n < r) return {};
  return ensure_row(n, r);
}

void RStirlingTable::clear() {
  std::unique_lock lock(mu_);
  rows_.clear();
}

std::size_t RStirlingTable::cached_rows() const {
  std::shared_lock lock(mu_);
  std::size_t total = 0;
  for (const auto& [r, rows] : rows_) total += rows.size();
  return total;
}

RStirlingTable& r_stirling_table() {
  static RStirlingTable table;
  return table;
}

Integer stirling1(Index n, Index k) { return r_stirling_table().value(n, k, 0); }

Integer r_stirling1(Index n, Index k, Index r) { return r_stirling_table().value(n, k, r); }

namespace {

class Stirling2Table {
 public:
  Integer value(Index n, Index k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    const auto ni = static_cast<std::size_t>(n);
    {
      std::shared_lock lock(mu_);
      if (ni < rows_.size()) return rows_[ni][static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mu_);
    if (rows_.empty()) rows_.push_back({Integer(1)});
    while (rows_.size() <= ni) {
      const auto& prev = rows_.back();
      std::vector<Integer> next(prev.size() + 1);
      for (std::size_t c = 0; c < next.size(); ++c) {
        Integer v;
        if (c < prev.size()) v = Integer(static_cast<long>(c)) * prev[c];
        if (c >= 1) v += prev[c - 1];
        next[c] = std::move(v);
      }
      rows_.push_back(std::move(next));
    }
    return rows_[ni][static_cast<std::size_t>(k)];
  }

 private:
  std::shared_mutex mu_;
  std::vector<std::vector<Integer>> rows_;
};

Stirling2Table& stirling2_table() {
  static Stirling2Table table;
  return table;
}

}  // namespace

Integer stirling2(Index n, Index k) { return stirling2_table().value(n, k); }

Integer r_stirling1_via_broder(Index m, Index i, Index n) {
  if (i > m) {
    throw std::invalid_argument("r_stirling1_via_broder: requires i <= m, got i=" +
                                std::to_string(i) + " m=" + std::to_string(m));
  }
  if (m < 0 || i < 0 || n < 0) {
    throw std::invalid_argument("r_stirling1_via_broder: negative index");
  }
  Integer total;
  for (Index j = i; j <= m; ++j) {
    Rational rising = rising_factorial_value(Rational(Integer(n + 1)), m - j);
    total += binomial(m, j) * stirling1(j, i) * rising.to_integer();
  }
  return total;
}

Rational harmonic(const HarmonicSpec& spec) {
  if (spec.j < 0 || spec.k < 1 || spec.r < 0) {
    throw std::invalid_argument("harmonic: requires j >= 0, k >= 1, r >= 0");
  }
  Rational sum;
  for (Index t = 1; t <= spec.j; ++t) {
    sum += Rational(Integer(t + spec.r)).pow(-spec.k);
  }
  return sum;
}

Rational harmonic_number(Index n) {
  if (n <= 0) return Rational(0);
  return harmonic({n, 1, 0});
}

Rational shifted_harmonic(Index j, Index k, const Rational& alpha) {
  if (k < 1) throw std::invalid_argument("shifted_harmonic: requires k >= 1");
  Rational sum;
  for (Index t = 1; t <= j; ++t) {
    Rational base = Rational(Integer(t)) + alpha;
    if (base.is_zero()) {
      throw std::domain_error("shifted_harmonic: t + alpha vanishes at t=" + std::to_string(t));
    }
    sum += base.pow(-k);
  }
  return sum;
}

Rational hyperharmonic(Index n, Index r) {
  if (n <= 0 || r < 0) return Rational(0);
  if (r == 0) return Rational(Integer(1), Integer(n));
  return Rational(r_stirling1(n + r, r + 1, r), factorial(n));
}

Rational hyperharmonic_by_recursion(Index n, Index r) {
  if (n <= 0 || r < 0) return Rational(0);
  // row[t-1] holds H_t^(order) for t = 1..n
  std::vector<Rational> row(static_cast<std::size_t>(n));
  for (Index t = 1; t <= n; ++t) row[static_cast<std::size_t>(t - 1)] = Rational(Integer(1), Integer(t));
  for (Index order = 1; order <= r; ++order) {
    Rational running;
    for (auto& v : row) {
      running += v;
      v = running;
    }
  }
  return row.back();
}

Triangle make_triangle(TriangleFamily family, Index nmax, Index r) {
  if (nmax < 0 || r < 0) throw std::invalid_argument("make_triangle: negative bound");
  Triangle t;
  t.family = family;
  t.nmax = nmax;
  t.r = family == TriangleFamily::RStirling1 ? r : 0;
  for (Index n = t.r; n <= nmax; ++n) {
    std::vector<Integer> row;
    for (Index k = t.r; k <= n; ++k) {
      switch (family) {
        case TriangleFamily::Stirling1: row.push_back(stirling1(n, k)); break;
        case TriangleFamily::Stirling2: row.push_back(stirling2(n, k)); break;
        case TriangleFamily::RStirling1: row.push_back(r_stirling1(n, k, t.r)); break;
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string family_name(TriangleFamily family) {
  switch (family) {
    case TriangleFamily::Stirling1: return "stirling1";
    case TriangleFamily::Stirling2: return "stirling2";
    case TriangleFamily::RStirling1: return "r-stirling1";
  }
  return "?";
}

TriangleFamily parse_triangle_family(const std::string& name) {
  if (name == "stirling1") return TriangleFamily::Stirling1;
  if (name == "stirling2") return TriangleFamily::Stirling2;
  if (name == "r-stirling1") return TriangleFamily::RStirling1;
  throw std::invalid_argument("unknown triangle family '" + name +
                              "' (expected stirling1, stirling2 or r-stirling1)");
}

std::string triangle_to_delimited(const Triangle& t, char separator) {
  std::string out = "# family=" + family_name(t.family) + " r=" + std::to_string(t.r) +
                    " nmax=" + std::to_string(t.nmax) + "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += separator;
      out += row[c].to_string();
    }
    out += '\n';
  }
  return out;
}

std::string triangle_to_json(const Triangle& t) {
  nlohmann::ordered_json j;
  j["family"] = family_name(t.family);
  j["r"] = t.r;
  j["nmax"] = t.nmax;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : row) arr.push_back(v.to_string());
    j["rows"].push_back(std::move(arr));
  }
  return j.dump();
}

}  // namespace hyperstir
