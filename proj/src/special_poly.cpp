#include "hyperstir/special_poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

#include "hyperstir/series.hpp"
#include "hyperstir/stirling.hpp"

namespace hyperstir {

namespace {

void require_pair(const char* who, Index m, Index i) {
  if (i < 0 || i > m) {
    throw std::invalid_argument(std::string(who) + ": requires 0 <= i <= m, got m=" + std::to_string(m) +
                                " i=" + std::to_string(i));
  }
}

void require_nonnegative(const char* who, Index v) {
  if (v < 0) throw std::invalid_argument(std::string(who) + ": negative index " + std::to_string(v));
}

Rational inverse_factorial(Index n) { return Rational(Integer(1), factorial(n)); }

Polynomial build_r(Index m, Index i) {
  std::vector<Rational> c(static_cast<std::size_t>(m - i) + 1);
  for (Index j = 0; j <= m - i; ++j) {
    c[static_cast<std::size_t>(j)] = Rational(binomial(i + j, i) * stirling1(m, i + j));
  }
  return Polynomial(std::move(c));
}

Polynomial build_r_bar(Index m, Index i) {
  std::vector<Rational> c(static_cast<std::size_t>(m - i) + 1);
  for (Index j = 0; j <= m - i; ++j) {
    c[static_cast<std::size_t>(j)] = Rational(binomial(i + j, i) * stirling1(m + 1, i + j + 1));
  }
  return Polynomial(std::move(c));
}

Polynomial build_bernoulli(Index k) {
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
  for (Index j = 0; j <= k; ++j) {
    c[static_cast<std::size_t>(k - j)] = Rational(binomial(k, j)) * bernoulli_number(j);
  }
  return Polynomial(std::move(c));
}

Polynomial build_power_sum(Index k) {
  const Polynomial b = bernoulli_poly(k + 1);
  const Rational at_one = b.evaluate(Rational(1));
  return (b.shift(Rational(1)) - Polynomial::constant(at_one)) * Rational(Integer(1), Integer(k + 1));
}

Polynomial build(const PolyFamilyKey& key) {
  switch (key.family) {
    case PolyFamily::R:
      require_pair("r_poly", key.first, key.second);
      return build_r(key.first, key.second);
    case PolyFamily::RBar:
      require_pair("r_bar_poly", key.first, key.second);
      return build_r_bar(key.first, key.second);
    case PolyFamily::Q:
      require_pair("q_poly", key.first, key.second);
      return build_r_bar(key.first, key.second);
    case PolyFamily::Hyperharmonic:
      require_nonnegative("hyperharmonic_poly", key.first);
      return r_poly(key.first + 1, 1) * inverse_factorial(key.first + 1);
    case PolyFamily::HyperharmonicShifted:
      require_nonnegative("hyperharmonic_poly_shifted", key.first);
      return r_bar_poly(key.first + 1, 1) * inverse_factorial(key.first + 1);
    case PolyFamily::Bernoulli:
      require_nonnegative("bernoulli_poly", key.first);
      return build_bernoulli(key.first);
    case PolyFamily::PowerSum:
      require_nonnegative("power_sum_poly", key.first);
      return build_power_sum(key.first);
  }
  throw std::invalid_argument("unknown polynomial family");
}

class FamilyCache {
 public:
  Polynomial get(PolyFamilyKey key) {
    if (poly_family_arity(key.family) == 1) key.second = 0;
    {
      std::shared_lock lock(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    // Built outside the lock: construction recurses into other families.
    Polynomial p = build(key);
    std::unique_lock lock(mu_);
    return cache_.emplace(key, std::move(p)).first->second;
  }

  void clear() {
    std::unique_lock lock(mu_);
    cache_.clear();
  }

  std::size_t size() {
    std::shared_lock lock(mu_);
    return cache_.size();
  }

 private:
  std::shared_mutex mu_;
  std::map<PolyFamilyKey, Polynomial> cache_;
};

FamilyCache& family_cache() {
  static FamilyCache cache;
  return cache;
}

std::string normalize(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

Polynomial family_polynomial(const PolyFamilyKey& key) { return family_cache().get(key); }
void clear_family_cache() { family_cache().clear(); }
std::size_t family_cache_size() { return family_cache().size(); }

std::string poly_family_name(PolyFamily family) {
  switch (family) {
    case PolyFamily::R: return "R";
    case PolyFamily::RBar: return "RBar";
    case PolyFamily::Q: return "Q";
    case PolyFamily::Hyperharmonic: return "Hyperharmonic";
    case PolyFamily::HyperharmonicShifted: return "HyperharmonicShifted";
    case PolyFamily::Bernoulli: return "Bernoulli";
    case PolyFamily::PowerSum: return "PowerSum";
  }
  return "?";
}

PolyFamily parse_poly_family(const std::string& name) {
  const std::string n = normalize(name);
  for (auto f : {PolyFamily::R, PolyFamily::RBar, PolyFamily::Q, PolyFamily::Hyperharmonic,
                 PolyFamily::HyperharmonicShifted, PolyFamily::Bernoulli, PolyFamily::PowerSum}) {
    if (normalize(poly_family_name(f)) == n) return f;
  }
  throw std::invalid_argument("unknown polynomial family '" + name + "'");
}

int poly_family_arity(PolyFamily family) {
  switch (family) {
    case PolyFamily::R:
    case PolyFamily::RBar:
    case PolyFamily::Q:
      return 2;
    default:
      return 1;
  }
}

Polynomial r_poly(Index m, Index i) { return family_polynomial({PolyFamily::R, m, i}); }

Polynomial r_poly_defining_form(Index m, Index i) {
  require_pair("r_poly_defining_form", m, i);
  Polynomial out;
  for (Index j = 0; j <= m - i; ++j) {
    out += rising_factorial_poly(j) * Rational(binomial(m, j) * stirling1(m - j, i));
  }
  return out;
}

Polynomial r_poly_via_derivative(Index m, Index i) {
  require_pair("r_poly_via_derivative", m, i);
  return rising_factorial_poly(m).derivative(i) * inverse_factorial(i);
}

Polynomial r_bar_poly(Index m, Index i) { return family_polynomial({PolyFamily::RBar, m, i}); }

Polynomial r_bar_poly_via_shift(Index m, Index i) { return r_poly(m, i).shift(Rational(1)); }

Polynomial q_poly(Index m, Index i) { return family_polynomial({PolyFamily::Q, m, i}); }

Polynomial hyperharmonic_poly(Index j) {
  return family_polynomial({PolyFamily::Hyperharmonic, j, 0});
}

Polynomial hyperharmonic_poly_via_derivative(Index j) {
  require_nonnegative("hyperharmonic_poly_via_derivative", j);
  return rising_factorial_poly(j + 1).derivative(1) * inverse_factorial(j + 1);
}

Polynomial hyperharmonic_poly_shifted(Index j) {
  return family_polynomial({PolyFamily::HyperharmonicShifted, j, 0});
}

Polynomial hyperharmonic_poly_shifted_via_binomials(Index j) {
  require_nonnegative("hyperharmonic_poly_shifted_via_binomials", j);
  Polynomial out;
  for (Index t = 0; t <= j; ++t) {
    out += binomial_poly(t, t) * Rational(Integer(1), Integer(j + 1 - t));
  }
  return out;
}

Polynomial hyperharmonic_derivative(Index j, Index i, bool shifted) {
  if (i < 0 || i > j) {
    throw std::invalid_argument("hyperharmonic_derivative: requires 0 <= i <= j, got j=" +
                                std::to_string(j) + " i=" + std::to_string(i));
  }
  const Index s = shifted ? 1 : 0;
  std::vector<Rational> c(static_cast<std::size_t>(j - i) + 1);
  for (Index t = 0; t <= j - i; ++t) {
    c[static_cast<std::size_t>(t)] = Rational(binomial(i + t + 1, i + 1) * stirling1(j + 1 + s, i + t + 1 + s));
  }
  return Polynomial(std::move(c)) * Rational(factorial(i + 1), factorial(j + 1));
}

namespace {

class BernoulliCache {
 public:
  Rational get(Index k) {
    const auto idx = static_cast<std::size_t>(k);
    {
      std::shared_lock lock(mu_);
      if (idx < values_.size()) return values_[idx];
    }
    std::unique_lock lock(mu_);
    if (idx >= values_.size()) fill(idx);
    return values_[idx];
  }

 private:
  // Akiyama-Tanigawa; the algorithm yields B_1 = +1/2, flipped on store.
  void fill(std::size_t n) {
    std::vector<Rational> a(n + 1);
    std::vector<Rational> out(n + 1);
    for (std::size_t m = 0; m <= n; ++m) {
      a[m] = Rational(Integer(1), Integer(static_cast<long>(m + 1)));
      for (std::size_t j = m; j >= 1; --j) {
        a[j - 1] = Rational(static_cast<long>(j)) * (a[j - 1] - a[j]);
      }
      out[m] = a[0];
    }
    if (n >= 1) out[1] = -out[1];
    values_ = std::move(out);
  }

  std::shared_mutex mu_;
  std::vector<Rational> values_;
};

}  // namespace

Rational bernoulli_number(Index k) {
  require_nonnegative("bernoulli_number", k);
  static BernoulliCache cache;
  return cache.get(k);
}

Polynomial bernoulli_poly(Index k) { return family_polynomial({PolyFamily::Bernoulli, k, 0}); }

Polynomial bernoulli_poly_via_hyperharmonic(Index k) {
  require_nonnegative("bernoulli_poly_via_hyperharmonic", k);
  Polynomial out;
  for (Index j = 0; j <= k; ++j) {
    Integer w = factorial(j) * stirling2(k + 1, j + 1);
    if (alternating_sign(j) < 0) w = -w;
    out += hyperharmonic_poly(j) * Rational(w);
  }
  return alternating_sign(k) > 0 ? out : -out;
}

Rational higher_bernoulli(Index k, Index i) {
  require_nonnegative("higher_bernoulli", k);
  if (i < 1) throw std::invalid_argument("higher_bernoulli: requires order i >= 1");
  const auto order = static_cast<std::size_t>(k) + 1;
  // (e^t - 1) / t = sum_n t^n / (n + 1)!
  std::vector<Rational> g(order);
  for (std::size_t n = 0; n < order; ++n) g[n] = inverse_factorial(static_cast<Index>(n) + 1);
  TruncatedSeries s = power(invert(TruncatedSeries(std::move(g), order)), i);
  return s.coefficient(static_cast<std::size_t>(k)) * Rational(factorial(k));
}

Rational higher_bernoulli_kim(Index k, Index i) {
  require_nonnegative("higher_bernoulli_kim", k);
  if (i < 1) throw std::invalid_argument("higher_bernoulli_kim: requires order i >= 1");
  Rational sum;
  for (Index j = 0; j <= k; ++j) {
    Rational term(stirling1(i + j, i) * stirling2(k, j), binomial(i + j, i));
    sum += alternating_sign(j) > 0 ? term : -term;
  }
  return sum;
}

Rational higher_bernoulli_srivastava(Index k, Index i) {
  require_nonnegative("higher_bernoulli_srivastava", k);
  if (i < 1) throw std::invalid_argument("higher_bernoulli_srivastava: requires order i >= 1");
  Rational sum;
  for (Index j = 0; j <= k; ++j) {
    Rational term(binomial(k + i, i + j) * binomial(i + j - 1, i - 1) * stirling2(k + j, j),
                  binomial(k + j, j));
    sum += alternating_sign(j) > 0 ? term : -term;
  }
  return sum;
}

Polynomial power_sum_poly(Index k) { return family_polynomial({PolyFamily::PowerSum, k, 0}); }

Integer power_sum_direct(Index k, Index n) {
  require_nonnegative("power_sum_direct", k);
  Integer sum;
  for (Index t = 1; t <= n; ++t) sum += Rational(Integer(t)).pow(k).to_integer();
  return sum;
}

namespace {

void require_hyper_sum(const char* who, Index k, Index m, Index n) {
  if (k < 0 || m < 0 || n < 0) {
    throw std::invalid_argument(std::string(who) + ": requires k, m, n >= 0");
  }
}

template <typename Coefficient>
Integer hyper_sum_from(Index k, Index m, Index n, Coefficient coefficient) {
  const Rational at_n{Integer(n)};
  Rational sum;
  for (Index i = 0; i <= m; ++i) {
    Rational term = coefficient(i) * power_sum_poly(k + i).evaluate(at_n);
    sum += alternating_sign(i) > 0 ? term : -term;
  }
  return (sum / Rational(factorial(m))).to_integer();
}

}  // namespace

Integer hyper_sum(Index k, Index m, Index n) {
  require_hyper_sum("hyper_sum", k, m, n);
  return hyper_sum_from(k, m, n, [&](Index i) { return Rational(r_stirling1(m + n + 1, i + n + 1, n + 1)); });
}

Integer hyper_sum_via_q(Index k, Index m, Index n) {
  require_hyper_sum("hyper_sum_via_q", k, m, n);
  const Rational at_n{Integer(n)};
  return hyper_sum_from(k, m, n, [&](Index i) { return q_poly(m, i).evaluate(at_n); });
}

Integer hyper_sum_by_recursion(Index k, Index m, Index n) {
  require_hyper_sum("hyper_sum_by_recursion", k, m, n);
  if (n == 0) return Integer(0);
  // values[j-1] = S_k^(level)(j), j = 1..n
  std::vector<Integer> values(static_cast<std::size_t>(n));
  Integer running;
  for (Index j = 1; j <= n; ++j) {
    running += Rational(Integer(j)).pow(k).to_integer();
    values[static_cast<std::size_t>(j - 1)] = running;
  }
  for (Index level = 1; level <= m; ++level) {
    Integer acc;
    for (auto& v : values) {
      acc += v;
      v = acc;
    }
  }
  return values.back();
}

}  // namespace hyperstir
