// The identity catalogue. Each record pairs two independent evaluations of
// the same quantity; where one side is the production route of a library
// function, the other side is built from the defining sums.

#include <functional>
#include <random>
#include <stdexcept>

#include "hyperstir/bell.hpp"
#include "hyperstir/registry.hpp"
#include "hyperstir/series.hpp"
#include "hyperstir/special_poly.hpp"
#include "hyperstir/stirling.hpp"

namespace hyperstir {

namespace {

using A = const Assignment&;
using ScalarFn = std::function<Rational(A)>;
using PolyFn = std::function<Polynomial(A)>;

// Scalar shorthands.

Rational num(Index v) { return Rational(Integer(v)); }
Rational frac(Index p, Index q) { return Rational(Integer(p), Integer(q)); }
Rational fact(Index n) { return Rational(factorial(n)); }
Rational binom(Index n, Index k) { return Rational(binomial(n, k)); }
Rational s1(Index n, Index k) { return Rational(stirling1(n, k)); }
Rational s2(Index n, Index k) { return Rational(stirling2(n, k)); }
Rational rs(Index n, Index k, Index r) { return Rational(r_stirling1(n, k, r)); }
Rational sgn(Index n) { return num(alternating_sign(n)); }
Rational harm(Index n) { return harmonic_number(n); }
Rational harm(Index n, Index k) { return n <= 0 ? Rational(0) : harmonic({n, k, 0}); }
Rational bern(Index k) { return bernoulli_number(k); }
Rational bern_at(Index k, const Rational& x) { return bernoulli_poly(k).evaluate(x); }
Rational power_sum(Index k, Index n) { return Rational(power_sum_direct(k, n)); }
/// P(i, upper, r) in the Spiess notation: P_i(H(upper - r, 1; r), ..., H(upper - r, i; r)).
Rational p_num(Index i, Index upper, Index r) { return p_number(i, upper - r, r); }

Polynomial x_pow(Index j) { return Polynomial::monomial(Rational(1), j); }
Polynomial x_plus(const Rational& a, Index j) { return Polynomial::linear(a).pow(j); }

struct Constraint {
  std::string text;
  std::function<bool(A)> test;
};

Constraint le(const std::string& a, const std::string& b) {
  return {a + " <= " + b, [a, b](A x) { return x[a] <= x[b]; }};
}

Constraint custom(std::string text, std::function<bool(A)> test) { return {std::move(text), std::move(test)}; }

struct Def {
  std::string id;
  std::string group;
  std::string statement;
  std::vector<Parameter> params;
  Constraint constraint{};
};

Parameter param(std::string name, Index min = 0, std::optional<Index> max = std::nullopt) {
  return Parameter{std::move(name), min, max};
}

IdentityRecord make(Def def, Comparison cmp, Evaluator lhs, Evaluator rhs) {
  IdentityRecord r;
  r.id = std::move(def.id);
  r.group = std::move(def.group);
  r.statement = std::move(def.statement);
  r.parameters = std::move(def.params);
  r.constraint_text = std::move(def.constraint.text);
  r.constraint = std::move(def.constraint.test);
  r.comparison = cmp;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

void scalar(Registry& reg, Def def, ScalarFn lhs, ScalarFn rhs) {
  reg.add(make(std::move(def), Comparison::Scalar, [lhs](A a) { return Value(lhs(a)); },
               [rhs](A a) { return Value(rhs(a)); }));
}

void poly(Registry& reg, Def def, PolyFn lhs, PolyFn rhs) {
  reg.add(make(std::move(def), Comparison::Polynomial, [lhs](A a) { return Value(lhs(a)); },
               [rhs](A a) { return Value(rhs(a)); }));
}

// Deterministic rational sample points for polynomial identities in several
// variables, checked by evaluation. Raw engine output keeps the points
// identical across standard libraries.
BellArguments sample_point(Index seed, Index count) {
  std::mt19937_64 gen(static_cast<std::uint64_t>(0x5eed0000 + seed));
  BellArguments args;
  for (Index k = 0; k < count; ++k) {
    const auto p = static_cast<Index>(gen() % 19) - 9;
    const auto q = static_cast<Index>(gen() % 7) + 1;
    args.values.push_back(frac(p, q));
  }
  return args;
}

const std::vector<Rational>& kolbig_test_points() {
  static const std::vector<Rational> points = {frac(1, 2), num(2), frac(7, 3), frac(-1, 3)};
  return points;
}

// (-log(1 - t)) truncated at `order`.
TruncatedSeries neg_log_one_minus_t(std::size_t order) {
  TruncatedSeries one_minus_t({Rational(1), Rational(-1)}, order);
  return -log(one_minus_t);
}

TruncatedSeries one_minus_t_power(Index e, std::size_t order) {
  return power(TruncatedSeries({Rational(1), Rational(-1)}, order), e);
}

const std::string kHyperSums = "hyper-sums";
const std::string kRStirling = "r-Stirling numbers";
const std::string kRPoly = "r-Stirling polynomials";
const std::string kHyperharmonic = "hyperharmonic";
const std::string kBell = "Bell bridge";
const std::string kEgf = "generating functions";
const std::string kBernoulli = "Bernoulli";
const std::string kRewrites = "P-number rewrites";

void add_hyper_sums(Registry& reg) {
  const std::vector<Parameter> kmn = {param("k"), param("m"), param("n")};

  scalar(reg,
         {"HS-KARGIN", kHyperSums,
          "S_k^(m)(n) = (1/m!) sum_{i=0}^{m} (-1)^i [m+n+1, i+n+1]_{n+1} S_{k+i}(n)", kmn},
         [](A a) { return Rational(hyper_sum_by_recursion(a["k"], a["m"], a["n"])); },
         [](A a) { return Rational(hyper_sum(a["k"], a["m"], a["n"])); });

  scalar(reg, {"HS-CERE", kHyperSums, "S_k^(m)(n) = (1/m!) sum_{i=0}^{m} (-1)^i q_{m,i}(n) S_{k+i}(n)", kmn},
         [](A a) { return Rational(hyper_sum_by_recursion(a["k"], a["m"], a["n"])); },
         [](A a) { return Rational(hyper_sum_via_q(a["k"], a["m"], a["n"])); });

  scalar(reg,
         {"HS-INTRO", kHyperSums,
          "sum_{i=0}^{m} (-1)^i ([m+n+1, i+n+1]_{n+1} - q_{m,i}(n)) S_{k+i}(n) = 0", kmn},
         [](A a) {
           const Index k = a["k"], m = a["m"], n = a["n"];
           Rational sum;
           for (Index i = 0; i <= m; ++i) {
             Rational diff = rs(m + n + 1, i + n + 1, n + 1) - q_poly(m, i).evaluate(num(n));
             sum += sgn(i) * diff * power_sum(k + i, n);
           }
           return sum;
         },
         [](A) { return Rational(0); });

  const std::vector<Parameter> min = {param("m"), param("i"), param("n")};

  scalar(reg,
         {"PROP-4", kHyperSums, "[m+n+1, i+n+1]_{n+1} = sum_{j=0}^{m-i} C(i+j, i) [m+1, i+j+1] n^j", min,
          le("i", "m")},
         [](A a) { return rs(a["m"] + a["n"] + 1, a["i"] + a["n"] + 1, a["n"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], n = a["n"];
           Rational sum;
           for (Index j = 0; j <= m - i; ++j) sum += binom(i + j, i) * s1(m + 1, i + j + 1) * num(n).pow(j);
           return sum;
         });

  poly(reg, {"Q-RBAR", kHyperSums, "q_{m,i}(x) = R_{m,i}(x + 1)", {param("m"), param("i")}, le("i", "m")},
       [](A a) { return q_poly(a["m"], a["i"]); },
       [](A a) { return r_poly(a["m"], a["i"]).shift(Rational(1)); });

  scalar(reg,
         {"BRODER-EXP", kRStirling,
          "[m+n+1, i+n+1]_{n+1} = sum_{j=i}^{m} C(m, j) [j, i] (n+1)^(rising m-j)", min, le("i", "m")},
         [](A a) { return rs(a["m"] + a["n"] + 1, a["i"] + a["n"] + 1, a["n"] + 1); },
         [](A a) { return Rational(r_stirling1_via_broder(a["m"], a["i"], a["n"])); });

  scalar(reg,
         {"BRODER-REINDEX", kRStirling,
          "[m+n+1, i+n+1]_{n+1} = sum_{t=0}^{m-i} C(m, t) [m-t, i] (n+1)^(rising t)", min, le("i", "m")},
         [](A a) { return rs(a["m"] + a["n"] + 1, a["i"] + a["n"] + 1, a["n"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], n = a["n"];
           Rational sum;
           for (Index t = 0; t <= m - i; ++t) {
             sum += binom(m, t) * s1(m - t, i) * rising_factorial_value(num(n + 1), t);
           }
           return sum;
         });

  scalar(reg,
         {"RISING-EXPAND", kRStirling,
          "(n+1)^(rising t) = sum_{r=0}^{t} sum_{s=0}^{r} C(r, s) [t, r] n^s", {param("t"), param("n")}},
         [](A a) { return rising_factorial_value(num(a["n"] + 1), a["t"]); },
         [](A a) {
           const Index t = a["t"], n = a["n"];
           Rational sum;
           for (Index r = 0; r <= t; ++r) {
             for (Index s = 0; s <= r; ++s) sum += binom(r, s) * s1(t, r) * num(n).pow(s);
           }
           return sum;
         });

  scalar(reg,
         {"GKP-616", kRStirling, "sum_{r=s}^{t} C(r, s) [t, r] = [t+1, s+1]", {param("t"), param("s")},
          le("s", "t")},
         [](A a) {
           Rational sum;
           for (Index r = a["s"]; r <= a["t"]; ++r) sum += binom(r, a["s"]) * s1(a["t"], r);
           return sum;
         },
         [](A a) { return s1(a["t"] + 1, a["s"] + 1); });

  scalar(reg,
         {"PROOF-5", kRStirling,
          "[m+n+1, i+n+1]_{n+1} = sum_{j=0}^{m-i} (sum_{t=j}^{m-i} C(m, t) [t+1, j+1] [m-t, i]) n^j", min,
          le("i", "m")},
         [](A a) { return rs(a["m"] + a["n"] + 1, a["i"] + a["n"] + 1, a["n"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], n = a["n"];
           Rational sum;
           for (Index j = 0; j <= m - i; ++j) {
             Rational inner;
             for (Index t = j; t <= m - i; ++t) inner += binom(m, t) * s1(t + 1, j + 1) * s1(m - t, i);
             sum += inner * num(n).pow(j);
           }
           return sum;
         });

  scalar(reg,
         {"PROOF-TRIPLE", kRStirling,
          "[m+n+1, i+n+1]_{n+1} = sum_{t=0}^{m-i} sum_{s=0}^{t} sum_{r=s}^{t} C(r, s) [t, r] C(m, t) [m-t, i] n^s",
          min, le("i", "m")},
         [](A a) { return rs(a["m"] + a["n"] + 1, a["i"] + a["n"] + 1, a["n"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], n = a["n"];
           Rational sum;
           for (Index t = 0; t <= m - i; ++t) {
             const Rational outer = binom(m, t) * s1(m - t, i);
             for (Index s = 0; s <= t; ++s) {
               for (Index r = s; r <= t; ++r) sum += binom(r, s) * s1(t, r) * outer * num(n).pow(s);
             }
           }
           return sum;
         });

  scalar(reg,
         {"CONV-52", kRStirling,
          "C(j+i, i) [m+r+s, j+i+r+s]_{r+s} = sum_{t=j}^{m-i} C(m, t) [t+r, j+r]_r [m-t+s, i+s]_s",
          {param("m"), param("i"), param("j"), param("r"), param("s")},
          custom("i + j <= m", [](A a) { return a["i"] + a["j"] <= a["m"]; })},
         [](A a) {
           const Index m = a["m"], i = a["i"], j = a["j"], r = a["r"], s = a["s"];
           return binom(j + i, i) * rs(m + r + s, j + i + r + s, r + s);
         },
         [](A a) {
           const Index m = a["m"], i = a["i"], j = a["j"], r = a["r"], s = a["s"];
           Rational sum;
           for (Index t = j; t <= m - i; ++t) sum += binom(m, t) * rs(t + r, j + r, r) * rs(m - t + s, i + s, s);
           return sum;
         });

  scalar(reg,
         {"CONV-6", kRStirling, "C(i+j, i) [m+1, i+j+1] = sum_{t=j}^{m-i} C(m, t) [t+1, j+1] [m-t, i]",
          {param("m"), param("i"), param("j")},
          custom("i + j <= m", [](A a) { return a["i"] + a["j"] <= a["m"]; })},
         [](A a) { return binom(a["i"] + a["j"], a["i"]) * s1(a["m"] + 1, a["i"] + a["j"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], j = a["j"];
           Rational sum;
           for (Index t = j; t <= m - i; ++t) sum += binom(m, t) * s1(t + 1, j + 1) * s1(m - t, i);
           return sum;
         });

  scalar(reg,
         {"REM1", kRStirling, "[m+1, i+1] = sum_{t=0}^{m-i} t! C(m, t) [m-t, i]", {param("m"), param("i")},
          le("i", "m")},
         [](A a) { return s1(a["m"] + 1, a["i"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"];
           Rational sum;
           for (Index t = 0; t <= m - i; ++t) sum += fact(t) * binom(m, t) * s1(m - t, i);
           return sum;
         });

  scalar(reg, {"REM2-S0", kHyperSums, "S_0^(m)(n) = C(n+m, m+1)", {param("m"), param("n")}},
         [](A a) { return Rational(hyper_sum_by_recursion(0, a["m"], a["n"])); },
         [](A a) { return binom(a["n"] + a["m"], a["m"] + 1); });

  scalar(reg,
         {"REM2-RECUR", kHyperSums, "sum_{i=0}^{m} (-1)^i [m+n+1, i+n+1]_{n+1} S_i(n) = m! C(n+m, m+1)",
          {param("m"), param("n")}},
         [](A a) {
           const Index m = a["m"], n = a["n"];
           Rational sum;
           for (Index i = 0; i <= m; ++i) sum += sgn(i) * rs(m + n + 1, i + n + 1, n + 1) * power_sum(i, n);
           return sum;
         },
         [](A a) { return fact(a["m"]) * binom(a["n"] + a["m"], a["m"] + 1); });

  scalar(reg, {"REM2-N1", kHyperSums, "sum_{i=0}^{m} (-1)^i [m+2, i+2]_2 = m!", {param("m")}},
         [](A a) {
           Rational sum;
           for (Index i = 0; i <= a["m"]; ++i) sum += sgn(i) * rs(a["m"] + 2, i + 2, 2);
           return sum;
         },
         [](A a) { return fact(a["m"]); });
}

void add_r_polynomials(Registry& reg) {
  const std::vector<Parameter> mi = {param("m"), param("i")};
  const std::vector<Parameter> mir = {param("m"), param("i"), param("r")};

  poly(reg,
       {"R-TWOFORMS", kRPoly,
        "sum_{j=0}^{m-i} C(m, j) [m-j, i] x^(rising j) = sum_{j=0}^{m-i} C(i+j, i) [m, i+j] x^j", mi,
        le("i", "m")},
       [](A a) { return r_poly_defining_form(a["m"], a["i"]); }, [](A a) { return r_poly(a["m"], a["i"]); });

  scalar(reg, {"R-EVAL", kRPoly, "R_{m,i}(r) = [m+r, i+r]_r", mir, le("i", "m")},
         [](A a) { return r_poly(a["m"], a["i"]).evaluate(num(a["r"])); },
         [](A a) { return rs(a["m"] + a["r"], a["i"] + a["r"], a["r"]); });

  poly(reg, {"R-DERIV", kRPoly, "R_{m,i}(x) = (1/i!) d^i/dx^i x^(rising m)", mi, le("i", "m")},
       [](A a) { return r_poly(a["m"], a["i"]); }, [](A a) { return r_poly_via_derivative(a["m"], a["i"]); });

  scalar(reg, {"RBAR-NEG1", kRPoly, "Rbar_{m,i}(-1) = [m, i]", mi, le("i", "m")},
         [](A a) { return r_bar_poly(a["m"], a["i"]).evaluate(Rational(-1)); },
         [](A a) { return s1(a["m"], a["i"]); });

  scalar(reg, {"GKP-618", kRPoly, "sum_{t=i}^{m} (-1)^(t-i) C(t, i) [m+1, t+1] = [m, i]", mi, le("i", "m")},
         [](A a) {
           Rational sum;
           for (Index t = a["i"]; t <= a["m"]; ++t) sum += sgn(t - a["i"]) * binom(t, a["i"]) * s1(a["m"] + 1, t + 1);
           return sum;
         },
         [](A a) { return s1(a["m"], a["i"]); });

  scalar(reg, {"RBAR-ZERO", kRPoly, "Rbar_{m,i}(0) = [m+1, i+1]", mi, le("i", "m")},
         [](A a) { return r_bar_poly(a["m"], a["i"]).evaluate(Rational(0)); },
         [](A a) { return s1(a["m"] + 1, a["i"] + 1); });

  scalar(reg, {"RBAR-EVAL", kRPoly, "Rbar_{m,i}(r) = [m+r+1, i+r+1]_{r+1} = R_{m,i}(r+1)", mir, le("i", "m")},
         [](A a) { return r_bar_poly(a["m"], a["i"]).evaluate(num(a["r"])); },
         [](A a) { return rs(a["m"] + a["r"] + 1, a["i"] + a["r"] + 1, a["r"] + 1); });

  poly(reg,
       {"RBAR-SHIFT", kRPoly,
        "sum_{j=0}^{m-i} C(i+j, i) [m+1, i+j+1] x^j = sum_{j=0}^{m-i} C(i+j, i) [m, i+j] (x+1)^j", mi,
        le("i", "m")},
       [](A a) { return r_bar_poly(a["m"], a["i"]); },
       [](A a) {
         const Index m = a["m"], i = a["i"];
         Polynomial out;
         for (Index j = 0; j <= m - i; ++j) out += x_plus(Rational(1), j) * (binom(i + j, i) * s1(m, i + j));
         return out;
       });

  auto product = [](Index m) {
    Polynomial out = Polynomial::constant(Rational(1));
    for (Index t = 1; t <= m; ++t) out *= Polynomial::linear(num(t));
    return out;
  };

  poly(reg, {"RBAR-PRODUCT", kRPoly, "sum_{j=0}^{m} [m+1, j+1] x^j = (x+1)(x+2)...(x+m)", {param("m")}},
       [](A a) {
         Polynomial out;
         for (Index j = 0; j <= a["m"]; ++j) out += x_pow(j) * s1(a["m"] + 1, j + 1);
         return out;
       },
       [product](A a) { return product(a["m"]); });

  poly(reg,
       {"RBAR-PRODUCT-SHIFTED", kRPoly, "sum_{j=0}^{m} [m, j] (x+1)^j = (x+1)(x+2)...(x+m)", {param("m")}},
       [](A a) {
         Polynomial out;
         for (Index j = 0; j <= a["m"]; ++j) out += x_plus(Rational(1), j) * s1(a["m"], j);
         return out;
       },
       [product](A a) { return product(a["m"]); });
}

void add_hyperharmonic(Registry& reg) {
  const std::vector<Parameter> ji = {param("j"), param("i")};
  const std::vector<Parameter> jir = {param("j"), param("i"), param("r")};

  scalar(reg, {"HH-CLOSED", kHyperharmonic, "H_n^(r) = (1/n!) [n+r, r+1]_r", {param("n"), param("r")}},
         [](A a) { return hyperharmonic_by_recursion(a["n"], a["r"]); },
         [](A a) { return Rational(1) / fact(a["n"]) * rs(a["n"] + a["r"], a["r"] + 1, a["r"]); });

  scalar(reg,
         {"HH-POLY-EVAL", kHyperharmonic, "H_{j+1}^(n) = (1/(j+1)!) sum_{i=0}^{j} (i+1) [j+1, i+1] n^i",
          {param("j"), param("n")}},
         [](A a) { return hyperharmonic_by_recursion(a["j"] + 1, a["n"]); },
         [](A a) {
           const Index j = a["j"], n = a["n"];
           Rational sum;
           for (Index i = 0; i <= j; ++i) sum += num(i + 1) * s1(j + 1, i + 1) * num(n).pow(i);
           return sum / fact(j + 1);
         });

  scalar(reg, {"HH-HJ", kHyperharmonic, "H_j = (1/j!) sum_{i=1}^{j} i [j, i]", {param("j", 1)}},
         [](A a) { return harm(a["j"]); },
         [](A a) {
           Rational sum;
           for (Index i = 1; i <= a["j"]; ++i) sum += num(i) * s1(a["j"], i);
           return sum / fact(a["j"]);
         });

  poly(reg,
       {"HH-10", kHyperharmonic, "H_{j+1}^(x) = R_{j+1,1}(x)/(j+1)! = (1/(j+1)!) sum_{i=0}^{j} (i+1) [j+1, i+1] x^i",
        {param("j")}},
       [](A a) { return hyperharmonic_poly(a["j"]); },
       [](A a) {
         Polynomial out;
         for (Index i = 0; i <= a["j"]; ++i) out += x_pow(i) * (num(i + 1) * s1(a["j"] + 1, i + 1));
         return out * (Rational(1) / fact(a["j"] + 1));
       });

  poly(reg,
       {"HH-11", kHyperharmonic,
        "H_{j+1}^(x+1) = Rbar_{j+1,1}(x)/(j+1)! = (1/(j+1)!) sum_{i=0}^{j} (i+1) [j+2, i+2] x^i", {param("j")}},
       [](A a) { return hyperharmonic_poly_shifted(a["j"]); },
       [](A a) {
         Polynomial out;
         for (Index i = 0; i <= a["j"]; ++i) out += x_pow(i) * (num(i + 1) * s1(a["j"] + 2, i + 2));
         return out * (Rational(1) / fact(a["j"] + 1));
       });

  poly(reg, {"HH-SHIFT", kHyperharmonic, "H_{j+1}^(x+1) = H_{j+1}^(x) evaluated at x+1", {param("j")}},
       [](A a) { return hyperharmonic_poly_shifted(a["j"]); },
       [](A a) { return hyperharmonic_poly(a["j"]).shift(Rational(1)); });

  poly(reg, {"HH-RISING", kHyperharmonic, "H_{j+1}^(x) = (1/(j+1)!) d/dx x^(rising j+1)", {param("j")}},
       [](A a) { return hyperharmonic_poly(a["j"]); },
       [](A a) { return hyperharmonic_poly_via_derivative(a["j"]); });

  poly(reg, {"HH-BINOMIAL-DERIV", kHyperharmonic, "H_{j+1}^(x) = d/dx C(x+j, j+1)", {param("j")}},
       [](A a) { return hyperharmonic_poly(a["j"]); },
       [](A a) { return binomial_poly(a["j"], a["j"] + 1).derivative(1); });

  poly(reg,
       {"HH-DERIV-12", kHyperharmonic,
        "d^i/dx^i H_{j+1}^(x) = ((i+1)!/(j+1)!) sum_{t=0}^{j-i} C(i+t+1, i+1) [j+1, i+t+1] x^t", ji, le("i", "j")},
       [](A a) { return hyperharmonic_poly(a["j"]).derivative(a["i"]); },
       [](A a) { return hyperharmonic_derivative(a["j"], a["i"], false); });

  poly(reg,
       {"HH-DERIV-13", kHyperharmonic,
        "d^i/dx^i H_{j+1}^(x+1) = ((i+1)!/(j+1)!) sum_{t=0}^{j-i} C(i+t+1, i+1) [j+2, i+t+2] x^t", ji,
        le("i", "j")},
       [](A a) { return hyperharmonic_poly_shifted(a["j"]).derivative(a["i"]); },
       [](A a) { return hyperharmonic_derivative(a["j"], a["i"], true); });

  poly(reg,
       {"HH-DERIV-R", kHyperharmonic, "d^i/dx^i H_{j+1}^(x) = ((i+1)!/(j+1)!) R_{j+1,i+1}(x)", ji, le("i", "j")},
       [](A a) { return hyperharmonic_poly(a["j"]).derivative(a["i"]); },
       [](A a) { return r_poly(a["j"] + 1, a["i"] + 1) * (fact(a["i"] + 1) / fact(a["j"] + 1)); });

  poly(reg,
       {"HH-DERIV-R-SHIFTED", kHyperharmonic, "d^i/dx^i H_{j+1}^(x+1) = ((i+1)!/(j+1)!) R_{j+1,i+1}(x+1)", ji,
        le("i", "j")},
       [](A a) { return hyperharmonic_poly_shifted(a["j"]).derivative(a["i"]); },
       [](A a) { return r_poly(a["j"] + 1, a["i"] + 1).shift(Rational(1)) * (fact(a["i"] + 1) / fact(a["j"] + 1)); });

  poly(reg,
       {"HH-DERIV-RBAR", kHyperharmonic, "d^i/dx^i H_{j+1}^(x+1) = ((i+1)!/(j+1)!) Rbar_{j+1,i+1}(x)", ji,
        le("i", "j")},
       [](A a) { return hyperharmonic_poly_shifted(a["j"]).derivative(a["i"]); },
       [](A a) { return r_bar_poly(a["j"] + 1, a["i"] + 1) * (fact(a["i"] + 1) / fact(a["j"] + 1)); });

  scalar(reg,
         {"HH-DERIV-EVAL", kHyperharmonic, "d^i/dx^i H_{j+1}^(x) at x=r = ((i+1)!/(j+1)!) [j+r+1, i+r+1]_r", jir,
          le("i", "j")},
         [](A a) { return hyperharmonic_poly(a["j"]).derivative(a["i"]).evaluate(num(a["r"])); },
         [](A a) {
           const Index j = a["j"], i = a["i"], r = a["r"];
           return fact(i + 1) / fact(j + 1) * rs(j + r + 1, i + r + 1, r);
         });

  scalar(reg,
         {"HH-DERIV-EVAL-SHIFTED", kHyperharmonic,
          "d^i/dx^i H_{j+1}^(x+1) at x=r = ((i+1)!/(j+1)!) [j+r+2, i+r+2]_{r+1}", jir, le("i", "j")},
         [](A a) { return hyperharmonic_poly_shifted(a["j"]).derivative(a["i"]).evaluate(num(a["r"])); },
         [](A a) {
           const Index j = a["j"], i = a["i"], r = a["r"];
           return fact(i + 1) / fact(j + 1) * rs(j + r + 2, i + r + 2, r + 1);
         });

  poly(reg, {"HH-BINOM", kHyperharmonic, "H_{j+1}^(x+1) = sum_{t=0}^{j} C(x+t, t) / (j+1-t)", {param("j")}},
       [](A a) { return hyperharmonic_poly_shifted(a["j"]); },
       [](A a) { return hyperharmonic_poly_shifted_via_binomials(a["j"]); });

  auto binom_deriv_sum = [](Index j, Index i) {
    Polynomial out;
    for (Index t = 0; t <= j; ++t) out += binomial_poly(t, t).derivative(i) * frac(1, j + 1 - t);
    return out;
  };

  poly(reg,
       {"HH-BINOM-DERIV", kHyperharmonic,
        "sum_{t=0}^{j} (1/(j+1-t)) d^i/dx^i C(x+t, t) = ((i+1)!/(j+1)!) sum_{t=0}^{j-i} C(i+t+1, i+1) [j+2, i+t+2] "
        "x^t",
        ji, le("i", "j")},
       [binom_deriv_sum](A a) { return binom_deriv_sum(a["j"], a["i"]); },
       [](A a) { return hyperharmonic_derivative(a["j"], a["i"], true); });

  scalar(reg,
         {"HH-BINOM-DERIV-EVAL", kHyperharmonic,
          "sum_{t=0}^{j} (1/(j+1-t)) d^i/dx^i C(x+t, t) at x=r = ((i+1)!/(j+1)!) [j+r+2, i+r+2]_{r+1}", jir,
          le("i", "j")},
         [binom_deriv_sum](A a) { return binom_deriv_sum(a["j"], a["i"]).evaluate(num(a["r"])); },
         [](A a) {
           const Index j = a["j"], i = a["i"], r = a["r"];
           return fact(i + 1) / fact(j + 1) * rs(j + r + 2, i + r + 2, r + 1);
         });

  scalar(reg,
         {"WUYU-14", kHyperharmonic,
          "sum_{t=0}^{j} [t+r, i+r]_r / (t! (j+1-t)) = ((i+1)/(j+1)!) [j+r+1, i+r+1]_r", jir, le("i", "j")},
         [](A a) {
           const Index j = a["j"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index t = 0; t <= j; ++t) sum += rs(t + r, i + r, r) / (fact(t) * num(j + 1 - t));
           return sum;
         },
         [](A a) {
           const Index j = a["j"], i = a["i"], r = a["r"];
           return num(i + 1) / fact(j + 1) * rs(j + r + 1, i + r + 1, r);
         });

  auto wuyu_lhs = [](A a) {
    Rational sum;
    for (Index t = 0; t <= a["j"]; ++t) sum += harm(t) / num(a["j"] + 1 - t);
    return sum;
  };

  scalar(reg,
         {"WUYU-SPECIAL", kHyperharmonic, "sum_{t=0}^{j} H_t / (j+1-t) = H_{j+1}^2 - H_{j+1}^[2]", {param("j")}},
         wuyu_lhs, [](A a) { return harm(a["j"] + 1).pow(2) - harm(a["j"] + 1, 2); });

  scalar(reg,
         {"WUYU-SPECIAL-STIRLING", kHyperharmonic, "sum_{t=0}^{j} H_t / (j+1-t) = (2/(j+1)!) [j+2, 3]",
          {param("j")}},
         wuyu_lhs, [](A a) { return num(2) / fact(a["j"] + 1) * s1(a["j"] + 2, 3); });

  scalar(reg,
         {"HH-NEG-ORDER", kHyperharmonic, "H_{n+1}^(-1) = -1/(n(n+1)) for n >= 1, and 1 for n = 0", {param("n")}},
         [](A a) { return hyperharmonic_poly(a["n"]).evaluate(Rational(-1)); },
         [](A a) { return a["n"] == 0 ? Rational(1) : -frac(1, a["n"] * (a["n"] + 1)); });

  scalar(reg,
         {"CONWAY-GUY", kHyperharmonic, "H_j^(r) = C(j+r-1, r-1) (H_{j+r-1} - H_{r-1})",
          {param("j"), param("r", 1)}},
         [](A a) { return hyperharmonic_by_recursion(a["j"], a["r"]); },
         [](A a) {
           const Index j = a["j"], r = a["r"];
           return binom(j + r - 1, r - 1) * (harm(j + r - 1) - harm(r - 1));
         });

  scalar(reg,
         {"CONWAY-GUY-SHIFTED", kHyperharmonic, "H_j^(x+1) at x=r-1 = C(j+r-1, r-1) H(j, 1; r-1)",
          {param("j", 1), param("r", 1)}},
         [](A a) { return hyperharmonic_poly_shifted(a["j"] - 1).evaluate(num(a["r"] - 1)); },
         [](A a) {
           const Index j = a["j"], r = a["r"];
           return binom(j + r - 1, r - 1) * harmonic({j, 1, r - 1});
         });
}

void add_bell(Registry& reg) {
  const std::vector<Parameter> jir = {param("j", 1), param("i"), param("r")};
  const Constraint below_j = custom("i + 1 <= j", [](A a) { return a["i"] + 1 <= a["j"]; });

  auto myres = [](A a) {
    const Index j = a["j"], i = a["i"], r = a["r"];
    return fact(i + 1) / fact(j) * rs(j + r + 1, i + r + 2, r + 1);
  };
  auto hisres = [](A a) {
    const Index j = a["j"], i = a["i"], r = a["r"];
    return binom(j + r, r) * p_num(i + 1, j + r, r);
  };
  auto deriv_at_r = [](A a) {
    return hyperharmonic_poly_shifted(a["j"] - 1).derivative(a["i"]).evaluate(num(a["r"]));
  };

  scalar(reg,
         {"MYRES-15", kBell, "d^i/dx^i H_j^(x+1) at x=r = ((i+1)!/j!) [j+r+1, i+r+2]_{r+1}", jir, below_j},
         deriv_at_r, myres);
  scalar(reg, {"HISRES-16", kBell, "d^i/dx^i H_j^(x+1) at x=r = C(j+r, r) P(i+1, j+r, r)", jir, below_j},
         deriv_at_r, hisres);
  scalar(reg, {"MYRES-HISRES", kBell, "((i+1)!/j!) [j+r+1, i+r+2]_{r+1} = C(j+r, r) P(i+1, j+r, r)", jir, below_j},
         myres, hisres);
  scalar(reg, {"KOLBIG-BRIDGE", kBell, "C(j+r, r) P(i+1, j+r, r) = ((i+1)!/j!) S(j, i+1; r)", jir, below_j}, hisres,
         [](A a) { return fact(a["i"] + 1) / fact(a["j"]) * kolbig_s(a["j"], a["i"] + 1, num(a["r"])); });

  // Explicit low-order P-polynomials, checked at seeded rational points.
  scalar(reg,
         {"P-LIST", kBell,
          "P_1 = x1; P_2 = x1^2 - x2; P_3 = x1^3 - 3x1x2 + 2x3; P_4 = x1^4 - 6x1^2x2 + 8x1x3 + 3x2^2 - 6x4; "
          "P_5 = x1^5 - 10x1^3x2 + 20x1^2x3 + 15x1x2^2 - 30x1x4 - 20x2x3 + 24x5",
          {param("i", 1, 5), param("s")}},
         [](A a) { return p_polynomial(a["i"], sample_point(a["s"], a["i"])); },
         [](A a) {
           const auto p = sample_point(a["s"], a["i"]);
           auto x = [&](Index k) { return p.at(k); };
           switch (a["i"]) {
             case 1: return x(1);
             case 2: return x(1).pow(2) - x(2);
             case 3: return x(1).pow(3) - num(3) * x(1) * x(2) + num(2) * x(3);
             case 4:
               return x(1).pow(4) - num(6) * x(1).pow(2) * x(2) + num(8) * x(1) * x(3) + num(3) * x(2).pow(2) -
                      num(6) * x(4);
             default:
               return x(1).pow(5) - num(10) * x(1).pow(3) * x(2) + num(20) * x(1).pow(2) * x(3) +
                      num(15) * x(1) * x(2).pow(2) - num(30) * x(1) * x(4) - num(20) * x(2) * x(3) + num(24) * x(5);
           }
         });

  scalar(reg,
         {"P-ALT", kBell, "(-1)^i Y_i(-0! x1, ..., -(i-1)! x_i) = Y_i(0! x1, -1! x2, ..., (-1)^(i-1) (i-1)! x_i)",
          {param("i"), param("s")}},
         [](A a) { return p_polynomial(a["i"], sample_point(a["s"], a["i"])); },
         [](A a) {
           const Index i = a["i"];
           BellArguments p = sample_point(a["s"], i);
           for (Index k = 1; k <= i; ++k) {
             p.values[static_cast<std::size_t>(k - 1)] *= sgn(k - 1) * fact(k - 1);
           }
           return complete_bell(i, p);
         });

  scalar(reg,
         {"BELL-SERIES", kBell, "Y_n(x1, ..., xn) = n! [t^n] exp(sum_j x_j t^j / j!)", {param("n"), param("s")}},
         [](A a) { return complete_bell(a["n"], sample_point(a["s"], a["n"])); },
         [](A a) { return complete_bell_via_series(a["n"], sample_point(a["s"], a["n"])); });

  auto kolbig_lhs = [](Index j, Index q, const Rational& alpha) {
    return p_polynomial(q, harmonic_arguments(j, q, alpha));
  };

  scalar(reg,
         {"KOLBIG", kBell,
          "P_q(H(j,1;a), ..., H(j,q;a)) = q! S(j,q;a) / (1+a)^(rising j) for q <= j, 0 for q > j; "
          "a = 1/2, 2, 7/3, -1/3 for a-index 0..3",
          {param("j", 1), param("q", 1), param("a", 0, 3)}},
         [kolbig_lhs](A a) {
           return kolbig_lhs(a["j"], a["q"], kolbig_test_points()[static_cast<std::size_t>(a["a"])]);
         },
         [](A a) { return kolbig_p_value(a["j"], a["q"], kolbig_test_points()[static_cast<std::size_t>(a["a"])]); });

  scalar(reg,
         {"KOLBIG-INT", kBell,
          "P_q(H(j,1;r), ..., H(j,q;r)) = q! S(j,q;r) / (1+r)^(rising j) for q <= j, 0 for q > j",
          {param("j", 1), param("q", 1), param("r")}},
         [kolbig_lhs](A a) { return kolbig_lhs(a["j"], a["q"], num(a["r"])); },
         [](A a) { return kolbig_p_value(a["j"], a["q"], num(a["r"])); });

  scalar(reg, {"KOLBIG-S", kBell, "S(j, i+1; r) = R_{j,i+1}(r+1) = [j+r+1, i+r+2]_{r+1}", jir, below_j},
         [](A a) { return kolbig_s(a["j"], a["i"] + 1, num(a["r"])); },
         [](A a) { return r_poly(a["j"], a["i"] + 1).evaluate(num(a["r"] + 1)); });

  scalar(reg, {"BINOM-RISING", kBell, "C(j+r, r) = (1+r)^(rising j) / j!", {param("j"), param("r")}},
         [](A a) { return binom(a["j"] + a["r"], a["r"]); },
         [](A a) { return rising_factorial_value(num(1 + a["r"]), a["j"]) / fact(a["j"]); });

  const std::vector<Parameter> ijr = {param("i"), param("j"), param("r")};

  scalar(reg,
         {"MYRES2-17", kBell, "C(j+r, r) P(i, j+r, r) = (i!/j!) [j+r+1, i+r+1]_{r+1}", ijr, le("i", "j")},
         [](A a) { return binom(a["j"] + a["r"], a["r"]) * p_number(a["i"], a["j"], a["r"]); },
         [](A a) {
           const Index i = a["i"], j = a["j"], r = a["r"];
           return fact(i) / fact(j) * rs(j + r + 1, i + r + 1, r + 1);
         });

  scalar(reg,
         {"P-R0", kBell, "[j+1, i+1] = (j!/i!) P_i(H_j^[1], ..., H_j^[i])", {param("i"), param("j")}, le("i", "j")},
         [](A a) { return s1(a["j"] + 1, a["i"] + 1); },
         [](A a) {
           const Index i = a["i"], j = a["j"];
           BellArguments h;
           for (Index k = 1; k <= i; ++k) h.values.push_back(harm(j, k));
           return fact(j) / fact(i) * p_polynomial(i, h);
         });

  scalar(reg,
         {"WANG-42", kBell, "d^i/dx^i x^(rising j) at x=r+1 = j! C(j+r, r) P(i, j+r, r)", ijr, le("i", "j")},
         [](A a) { return rising_factorial_poly(a["j"]).derivative(a["i"]).evaluate(num(a["r"] + 1)); },
         [](A a) {
           const Index i = a["i"], j = a["j"], r = a["r"];
           return fact(j) * binom(j + r, r) * p_number(i, j, r);
         });

  scalar(reg,
         {"WANG2-270", kBell, "d^i/dx^i C(x+n, m) at x=0 = C(n, m) P(i, n, n-m), n >= m > 0",
          {param("i"), param("m", 1), param("n", 1)}, le("m", "n")},
         [](A a) { return binomial_poly(a["n"], a["m"]).derivative(a["i"]).evaluate(Rational(0)); },
         [](A a) {
           const Index i = a["i"], m = a["m"], n = a["n"];
           return binom(n, m) * p_num(i, n, n - m);
         });

  scalar(reg,
         {"SPIESS-T16-P", kBell, "sum_{k=0}^{m} P(r, k, 0) / (k+1) = P(r+1, m+1, 0) / (r+1)",
          {param("m"), param("r")}},
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["m"]; ++k) sum += p_num(a["r"], k, 0) / num(k + 1);
           return sum;
         },
         [](A a) { return p_num(a["r"] + 1, a["m"] + 1, 0) / num(a["r"] + 1); });

  scalar(reg,
         {"SPIESS-T16", kBell, "[m+1, r+1] = m! sum_{k=0}^{m} [k, r] / k!", {param("m"), param("r")}},
         [](A a) { return s1(a["m"] + 1, a["r"] + 1); },
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["m"]; ++k) sum += s1(k, a["r"]) / fact(k);
           return fact(a["m"]) * sum;
         });

  scalar(reg,
         {"P-RECUR-REMARK", kBell, "sum_{i=0}^{m} ((-1)^i / i!) P(i, m+n, n) S_i(n) = n / (m+1)",
          {param("m"), param("n")}},
         [](A a) {
           const Index m = a["m"], n = a["n"];
           Rational sum;
           for (Index i = 0; i <= m; ++i) sum += sgn(i) / fact(i) * p_num(i, m + n, n) * power_sum(i, n);
           return sum;
         },
         [](A a) { return frac(a["n"], a["m"] + 1); });

  scalar(reg,
         {"P-RECUR-N1", kBell, "sum_{i=0}^{m} ((-1)^i / i!) P(i, m+1, 1) = 1 / (m+1)", {param("m")}},
         [](A a) {
           Rational sum;
           for (Index i = 0; i <= a["m"]; ++i) sum += sgn(i) / fact(i) * p_num(i, a["m"] + 1, 1);
           return sum;
         },
         [](A a) { return frac(1, a["m"] + 1); });
}

void add_generating_functions(Registry& reg) {
  scalar(reg,
         {"EGF-RSTIRLING", kEgf,
          "[t^j] (1/i!) (-log(1-t))^i / (1-t)^r = [j+r, i+r]_r / j!", {param("i"), param("r"), param("j")}},
         [](A a) {
           const auto order = static_cast<std::size_t>(a["j"]) + 1;
           TruncatedSeries s =
               power(neg_log_one_minus_t(order), a["i"]) * one_minus_t_power(-a["r"], order) * (Rational(1) / fact(a["i"]));
           return s.coefficient(static_cast<std::size_t>(a["j"]));
         },
         [](A a) { return rs(a["j"] + a["r"], a["i"] + a["r"], a["r"]) / fact(a["j"]); });

  scalar(reg,
         {"EGF-WANG", kEgf, "[t^j] (-log(1-t))^i / (1-t)^(r+1) = C(j+r, r) P(i, j+r, r)",
          {param("i"), param("r"), param("j")}},
         [](A a) {
           const auto order = static_cast<std::size_t>(a["j"]) + 1;
           TruncatedSeries s = power(neg_log_one_minus_t(order), a["i"]) * one_minus_t_power(-a["r"] - 1, order);
           return s.coefficient(static_cast<std::size_t>(a["j"]));
         },
         [](A a) { return binom(a["j"] + a["r"], a["r"]) * p_number(a["i"], a["j"], a["r"]); });

  scalar(reg,
         {"EGF-LOG", kEgf, "[t^j] (-log(1-t))^i = (i!/j!) [j, i]", {param("i", 1), param("j")}},
         [](A a) {
           const auto order = static_cast<std::size_t>(a["j"]) + 1;
           return power(neg_log_one_minus_t(order), a["i"]).coefficient(static_cast<std::size_t>(a["j"]));
         },
         [](A a) { return fact(a["i"]) / fact(a["j"]) * s1(a["j"], a["i"]); });

  scalar(reg,
         {"EGF-LOG-P", kEgf, "[t^j] (-log(1-t))^i = (i/j) P(i-1, j-1, 0)", {param("i", 1), param("j", 1)}},
         [](A a) {
           const auto order = static_cast<std::size_t>(a["j"]) + 1;
           return power(neg_log_one_minus_t(order), a["i"]).coefficient(static_cast<std::size_t>(a["j"]));
         },
         [](A a) { return frac(a["i"], a["j"]) * p_num(a["i"] - 1, a["j"] - 1, 0); });

  scalar(reg, {"MACLAURIN-LOG", kEgf, "log(1-t) = -sum_{j>=1} t^j / j", {param("j")}},
         [](A a) {
           const auto order = static_cast<std::size_t>(a["j"]) + 1;
           TruncatedSeries one_minus_t({Rational(1), Rational(-1)}, order);
           return log(one_minus_t).coefficient(static_cast<std::size_t>(a["j"]));
         },
         [](A a) { return a["j"] == 0 ? Rational(0) : -frac(1, a["j"]); });
}

void add_bernoulli(Registry& reg) {
  const std::vector<Parameter> ki = {param("k"), param("i", 1)};

  scalar(reg, {"HB-KIM", kBernoulli, "B_k^(i) = sum_{j=0}^{k} (-1)^j [i+j, i] {k, j} / C(i+j, i)", ki},
         [](A a) { return higher_bernoulli(a["k"], a["i"]); },
         [](A a) { return higher_bernoulli_kim(a["k"], a["i"]); });

  scalar(reg,
         {"HB-SRIVASTAVA", kBernoulli,
          "B_k^(i) = sum_{j=0}^{k} (-1)^j C(k+i, i+j) C(i+j-1, i-1) {k+j, j} / C(k+j, j)", ki},
         [](A a) { return higher_bernoulli(a["k"], a["i"]); },
         [](A a) { return higher_bernoulli_srivastava(a["k"], a["i"]); });

  scalar(reg, {"HB-ORDER1", kBernoulli, "B_k^(1) = B_k", {param("k")}},
         [](A a) { return higher_bernoulli(a["k"], 1); }, [](A a) { return bern(a["k"]); });

  const std::vector<Parameter> lqrn = {param("l"), param("q"), param("r"), param("n")};

  auto fin_sum = [](Index l, Index n, Index r, Index shift, const Rational& x) {
    // sum_{k=l}^{n} [n+r+shift, k+r+shift]_{r+shift} C(k, l) B_{k-l}(x)
    Rational sum;
    for (Index k = l; k <= n; ++k) {
      sum += rs(n + r + shift, k + r + shift, r + shift) * binom(k, l) * bern_at(k - l, x);
    }
    return sum;
  };

  scalar(reg,
         {"FIN1", kBernoulli,
          "sum_{k=l}^{n} [n+r, k+r]_r C(k, l) B_{k-l}(q) = ((l+1)/(n+1)) [n+q+r, l+q+r]_{q+r-1}", lqrn,
          custom("l <= n, q + r >= 1", [](A a) { return a["l"] <= a["n"] && a["q"] + a["r"] >= 1; })},
         [fin_sum](A a) { return fin_sum(a["l"], a["n"], a["r"], 0, num(a["q"])); },
         [](A a) {
           const Index l = a["l"], q = a["q"], r = a["r"], n = a["n"];
           return frac(l + 1, n + 1) * rs(n + q + r, l + q + r, q + r - 1);
         });

  // At q = r = 0 the right side leaves the r-Stirling domain; R_{n+1,l+1}(x)
  // continues it to x = -1.
  scalar(reg,
         {"FIN1-EXT", kBernoulli,
          "sum_{k=l}^{n} [n, k] C(k, l) B_{k-l} = ((l+1)/(n+1)) R_{n+1,l+1}(-1)", {param("l"), param("n")},
          le("l", "n")},
         [fin_sum](A a) { return fin_sum(a["l"], a["n"], 0, 0, Rational(0)); },
         [](A a) { return frac(a["l"] + 1, a["n"] + 1) * r_poly(a["n"] + 1, a["l"] + 1).evaluate(Rational(-1)); });

  scalar(reg,
         {"FIN2", kBernoulli,
          "sum_{k=l}^{n} [n+r+1, k+r+1]_{r+1} C(k, l) B_{k-l}(q) = ((l+1)/(n+1)) [n+q+r+1, l+q+r+1]_{q+r}", lqrn,
          le("l", "n")},
         [fin_sum](A a) { return fin_sum(a["l"], a["n"], a["r"], 1, num(a["q"])); },
         [](A a) {
           const Index l = a["l"], q = a["q"], r = a["r"], n = a["n"];
           return frac(l + 1, n + 1) * rs(n + q + r + 1, l + q + r + 1, q + r);
         });

  scalar(reg,
         {"FIN3", kBernoulli,
          "sum_{k=l}^{n} [n+r, k+r]_r C(k, l) B_{k-l}(q+1) = ((l+1)/(n+1)) [n+q+r+1, l+q+r+1]_{q+r}", lqrn,
          le("l", "n")},
         [fin_sum](A a) { return fin_sum(a["l"], a["n"], a["r"], 0, num(a["q"] + 1)); },
         [](A a) {
           const Index l = a["l"], q = a["q"], r = a["r"], n = a["n"];
           return frac(l + 1, n + 1) * rs(n + q + r + 1, l + q + r + 1, q + r);
         });

  scalar(reg,
         {"FIN-EXAMPLE", kBernoulli,
          "sum_{k=2}^{n} (-1)^k [n+1, k+1] k(k-1) B_{k-2} = (6/(n+1)) [n+2, 4]", {param("n", 2)}},
         [](A a) {
           const Index n = a["n"];
           Rational sum;
           for (Index k = 2; k <= n; ++k) sum += sgn(k) * s1(n + 1, k + 1) * num(k * (k - 1)) * bern(k - 2);
           return sum;
         },
         [](A a) { return frac(6, a["n"] + 1) * s1(a["n"] + 2, 4); });

  scalar(reg,
         {"FIN-EXAMPLE-H", kBernoulli,
          "(6/(n+1)) [n+2, 4] = n! (H_{n+1}^3 - 3 H_{n+1} H_{n+1}^[2] + 2 H_{n+1}^[3])", {param("n")}},
         [](A a) { return frac(6, a["n"] + 1) * s1(a["n"] + 2, 4); },
         [](A a) {
           const Index n1 = a["n"] + 1;
           const Rational h = harm(n1);
           return fact(a["n"]) * (h.pow(3) - num(3) * h * harm(n1, 2) + num(2) * harm(n1, 3));
         });

  const std::vector<Parameter> lnr = {param("l"), param("n"), param("r")};

  auto fin_poly = [](Index l, Index n, Index r, Index shift, const Rational& x_shift) {
    // sum_{k=l}^{n} [n+r+shift, k+r+shift]_{r+shift} C(k, l) B_{k-l}(x + x_shift)
    Polynomial out;
    for (Index k = l; k <= n; ++k) {
      out += bernoulli_poly(k - l).shift(x_shift) * (rs(n + r + shift, k + r + shift, r + shift) * binom(k, l));
    }
    return out;
  };

  poly(reg,
       {"BERN-SHIFT", kBernoulli,
        "sum_{k=l}^{n} [n+r+1, k+r+1]_{r+1} C(k, l) B_{k-l}(x) = sum_{k=l}^{n} [n+r, k+r]_r C(k, l) B_{k-l}(x+1)",
        lnr, le("l", "n")},
       [fin_poly](A a) { return fin_poly(a["l"], a["n"], a["r"], 1, Rational(0)); },
       [fin_poly](A a) { return fin_poly(a["l"], a["n"], a["r"], 0, Rational(1)); });

  poly(reg,
       {"BERN-SHIFT-R0", kBernoulli,
        "sum_{j=0}^{m-i} C(i+j, i) [m+1, i+j+1] B_j(x) = sum_{j=0}^{m-i} C(i+j, i) [m, i+j] B_j(x+1)",
        {param("m"), param("i")}, le("i", "m")},
       [](A a) {
         const Index m = a["m"], i = a["i"];
         Polynomial out;
         for (Index j = 0; j <= m - i; ++j) out += bernoulli_poly(j) * (binom(i + j, i) * s1(m + 1, i + j + 1));
         return out;
       },
       [](A a) {
         const Index m = a["m"], i = a["i"];
         Polynomial out;
         for (Index j = 0; j <= m - i; ++j) {
           out += bernoulli_poly(j).shift(Rational(1)) * (binom(i + j, i) * s1(m, i + j));
         }
         return out;
       });

  poly(reg,
       {"FIN4", kBernoulli,
        "sum_{k=l}^{n} [n+r, k+r]_r C(k, l) B_{k-l}(x) = ((l+1)/(n+1)) sum_{k=l}^{n} C(k+1, l+1) [n+1, k+1] "
        "(x+r-1)^(k-l)",
        lnr, le("l", "n")},
       [fin_poly](A a) { return fin_poly(a["l"], a["n"], a["r"], 0, Rational(0)); },
       [](A a) {
         const Index l = a["l"], n = a["n"], r = a["r"];
         Polynomial out;
         for (Index k = l; k <= n; ++k) out += x_plus(num(r - 1), k - l) * (binom(k + 1, l + 1) * s1(n + 1, k + 1));
         return out * frac(l + 1, n + 1);
       });

  auto fin5_lhs = [](Index n, Index r) {
    Polynomial out;
    for (Index k = 0; k <= n; ++k) out += bernoulli_poly(k) * rs(n + r, k + r, r);
    return out;
  };

  poly(reg,
       {"FIN5", kBernoulli, "sum_{k=0}^{n} [n+r, k+r]_r B_k(x) = n! H_{n+1}^(x+r-1)", {param("n"), param("r")}},
       [fin5_lhs](A a) { return fin5_lhs(a["n"], a["r"]); },
       [](A a) { return hyperharmonic_poly(a["n"]).shift(num(a["r"] - 1)) * fact(a["n"]); });

  scalar(reg,
         {"FIN5-NEGR", kBernoulli, "sum_{k=0}^{n} [n+r, k+r]_r B_k(-r) = n! H_{n+1}^(-1)", {param("n"), param("r")}},
         [fin5_lhs](A a) { return fin5_lhs(a["n"], a["r"]).evaluate(num(-a["r"])); },
         [](A a) { return fact(a["n"]) * hyperharmonic_poly(a["n"]).evaluate(Rational(-1)); });

  scalar(reg,
         {"BERN-NEGR", kBernoulli, "sum_{k=0}^{n} [n+r, k+r]_r B_k(-r) = -n! / (n(n+1))",
          {param("n", 1), param("r")}},
         [](A a) {
           const Index n = a["n"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= n; ++k) sum += rs(n + r, k + r, r) * bern_at(k, num(-r));
           return sum;
         },
         [](A a) { return -fact(a["n"]) / num(a["n"] * (a["n"] + 1)); });

  scalar(reg, {"BERN-R0", kBernoulli, "sum_{k=0}^{n} [n, k] B_k = -(n-1)! / (n+1)", {param("n", 1)}},
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["n"]; ++k) sum += s1(a["n"], k) * bern(k);
           return sum;
         },
         [](A a) { return -fact(a["n"] - 1) / num(a["n"] + 1); });

  poly(reg,
       {"BER-23", kBernoulli, "B_k(x) = (-1)^k sum_{j=0}^{k} (-1)^j j! {k+1, j+1} H_{j+1}^(x)", {param("k")}},
       [](A a) { return bernoulli_poly(a["k"]); }, [](A a) { return bernoulli_poly_via_hyperharmonic(a["k"]); });

  poly(reg,
       {"BER-23-EXPANDED", kBernoulli,
        "B_k(x) = (-1)^k sum_{i=0}^{k} sum_{j=i}^{k} (-1)^j ((i+1)/(j+1)) {k+1, j+1} [j+1, i+1] x^i", {param("k")}},
       [](A a) { return bernoulli_poly(a["k"]); },
       [](A a) {
         const Index k = a["k"];
         std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
         for (Index i = 0; i <= k; ++i) {
           Rational sum;
           for (Index j = i; j <= k; ++j) sum += sgn(j) * frac(i + 1, j + 1) * s2(k + 1, j + 1) * s1(j + 1, i + 1);
           c[static_cast<std::size_t>(i)] = sgn(k) * sum;
         }
         return Polynomial(std::move(c));
       });

  scalar(reg,
         {"BER-BK", kBernoulli, "B_k = (-1)^k sum_{j=0}^{k} (-1)^j (j!/(j+1)) {k+1, j+1}", {param("k")}},
         [](A a) { return bern(a["k"]); },
         [](A a) {
           const Index k = a["k"];
           Rational sum;
           for (Index j = 0; j <= k; ++j) sum += sgn(j) * fact(j) / num(j + 1) * s2(k + 1, j + 1);
           return sgn(k) * sum;
         });

  poly(reg,
       {"BER-DERIV", kBernoulli, "d^i/dx^i B_k(x) = i! C(k, i) B_{k-i}(x)", {param("k"), param("i")}, le("i", "k")},
       [](A a) { return bernoulli_poly(a["k"]).derivative(a["i"]); },
       [](A a) { return bernoulli_poly(a["k"] - a["i"]) * (fact(a["i"]) * binom(a["k"], a["i"])); });

  auto ber_deriv_sum = [](Index k, Index i) {
    Polynomial out;
    for (Index j = i; j <= k; ++j) out += r_poly(j + 1, i + 1) * (sgn(j) / num(j + 1) * s2(k + 1, j + 1));
    return out * (sgn(k) * fact(i + 1));
  };

  poly(reg,
       {"BER-DERIV-R", kBernoulli,
        "i! C(k, i) B_{k-i}(x) = (-1)^k (i+1)! sum_{j=i}^{k} ((-1)^j/(j+1)) {k+1, j+1} R_{j+1,i+1}(x)",
        {param("k"), param("i")}, le("i", "k")},
       [](A a) { return bernoulli_poly(a["k"] - a["i"]) * (fact(a["i"]) * binom(a["k"], a["i"])); },
       [ber_deriv_sum](A a) { return ber_deriv_sum(a["k"], a["i"]); });

  scalar(reg,
         {"BER-DERIV-EVAL", kBernoulli,
          "d^i/dx^i B_k(x) at x=r = (-1)^k (i+1)! sum_{j=i}^{k} ((-1)^j/(j+1)) {k+1, j+1} [j+r+1, i+r+1]_r",
          {param("k"), param("i"), param("r")}, le("i", "k")},
         [](A a) { return bernoulli_poly(a["k"]).derivative(a["i"]).evaluate(num(a["r"])); },
         [](A a) {
           const Index k = a["k"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index j = i; j <= k; ++j) sum += sgn(j) / num(j + 1) * s2(k + 1, j + 1) * rs(j + r + 1, i + r + 1, r);
           return sgn(k) * fact(i + 1) * sum;
         });

  scalar(reg,
         {"BER-AT-R", kBernoulli, "B_k(r) = (-1)^k sum_{j=0}^{k} ((-1)^j/(j+1)) {k+1, j+1} [j+r+1, r+1]_r",
          {param("k"), param("r")}},
         [](A a) { return bern_at(a["k"], num(a["r"])); },
         [](A a) {
           const Index k = a["k"], r = a["r"];
           Rational sum;
           for (Index j = 0; j <= k; ++j) sum += sgn(j) / num(j + 1) * s2(k + 1, j + 1) * rs(j + r + 1, r + 1, r);
           return sgn(k) * sum;
         });

  const std::vector<Parameter> mir = {param("m"), param("i", 1), param("r")};

  auto it5_lhs = [](Index m, Index i, Index r) {
    Rational sum;
    for (Index k = 0; k <= m; ++k) sum += sgn(k) * rs(m + r + 1, k + r + 1, r + 1) * higher_bernoulli(k, i);
    return sum;
  };
  auto it5_rhs = [](Index m, Index i, Index r) {
    return rs(m + i + r + 1, i + r + 1, r + 1) / binom(m + i, i);
  };

  scalar(reg,
         {"IT5", kBernoulli,
          "sum_{k=0}^{m} (-1)^k [m+r+1, k+r+1]_{r+1} B_k^(i) = [m+i+r+1, i+r+1]_{r+1} / C(m+i, i)", mir},
         [it5_lhs](A a) { return it5_lhs(a["m"], a["i"], a["r"]); },
         [it5_rhs](A a) { return it5_rhs(a["m"], a["i"], a["r"]); });

  scalar(reg,
         {"IT5-I1", kBernoulli, "sum_{k=0}^{m} (-1)^k [m+r+1, k+r+1]_{r+1} B_k = [m+r+2, r+2]_{r+1} / (m+1)",
          {param("m"), param("r")}},
         [](A a) {
           const Index m = a["m"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += sgn(k) * rs(m + r + 1, k + r + 1, r + 1) * bern(k);
           return sum;
         },
         [](A a) { return rs(a["m"] + a["r"] + 2, a["r"] + 2, a["r"] + 1) / num(a["m"] + 1); });

  scalar(reg, {"IT5-R0", kBernoulli, "sum_{k=0}^{m} (-1)^k [m+1, k+1] B_k = m! H_{m+1}", {param("m")}},
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["m"]; ++k) sum += sgn(k) * s1(a["m"] + 1, k + 1) * bern(k);
           return sum;
         },
         [](A a) { return fact(a["m"]) * harm(a["m"] + 1); });

  auto shifted_rhs = [](Index m, Index i, Index r) { return rs(m + i + r, i + r, r) / binom(m + i, i); };

  scalar(reg,
         {"IT6", kBernoulli,
          "sum_{k=0}^{m} sum_{j=0}^{k} (-1)^(k+j) ([i+j, i] / C(i+j, i)) {k, j} [m+r, k+r]_r = [m+i+r, i+r]_r / "
          "C(m+i, i)",
          mir},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) {
             for (Index j = 0; j <= k; ++j) {
               sum += sgn(k + j) * s1(i + j, i) / binom(i + j, i) * s2(k, j) * rs(m + r, k + r, r);
             }
           }
           return sum;
         },
         [shifted_rhs](A a) { return shifted_rhs(a["m"], a["i"], a["r"]); });

  scalar(reg,
         {"IT6-SPECIAL", kBernoulli,
          "sum_{k=0}^{m} sum_{j=0}^{k} (-1)^(k+j) (j!/(j+2)) {k, j} [m, k] H_{j+1} = (m!/(m+2)) H_{m+1}",
          {param("m")}},
         [](A a) {
           const Index m = a["m"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) {
             for (Index j = 0; j <= k; ++j) {
               sum += sgn(k + j) * fact(j) / num(j + 2) * s2(k, j) * s1(m, k) * harm(j + 1);
             }
           }
           return sum;
         },
         [](A a) { return fact(a["m"]) / num(a["m"] + 2) * harm(a["m"] + 1); });

  scalar(reg,
         {"IT7", kBernoulli,
          "sum_{k=0}^{m} sum_{j=0}^{k} (-1)^(k+j) (C(k+i, i+j) C(i+j-1, i-1) / C(k+j, j)) {k+j, j} [m+r, k+r]_r = "
          "[m+i+r, i+r]_r / C(m+i, i)",
          mir},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) {
             for (Index j = 0; j <= k; ++j) {
               sum += sgn(k + j) * binom(k + i, i + j) * binom(i + j - 1, i - 1) / binom(k + j, j) * s2(k + j, j) *
                      rs(m + r, k + r, r);
             }
           }
           return sum;
         },
         [shifted_rhs](A a) { return shifted_rhs(a["m"], a["i"], a["r"]); });

  scalar(reg,
         {"IT7-SPECIAL", kBernoulli,
          "sum_{k=0}^{m} sum_{j=0}^{k} (-1)^(k+j) (j+1)(j+2) (C(k+3, j+3) / C(k+j, j)) {k+j, j} [m, k] = "
          "(6 m!/(m+3)) (H_{m+2}^2 - H_{m+2}^[2])",
          {param("m")}},
         [](A a) {
           const Index m = a["m"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) {
             for (Index j = 0; j <= k; ++j) {
               sum += sgn(k + j) * num((j + 1) * (j + 2)) * binom(k + 3, j + 3) / binom(k + j, j) * s2(k + j, j) *
                      s1(m, k);
             }
           }
           return sum;
         },
         [](A a) {
           const Index m = a["m"];
           return num(6) * fact(m) / num(m + 3) * (harm(m + 2).pow(2) - harm(m + 2, 2));
         });

  const std::vector<Parameter> mir0 = {param("m"), param("i"), param("r")};

  scalar(reg,
         {"IT8", kBernoulli,
          "sum_{k=0}^{m} [m+r+1, k+r+1]_{r+1} B_k(i+1) = m! C(m+i+r+1, i+r) (H_{m+i+r+1} - H_{i+r})", mir0},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += rs(m + r + 1, k + r + 1, r + 1) * bern_at(k, num(i + 1));
           return sum;
         },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           return fact(m) * binom(m + i + r + 1, i + r) * (harm(m + i + r + 1) - harm(i + r));
         });

  const Constraint ir2 = custom("i + r >= 2", [](A a) { return a["i"] + a["r"] >= 2; });
  auto it8_middle = [](Index m, Index i, Index r) {
    return fact(m) * binom(m + i + r - 1, i + r - 2) * (harm(m + i + r - 1) - harm(i + r - 2));
  };

  scalar(reg,
         {"IT8-SHIFTED", kBernoulli,
          "sum_{k=0}^{m} [m+r, k+r]_r B_k(i) = m! C(m+i+r-1, i+r-2) (H_{m+i+r-1} - H_{i+r-2})", mir0, ir2},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += rs(m + r, k + r, r) * bern_at(k, num(i));
           return sum;
         },
         [it8_middle](A a) { return it8_middle(a["m"], a["i"], a["r"]); });

  scalar(reg,
         {"IT8-FIN5", kBernoulli, "m! C(m+i+r-1, i+r-2) (H_{m+i+r-1} - H_{i+r-2}) = m! H_{m+1}^(i+r-1)", mir0, ir2},
         [it8_middle](A a) { return it8_middle(a["m"], a["i"], a["r"]); },
         [](A a) { return fact(a["m"]) * hyperharmonic(a["m"] + 1, a["i"] + a["r"] - 1); });

  auto w1508_lhs = [](Index m, Index i, Index r) {
    Rational sum;
    for (Index k = 0; k <= m; ++k) sum += rs(m + r + i + 1, k + r + i + 1, r + i + 1) * higher_bernoulli(k, i);
    return sum;
  };

  scalar(reg,
         {"W1508", kBernoulli,
          "sum_{k=0}^{m} [m+r+i+1, k+r+i+1]_{r+i+1} B_k^(i) = [m+i+r+1, i+r+1]_{r+1} / C(m+i, i)", mir},
         [w1508_lhs](A a) { return w1508_lhs(a["m"], a["i"], a["r"]); },
         [it5_rhs](A a) { return it5_rhs(a["m"], a["i"], a["r"]); });

  scalar(reg,
         {"W1508-P", kBernoulli,
          "sum_{k=0}^{m} P(k, m+r+i, r+i) B_k^(i) / k! = C(r+i, i) P(i, m+r+i, r) / C(m+i, i)", mir},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += p_num(k, m + r + i, r + i) * higher_bernoulli(k, i) / fact(k);
           return sum;
         },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           return binom(r + i, i) * p_num(i, m + r + i, r) / binom(m + i, i);
         });

  scalar(reg,
         {"W1508-SPECIAL", kBernoulli, "sum_{k=0}^{m} P_k(H(m,1;1), ..., H(m,k;1)) B_k / k! = H_{m+1} / (m+1)",
          {param("m")}},
         [](A a) {
           const Index m = a["m"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += p_number(k, m, 1) * bern(k) / fact(k);
           return sum;
         },
         [](A a) { return harm(a["m"] + 1) / num(a["m"] + 1); });

  scalar(reg,
         {"W1508-IT5", kBernoulli,
          "sum_{k=0}^{m} [m+r+i+1, k+r+i+1]_{r+i+1} B_k^(i) = sum_{k=0}^{m} (-1)^k [m+r+1, k+r+1]_{r+1} B_k^(i)", mir},
         [w1508_lhs](A a) { return w1508_lhs(a["m"], a["i"], a["r"]); },
         [it5_lhs](A a) { return it5_lhs(a["m"], a["i"], a["r"]); });
}

void add_rewrites(Registry& reg) {
  const std::vector<Parameter> mir = {param("m"), param("i"), param("r")};

  scalar(reg,
         {"SP-T10", kRewrites,
          "sum_{k=0}^{m} ((-1)^k / k!) C(r+1, m-k) [k+r+1, i+r+1]_{r+1} = ((-1)^m / m!) [m, i]", mir},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += sgn(k) / fact(k) * binom(r + 1, m - k) * rs(k + r + 1, i + r + 1, r + 1);
           return sum;
         },
         [](A a) { return sgn(a["m"]) / fact(a["m"]) * s1(a["m"], a["i"]); });

  scalar(reg,
         {"STIRLING1-RECUR", kRewrites, "[m+1, i+1] = [m, i] + m [m, i+1]", {param("m"), param("i")}},
         [](A a) { return s1(a["m"] + 1, a["i"] + 1); },
         [](A a) { return s1(a["m"], a["i"]) + num(a["m"]) * s1(a["m"], a["i"] + 1); });

  scalar(reg,
         {"SP-T13", kRewrites,
          "sum_{k=r}^{m+1-s} (r! s! / (k! (m+1-k)!)) [k, r] [m+1-k, s] = ((r+s)! / (m+1)!) [m+1, r+s]",
          {param("m"), param("r"), param("s")}},
         [](A a) {
           const Index m = a["m"], r = a["r"], s = a["s"];
           Rational sum;
           for (Index k = r; k <= m + 1 - s; ++k) {
             sum += fact(r) * fact(s) / (fact(k) * fact(m + 1 - k)) * s1(k, r) * s1(m + 1 - k, s);
           }
           return sum;
         },
         [](A a) {
           const Index m = a["m"], r = a["r"], s = a["s"];
           return fact(r + s) / fact(m + 1) * s1(m + 1, r + s);
         });

  scalar(reg,
         {"SP-T13-S1", kRewrites, "sum_{k=r}^{m} [k, r] / (k! (m+1-k)) = ((r+1) / (m+1)!) [m+1, r+1]",
          {param("m"), param("r")}},
         [](A a) {
           const Index m = a["m"], r = a["r"];
           Rational sum;
           for (Index k = r; k <= m; ++k) sum += s1(k, r) / (fact(k) * num(m + 1 - k));
           return sum;
         },
         [](A a) { return num(a["r"] + 1) / fact(a["m"] + 1) * s1(a["m"] + 1, a["r"] + 1); });

  scalar(reg,
         {"SP-15", kRewrites,
          "q^r sum_{k=1}^{m} [k, r] / (k+q)! = 1/q! - (1/(m+q)!) sum_{j=1}^{r} q^(j-1) [m+1, j]",
          {param("m", 1), param("q", 1), param("r", 1)}, le("r", "m")},
         [](A a) {
           const Index m = a["m"], q = a["q"], r = a["r"];
           Rational sum;
           for (Index k = 1; k <= m; ++k) sum += s1(k, r) / fact(k + q);
           return num(q).pow(r) * sum;
         },
         [](A a) {
           const Index m = a["m"], q = a["q"], r = a["r"];
           Rational sum;
           for (Index j = 1; j <= r; ++j) sum += num(q).pow(j - 1) * s1(m + 1, j);
           return Rational(1) / fact(q) - sum / fact(m + q);
         });

  // k (k+1) ... (k+q) and (m+1) ... (m+q)
  auto rising_int = [](Index start, Index len) { return rising_factorial_value(num(start), len); };
  const std::vector<Parameter> mq = {param("m", 1), param("q", 1)};

  scalar(reg,
         {"SP-15-EX1", kRewrites,
          "sum_{k=1}^{m} 1/(k(k+1)...(k+q)) = 1/(q q!) - 1/(q (m+1)...(m+q))", mq},
         [rising_int](A a) {
           Rational sum;
           for (Index k = 1; k <= a["m"]; ++k) sum += Rational(1) / rising_int(k, a["q"] + 1);
           return sum;
         },
         [rising_int](A a) {
           const Index m = a["m"], q = a["q"];
           return Rational(1) / (num(q) * fact(q)) - Rational(1) / (num(q) * rising_int(m + 1, q));
         });

  scalar(reg,
         {"SP-15-EX2", kRewrites,
          "sum_{k=1}^{m} H_{k-1}/(k(k+1)...(k+q)) = 1/(q^2 q!) - (1 + q H_m)/(q^2 (m+1)...(m+q))", mq},
         [rising_int](A a) {
           Rational sum;
           for (Index k = 1; k <= a["m"]; ++k) sum += harm(k - 1) / rising_int(k, a["q"] + 1);
           return sum;
         },
         [rising_int](A a) {
           const Index m = a["m"], q = a["q"];
           const Rational qq = num(q).pow(2);
           return Rational(1) / (qq * fact(q)) - (Rational(1) + num(q) * harm(m)) / (qq * rising_int(m + 1, q));
         });

  scalar(reg,
         {"SP-15-EX3", kRewrites,
          "sum_{k=1}^{m} (H_{k-1}^2 - H_{k-1}^[2])/(k(k+1)...(k+q)) = 2/(q^3 q!) - (2 + 2q H_m + q^2 (H_m^2 - "
          "H_m^[2]))/(q^3 (m+1)...(m+q))",
          mq},
         [rising_int](A a) {
           Rational sum;
           for (Index k = 1; k <= a["m"]; ++k) {
             sum += (harm(k - 1).pow(2) - harm(k - 1, 2)) / rising_int(k, a["q"] + 1);
           }
           return sum;
         },
         [rising_int](A a) {
           const Index m = a["m"], q = a["q"];
           const Rational qv = num(q);
           const Rational h = harm(m);
           const Rational numerator = num(2) + num(2) * qv * h + qv.pow(2) * (h.pow(2) - harm(m, 2));
           return num(2) / (qv.pow(3) * fact(q)) - numerator / (qv.pow(3) * rising_int(m + 1, q));
         });

  poly(reg, {"HORIZ-GF", kRewrites, "sum_{j=0}^{m} [m+1, j+1] q^j = (q+1)(q+2)...(q+m)", {param("m")}},
       [](A a) {
         Polynomial out;
         for (Index j = 0; j <= a["m"]; ++j) out += x_pow(j) * s1(a["m"] + 1, j + 1);
         return out;
       },
       [](A a) {
         // x^(rising m+1) / x
         auto c = rising_factorial_poly(a["m"] + 1).coefficients();
         c.erase(c.begin());
         return Polynomial(std::move(c));
       });

  scalar(reg,
         {"WANG-34", kRewrites,
          "sum_{k=0}^{m} ((-1)^k / k!) C(m, k) C(k+r, r)^-1 [k+r+1, i+r+1]_{r+1} = ((-1)^i / m!) C(m+r, r)^-1 [m, i]",
          mir},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) {
             sum += sgn(k) / fact(k) * binom(m, k) / binom(k + r, r) * rs(k + r + 1, i + r + 1, r + 1);
           }
           return sum;
         },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           return sgn(i) / fact(m) / binom(m + r, r) * s1(m, i);
         });

  scalar(reg,
         {"WANG-34-H", kRewrites, "sum_{k=0}^{m} (-1)^k C(m, k) H_{k+1} = -1/(m(m+1))", {param("m", 1)}},
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["m"]; ++k) sum += sgn(k) * binom(a["m"], k) * harm(k + 1);
           return sum;
         },
         [](A a) { return -frac(1, a["m"] * (a["m"] + 1)); });

  scalar(reg, {"WANG-34-HK", kRewrites, "sum_{k=0}^{m} (-1)^k C(m, k) H_k = -1/m", {param("m", 1)}},
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["m"]; ++k) sum += sgn(k) * binom(a["m"], k) * harm(k);
           return sum;
         },
         [](A a) { return -frac(1, a["m"]); });

  scalar(reg,
         {"WANG-322", kRewrites, "[m+r+1, i+r+1]_{r+1} = m! sum_{k=0}^{m} (1/k!) C(m-k+r, r) [k, i]", mir},
         [](A a) { return rs(a["m"] + a["r"] + 1, a["i"] + a["r"] + 1, a["r"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += binom(m - k + r, r) * s1(k, i) / fact(k);
           return fact(m) * sum;
         });

  scalar(reg,
         {"WANG-322-ALT", kRewrites,
          "[m+r+1, i+r+1]_{r+1} = m! sum_{k=0}^{m} (-1)^(k-i) (1/k!) C(m+r, k+r) [k, i]", mir},
         [](A a) { return rs(a["m"] + a["r"] + 1, a["i"] + a["r"] + 1, a["r"] + 1); },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += sgn(k - i) * binom(m + r, k + r) * s1(k, i) / fact(k);
           return fact(m) * sum;
         });

  const std::vector<Parameter> mirs = {param("m"), param("i"), param("r"), param("s")};

  auto wa1_lhs = [](Index m, Index i, Index r, Index s) {
    Rational sum;
    for (Index k = 0; k <= m; ++k) sum += binom(r + m - k - 1, m - k) * rs(k + s + 1, i + s + 1, s + 1) / fact(k);
    return sum;
  };
  auto wa2_sum = [](Index m, Index i, Index r) {
    Rational sum;
    for (Index k = 0; k <= m; ++k) sum += binom(r + m - k - 1, m - k) * s1(k + 1, i + 1) / fact(k);
    return sum;
  };

  scalar(reg,
         {"WANG-WA1", kRewrites,
          "sum_{k=0}^{m} (1/k!) C(r+m-k-1, m-k) [k+s+1, i+s+1]_{s+1} = (1/m!) [m+r+s+1, i+r+s+1]_{r+s+1}", mirs},
         [wa1_lhs](A a) { return wa1_lhs(a["m"], a["i"], a["r"], a["s"]); },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"], s = a["s"];
           return rs(m + r + s + 1, i + r + s + 1, r + s + 1) / fact(m);
         });

  scalar(reg,
         {"WANG-WA2", kRewrites, "[m+r+1, i+r+1]_{r+1} = m! sum_{k=0}^{m} (1/k!) C(r+m-k-1, m-k) [k+1, i+1]", mir},
         [](A a) { return rs(a["m"] + a["r"] + 1, a["i"] + a["r"] + 1, a["r"] + 1); },
         [wa2_sum](A a) { return fact(a["m"]) * wa2_sum(a["m"], a["i"], a["r"]); });

  scalar(reg,
         {"WANG-WA12", kRewrites,
          "sum_{k=0}^{m} (1/k!) C(r+m-k-1, m-k) [k+s+1, i+s+1]_{s+1} = sum_{k=0}^{m} (1/k!) C(r+s+m-k-1, m-k) [k+1, "
          "i+1]",
          mirs},
         [wa1_lhs](A a) { return wa1_lhs(a["m"], a["i"], a["r"], a["s"]); },
         [wa2_sum](A a) { return wa2_sum(a["m"], a["i"], a["r"] + a["s"]); });

  scalar(reg,
         {"WANG-WA2-P", kRewrites, "P_i(H(m,1;1), ..., H(m,i;1)) = (i!/(m+1)) sum_{k=0}^{m} (1/k!) [k+1, i+1]",
          {param("m"), param("i")}},
         [](A a) { return p_number(a["i"], a["m"], 1); },
         [wa2_sum](A a) { return fact(a["i"]) / num(a["m"] + 1) * wa2_sum(a["m"], a["i"], 1); });

  scalar(reg, {"WANG-HSUM", kRewrites, "sum_{k=0}^{m} H_k = (m+1) H_m - m", {param("m")}},
         [](A a) {
           Rational sum;
           for (Index k = 0; k <= a["m"]; ++k) sum += harm(k);
           return sum;
         },
         [](A a) { return num(a["m"] + 1) * harm(a["m"]) - num(a["m"]); });

  scalar(reg,
         {"IT1", kRewrites, "sum_{k=0}^{m} (-1)^(m-k) {m, k} [k+r+1, i+r+1]_{r+1} = C(m, i) (r+1)^(m-i)", mir,
          le("i", "m")},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += sgn(m - k) * s2(m, k) * rs(k + r + 1, i + r + 1, r + 1);
           return sum;
         },
         [](A a) { return binom(a["m"], a["i"]) * num(a["r"] + 1).pow(a["m"] - a["i"]); });

  scalar(reg,
         {"IT2", kRewrites, "sum_{k=i}^{m} (-r-1)^(k-i) C(k, i) [m+r+1, k+r+1]_{r+1} = [m, i]", mir, le("i", "m")},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = i; k <= m; ++k) sum += num(-r - 1).pow(k - i) * binom(k, i) * rs(m + r + 1, k + r + 1, r + 1);
           return sum;
         },
         [](A a) { return s1(a["m"], a["i"]); });

  auto stirling2_weighted = [](Index m, const std::function<Rational(Index)>& weight) {
    Rational sum;
    for (Index k = 0; k <= m; ++k) sum += sgn(m - k) * fact(k + 1) * s2(m, k) * weight(k);
    return sum;
  };

  scalar(reg,
         {"IT1-R1I1", kRewrites, "sum_{k=0}^{m} (-1)^(m-k) (k+1)! {m, k} (H_{k+1} - 1) = m 2^(m-1)",
          {param("m", 1)}},
         [stirling2_weighted](A a) {
           return stirling2_weighted(a["m"], [](Index k) { return harm(k + 1) - Rational(1); });
         },
         [](A a) { return num(a["m"]) * num(2).pow(a["m"] - 1); });

  scalar(reg, {"WANG-45", kRewrites, "sum_{k=0}^{m} (-1)^(m-k) (k+1)! {m, k} = 2^m", {param("m")}},
         [stirling2_weighted](A a) { return stirling2_weighted(a["m"], [](Index) { return Rational(1); }); },
         [](A a) { return num(2).pow(a["m"]); });

  scalar(reg,
         {"IT1-H", kRewrites, "sum_{k=0}^{m} (-1)^(m-k) (k+1)! {m, k} H_{k+1} = (m+2) 2^(m-1)", {param("m")}},
         [stirling2_weighted](A a) { return stirling2_weighted(a["m"], [](Index k) { return harm(k + 1); }); },
         [](A a) { return num(a["m"] + 2) * num(2).pow(a["m"] - 1); });

  scalar(reg,
         {"WANG-440", kRewrites,
          "sum_{k=0}^{m} (-1)^(k-i) i! {k, i} [m+r+1, k+r+1]_{r+1} = m! C(r+m-i, m-i)", mir, le("i", "m")},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index k = 0; k <= m; ++k) sum += sgn(k - i) * fact(i) * s2(k, i) * rs(m + r + 1, k + r + 1, r + 1);
           return sum;
         },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           return fact(m) * binom(r + m - i, m - i);
         });

  scalar(reg,
         {"RSTIRLING-RECUR", kRewrites, "[j+r+1, i+r+1]_{r+1} = [j+r, i+r]_r + j [j+r, i+r+1]_{r+1}",
          {param("j"), param("i"), param("r")}},
         [](A a) { return rs(a["j"] + a["r"] + 1, a["i"] + a["r"] + 1, a["r"] + 1); },
         [](A a) {
           const Index j = a["j"], i = a["i"], r = a["r"];
           return rs(j + r, i + r, r) + num(j) * rs(j + r, i + r + 1, r + 1);
         });

  scalar(reg,
         {"WANG-1505", kRewrites,
          "C(j+r, r) P(i, j+r, r) = C(j+r-1, r-1) P(i, j+r-1, r-1) + C(j+r-1, r) P(i, j+r-1, r)",
          {param("i"), param("j", 1), param("r", 1)}},
         [](A a) {
           const Index i = a["i"], j = a["j"], r = a["r"];
           return binom(j + r, r) * p_num(i, j + r, r);
         },
         [](A a) {
           const Index i = a["i"], j = a["j"], r = a["r"];
           return binom(j + r - 1, r - 1) * p_num(i, j + r - 1, r - 1) + binom(j + r - 1, r) * p_num(i, j + r - 1, r);
         });

  scalar(reg,
         {"WUYUN-FINAL", kRewrites,
          "sum_{j=i}^{m} (1/(m+1-j)) (1/(j-1)!) [j+r, i+r]_{r+1} = (i/m!) [m+r+1, i+r+1]_{r+1}",
          {param("m", 1), param("i", 1), param("r")}, le("i", "m")},
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           Rational sum;
           for (Index j = i; j <= m; ++j) sum += rs(j + r, i + r, r + 1) / (num(m + 1 - j) * fact(j - 1));
           return sum;
         },
         [](A a) {
           const Index m = a["m"], i = a["i"], r = a["r"];
           return num(i) / fact(m) * rs(m + r + 1, i + r + 1, r + 1);
         });
}

}  // namespace

Registry register_all() {
  Registry reg;
  add_hyper_sums(reg);
  add_r_polynomials(reg);
  add_hyperharmonic(reg);
  add_bell(reg);
  add_generating_functions(reg);
  add_bernoulli(reg);
  add_rewrites(reg);
  return reg;
}

IdentityRecord make_corrupted_fixture() {
  return make({"CORRUPTED-REM2-N1", "engine self-test", "sum_{i=0}^{m} (-1)^i [m+2, i+2]_2 = m! + 1 (false)",
               {param("m")}},
              Comparison::Scalar,
              [](A a) {
                Rational sum;
                for (Index i = 0; i <= a["m"]; ++i) sum += sgn(i) * rs(a["m"] + 2, i + 2, 2);
                return Value(sum);
              },
              [](A a) { return Value(fact(a["m"]) + Rational(1)); });
}

}  // namespace hyperstir
