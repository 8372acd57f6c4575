#include <doctest.h>

#include <stdexcept>
#include <thread>

#include "hyperstir/special_poly.hpp"
#include "hyperstir/stirling.hpp"
#include "oracles.hpp"

using namespace hyperstir;

TEST_CASE("Bernoulli numbers against the classical recurrence") {
  const auto b = oracle::bernoulli_numbers(31);
  for (int k = 0; k <= 30; ++k) CHECK(bernoulli_number(k).to_string() == oracle::str(b[static_cast<std::size_t>(k)]));
  CHECK(bernoulli_number(1).to_string() == "-1/2");
  CHECK(bernoulli_number(20).to_string() == "-174611/330");
  CHECK(bernoulli_number(30).to_string() == "8615841276005/14322");
  CHECK_THROWS_AS(bernoulli_number(-1), std::invalid_argument);
}

TEST_CASE("Bernoulli polynomials") {
  for (Index k = 0; k <= 12; ++k) {
    const Polynomial p = bernoulli_poly(k);
    CHECK(p.degree() == k);
    CHECK(p.evaluate(Rational(0)) == bernoulli_number(k));
    // B_k(x + 1) - B_k(x) = k x^(k-1)
    const Polynomial diff = p.shift(Rational(1)) - p;
    CHECK(diff == (k == 0 ? Polynomial() : Polynomial::monomial(Rational(k), k - 1)));
  }
  CHECK(bernoulli_poly(2).to_string() == "1/6 + -1*x + 1*x^2");
}

TEST_CASE("higher-order Bernoulli numbers: three routes against Cauchy products") {
  for (int i = 1; i <= 5; ++i) {
    const auto row = oracle::higher_bernoulli_row(i, 10);
    for (int k = 0; k <= 10; ++k) {
      const std::string expected = oracle::str(row[static_cast<std::size_t>(k)]);
      CHECK(higher_bernoulli(k, i).to_string() == expected);
      CHECK(higher_bernoulli_kim(k, i).to_string() == expected);
      CHECK(higher_bernoulli_srivastava(k, i).to_string() == expected);
    }
  }
  CHECK(higher_bernoulli(4, 3).to_string() == "19/10");
  CHECK(higher_bernoulli(10, 3).to_string() == "-3/11");
  CHECK(higher_bernoulli(7, 5).to_string() == "-475/12");
  CHECK_THROWS_AS(higher_bernoulli(3, 0), std::invalid_argument);
}

TEST_CASE("power sums") {
  for (int k = 0; k <= 8; ++k) {
    const Polynomial p = power_sum_poly(k);
    for (int n = 0; n <= 12; ++n) {
      const std::string expected = oracle::str(oracle::power_sum(k, n));
      CHECK(p.evaluate(Rational(n)).to_string() == expected);
      CHECK(power_sum_direct(k, n).to_string() == expected);
    }
  }
  CHECK(power_sum_direct(5, 10) == Integer(220825));
}

TEST_CASE("hyper-sums: three routes against iterated sums") {
  for (int k = 0; k <= 5; ++k) {
    for (int m = 0; m <= 4; ++m) {
      for (int n = 0; n <= 7; ++n) {
        // m-fold partial sums of t^k, t = 1..n
        std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1, 0);
        for (int t = 1; t <= n; ++t) row[static_cast<std::size_t>(t)] = oracle::power_sum(k, t) - oracle::power_sum(k, t - 1);
        for (int level = 0; level <= m; ++level) {
          for (int t = 1; t <= n; ++t) row[static_cast<std::size_t>(t)] += row[static_cast<std::size_t>(t - 1)];
        }
        const std::string expected = oracle::str(row[static_cast<std::size_t>(n)]);
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(n);
        CHECK(hyper_sum(k, m, n).to_string() == expected);
        CHECK(hyper_sum_via_q(k, m, n).to_string() == expected);
        CHECK(hyper_sum_by_recursion(k, m, n).to_string() == expected);
      }
    }
  }
  CHECK(hyper_sum(0, 2, 3) == Integer(10));
  CHECK(hyper_sum(1, 1, 5) == Integer(35));
  CHECK_THROWS_AS(hyper_sum(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(hyper_sum_via_q(0, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(hyper_sum_by_recursion(0, 0, -1), std::invalid_argument);
}

TEST_CASE("R and Rbar polynomials evaluate to r-Stirling numbers") {
  for (int m = 0; m <= 7; ++m) {
    for (int i = 0; i <= m; ++i) {
      for (int r = 0; r <= 2; ++r) {
        CHECK(r_poly(m, i).evaluate(Rational(r)).to_string() == oracle::str(oracle::r_stirling1_count(m + r, i + r, r)));
        if (m + r + 1 <= 8) {
          CHECK(r_bar_poly(m, i).evaluate(Rational(r)).to_string() ==
                oracle::str(oracle::r_stirling1_count(m + r + 1, i + r + 1, r + 1)));
        }
      }
      CHECK(r_poly_defining_form(m, i) == r_poly(m, i));
      CHECK(r_poly_via_derivative(m, i) == r_poly(m, i));
      CHECK(r_bar_poly_via_shift(m, i) == r_bar_poly(m, i));
      CHECK(q_poly(m, i) == r_bar_poly(m, i));
      CHECK(r_poly(m, i).degree() == m - i);
    }
  }
  CHECK_THROWS_AS(r_poly(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(r_bar_poly(-1, 0), std::invalid_argument);
}

TEST_CASE("hyperharmonic polynomials interpolate hyperharmonic numbers") {
  for (int j = 0; j <= 8; ++j) {
    const Polynomial p = hyperharmonic_poly(j);
    for (int r = 0; r <= 6; ++r) {
      CHECK(p.evaluate(Rational(r)).to_string() == oracle::str(oracle::hyperharmonic(j + 1, r)));
      CHECK(hyperharmonic_poly_shifted(j).evaluate(Rational(r)).to_string() ==
            oracle::str(oracle::hyperharmonic(j + 1, r + 1)));
    }
    CHECK(hyperharmonic_poly_via_derivative(j) == p);
    CHECK(hyperharmonic_poly_shifted_via_binomials(j) == hyperharmonic_poly_shifted(j));
    for (int i = 0; i <= j; ++i) {
      CHECK(hyperharmonic_derivative(j, i, false) == p.derivative(i));
      CHECK(hyperharmonic_derivative(j, i, true) == hyperharmonic_poly_shifted(j).derivative(i));
    }
  }
  CHECK_THROWS_AS(hyperharmonic_derivative(2, 3, false), std::invalid_argument);
}

TEST_CASE("Bernoulli polynomials through hyperharmonic polynomials") {
  for (Index k = 0; k <= 12; ++k) CHECK(bernoulli_poly_via_hyperharmonic(k) == bernoulli_poly(k));
}

TEST_CASE("family cache") {
  clear_family_cache();
  CHECK(family_cache_size() == 0);
  CHECK(family_polynomial({PolyFamily::R, 5, 2}) == r_poly_defining_form(5, 2));
  CHECK(family_polynomial({PolyFamily::Bernoulli, 6, 0}) == bernoulli_poly(6));
  CHECK(family_polynomial({PolyFamily::PowerSum, 3, 0}) == power_sum_poly(3));
  CHECK(family_polynomial({PolyFamily::HyperharmonicShifted, 4, 0}) == hyperharmonic_poly_shifted_via_binomials(4));
  CHECK(family_cache_size() >= 4);
  CHECK_THROWS_AS(family_polynomial({PolyFamily::Q, 1, 4}), std::invalid_argument);

  clear_family_cache();
  std::vector<Polynomial> seen(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < seen.size(); ++w) {
      workers.emplace_back([&seen, w] { seen[w] = family_polynomial({PolyFamily::RBar, 12, 3}); });
    }
  }
  for (const auto& p : seen) CHECK(p == r_bar_poly_via_shift(12, 3));
}

TEST_CASE("family names") {
  CHECK(parse_poly_family("rbar") == PolyFamily::RBar);
  CHECK(parse_poly_family("R-Bar") == PolyFamily::RBar);
  CHECK(parse_poly_family("hyperharmonic_shifted") == PolyFamily::HyperharmonicShifted);
  CHECK(parse_poly_family("power-sum") == PolyFamily::PowerSum);
  CHECK(poly_family_name(PolyFamily::Q) == "Q");
  CHECK(poly_family_arity(PolyFamily::R) == 2);
  CHECK(poly_family_arity(PolyFamily::Bernoulli) == 1);
  CHECK_THROWS_AS(parse_poly_family("legendre"), std::invalid_argument);
}
