#include <doctest.h>

#include "hyperstir/series.hpp"
#include "oracles.hpp"

using namespace hyperstir;

namespace {

TruncatedSeries one_plus_t(std::size_t order) { return TruncatedSeries({Rational(1), Rational(1)}, order); }

}  // namespace

TEST_CASE("construction pads and truncates") {
  const TruncatedSeries s({Rational(1), Rational(2), Rational(3)}, 2);
  CHECK(s.order() == 2);
  CHECK(s.coefficient(1) == Rational(2));
  CHECK(s.coefficient(2) == Rational(0));
  CHECK(TruncatedSeries({Rational(1)}, 4).coefficients().size() == 4);
  CHECK(TruncatedSeries::variable(3).coefficient(1) == Rational(1));
  CHECK(TruncatedSeries::constant(Rational(5), 3).coefficient(0) == Rational(5));
  CHECK(TruncatedSeries(3).to_string() == "order=3: [0, 0, 0]");
}

TEST_CASE("mixed orders truncate to the smaller") {
  const TruncatedSeries a = one_plus_t(5);
  const TruncatedSeries b = one_plus_t(3);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
  CHECK((a * b).coefficient(2) == Rational(1));
}

TEST_CASE("exp of t has coefficients 1/k!") {
  const TruncatedSeries e = exp(TruncatedSeries::variable(12));
  for (std::size_t k = 0; k < 12; ++k) {
    CHECK(e.coefficient(k).to_string() == oracle::str(mpq_class(1) / mpq_class(oracle::factorial(static_cast<int>(k)))));
  }
}

TEST_CASE("log of 1 + t is the alternating harmonic series") {
  const TruncatedSeries l = log(one_plus_t(10));
  CHECK(l.coefficient(0) == Rational(0));
  for (long k = 1; k < 10; ++k) CHECK(l.coefficient(static_cast<std::size_t>(k)) == Rational(Integer(k % 2 ? 1 : -1), Integer(k)));
}

TEST_CASE("exp and log are inverse") {
  const std::size_t order = 9;
  const TruncatedSeries s({Rational(0), Rational(2), Rational::parse("-1/3"), Rational(5)}, order);
  CHECK(log(exp(s)) == s);
  const TruncatedSeries u({Rational(1), Rational(-3), Rational::parse("7/2")}, order);
  CHECK(exp(log(u)) == u);
}

TEST_CASE("invert and power") {
  const std::size_t order = 8;
  const TruncatedSeries u({Rational(2), Rational(-1), Rational::parse("1/4")}, order);
  CHECK(u * invert(u) == TruncatedSeries::constant(Rational(1), order));
  CHECK(power(u, 3) == u * u * u);
  CHECK(power(u, -2) * power(u, 2) == TruncatedSeries::constant(Rational(1), order));
  CHECK(power(u, 0) == TruncatedSeries::constant(Rational(1), order));
  // (1 - t)^-1 = 1 + t + t^2 + ...
  const TruncatedSeries geometric = power(TruncatedSeries({Rational(1), Rational(-1)}, order), -1);
  for (std::size_t k = 0; k < order; ++k) CHECK(geometric.coefficient(k) == Rational(1));
}

TEST_CASE("precondition failures carry a kind") {
  const TruncatedSeries bad({Rational(3), Rational(1)}, 4);
  try {
    (void)exp(bad);
    FAIL("exp accepted a nonzero constant term");
  } catch (const SeriesError& e) {
    CHECK(e.kind() == SeriesError::Kind::ExpNeedsZeroConstant);
  }
  try {
    (void)log(bad);
    FAIL("log accepted a constant term other than 1");
  } catch (const SeriesError& e) {
    CHECK(e.kind() == SeriesError::Kind::LogNeedsUnitConstant);
  }
  try {
    (void)invert(TruncatedSeries::variable(4));
    FAIL("invert accepted a zero constant term");
  } catch (const SeriesError& e) {
    CHECK(e.kind() == SeriesError::Kind::InvertNeedsNonzeroConstant);
  }
  CHECK_THROWS_AS(power(TruncatedSeries::variable(4), -1), SeriesError);
}
