#include <doctest.h>

#include <json.hpp>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hyperstir/stirling.hpp"
#include "oracles.hpp"

using namespace hyperstir;

TEST_CASE("r-Stirling numbers count restricted permutations") {
  for (int r = 0; r <= 4; ++r) {
    for (int n = 0; n <= 8; ++n) {
      for (int k = 0; k <= n + 1; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(r);
        CHECK(r_stirling1(n, k, r).to_string() == oracle::str(oracle::r_stirling1_count(n, k, r)));
      }
    }
  }
}

TEST_CASE("Stirling numbers of both kinds against enumeration") {
  for (int n = 0; n <= 9; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(stirling2(n, k).to_string() == oracle::str(oracle::stirling2_count(n, k)));
      if (n <= 8) CHECK(stirling1(n, k).to_string() == oracle::str(oracle::stirling1_count(n, k)));
    }
  }
}

TEST_CASE("frozen Stirling values") {
  CHECK(r_stirling1(4, 3, 2) == Integer(5));
  CHECK(stirling1(9, 3) == Integer(118124));
  CHECK(stirling2(9, 3) == Integer(3025));
  CHECK(r_stirling1(8, 4, 3) == Integer(2754));
  CHECK(r_stirling1(9, 5, 2) == Integer(18424));
  CHECK(stirling1(0, 0) == Integer(1));
  CHECK(stirling2(0, 0) == Integer(1));
}

TEST_CASE("outside the domain r-Stirling numbers vanish") {
  CHECK(r_stirling1(3, 4, 2) == Integer(0));
  CHECK(r_stirling1(1, 1, 2) == Integer(0));
  CHECK(r_stirling1(5, 1, 2) == Integer(0));
  CHECK(r_stirling1(2, 2, 2) == Integer(1));
  CHECK(stirling1(5, 0) == Integer(0));
  CHECK(stirling2(5, 6) == Integer(0));
}

TEST_CASE("Broder route equals the table") {
  for (Index m = 0; m <= 9; ++m) {
    for (Index i = 0; i <= m; ++i) {
      for (Index n = 0; n <= 6; ++n) CHECK(r_stirling1_via_broder(m, i, n) == r_stirling1(m + n + 1, i + n + 1, n + 1));
    }
  }
  CHECK_THROWS_AS(r_stirling1_via_broder(2, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(r_stirling1_via_broder(2, 1, -1), std::invalid_argument);
}

TEST_CASE("table rows and cache") {
  RStirlingTable table;
  CHECK(table.cached_rows() == 0);
  const auto row = table.row(5, 2);
  REQUIRE(row.size() == 4);
  CHECK(row[0] == Integer(24));
  CHECK(row[1] == Integer(26));
  CHECK(row[2] == Integer(9));
  CHECK(row[3] == Integer(1));
  CHECK(table.cached_rows() >= 4);
  CHECK(table.row(1, 2).empty());
  table.clear();
  CHECK(table.cached_rows() == 0);
}

TEST_CASE("concurrent readers see the sequential values") {
  RStirlingTable table;
  std::vector<std::vector<Integer>> seen(4);
  {
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < seen.size(); ++w) {
      workers.emplace_back([&table, &seen, w] {
        for (Index n = 40; n >= 0; --n) seen[w].push_back(table.value(n, n / 2, static_cast<Index>(w % 3)));
      });
    }
  }
  for (std::size_t w = 0; w < seen.size(); ++w) {
    Index n = 40;
    for (const auto& v : seen[w]) {
      CHECK(v == r_stirling1(n, n / 2, static_cast<Index>(w % 3)));
      --n;
    }
  }
}

TEST_CASE("harmonic sums") {
  CHECK(harmonic({3, 1, 0}).to_string() == "11/6");
  CHECK(harmonic_number(20).to_string() == "55835135/15519504");
  CHECK(harmonic({5, 2, 3}).to_string() == "117349/705600");
  CHECK(harmonic_number(0) == Rational(0));
  CHECK(harmonic_number(-3) == Rational(0));
  for (int j = 0; j <= 10; ++j) {
    for (int k = 1; k <= 4; ++k) {
      for (int r = 0; r <= 3; ++r) CHECK(harmonic({j, k, r}).to_string() == oracle::str(oracle::harmonic(j, k, r)));
    }
  }
  CHECK_THROWS_AS(harmonic({3, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(harmonic({-1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(harmonic({3, 1, -1}), std::invalid_argument);
}

TEST_CASE("shifted harmonic with rational shift") {
  CHECK(shifted_harmonic(3, 1, Rational::parse("1/2")).to_string() ==
        oracle::str(oracle::harmonic(3, 1, mpq_class(1, 2))));
  CHECK_THROWS_AS(shifted_harmonic(3, 1, Rational(-2)), std::domain_error);
  CHECK_NOTHROW(shifted_harmonic(3, 1, Rational(-4)));
}

TEST_CASE("hyperharmonic numbers against iterated sums") {
  CHECK(hyperharmonic(5, 3).to_string() == "459/20");
  CHECK(hyperharmonic(10, 4).to_string() == "485333/1260");
  for (int n = 0; n <= 12; ++n) {
    for (int r = 0; r <= 6; ++r) {
      CHECK(hyperharmonic(n, r).to_string() == oracle::str(oracle::hyperharmonic(n, r)));
      CHECK(hyperharmonic_by_recursion(n, r) == hyperharmonic(n, r));
    }
  }
  CHECK(hyperharmonic(4, -1) == Rational(0));
  CHECK(hyperharmonic(0, 3) == Rational(0));
  CHECK(hyperharmonic(-2, 3) == Rational(0));
}

TEST_CASE("triangle export") {
  const Triangle t = make_triangle(TriangleFamily::RStirling1, 4, 2);
  CHECK(triangle_to_delimited(t, '\t') == "# family=r-stirling1 r=2 nmax=4\n1\n2\t1\n6\t5\t1\n");
  CHECK(triangle_to_delimited(make_triangle(TriangleFamily::Stirling1, 0), ',') ==
        "# family=stirling1 r=0 nmax=0\n1\n");
  CHECK(triangle_to_delimited(make_triangle(TriangleFamily::RStirling1, 3, 5), ',') ==
        "# family=r-stirling1 r=5 nmax=3\n");
  CHECK(triangle_to_delimited(make_triangle(TriangleFamily::Stirling2, 3), ',') ==
        "# family=stirling2 r=0 nmax=3\n1\n0,1\n0,1,1\n0,1,3,1\n");

  const auto j = nlohmann::json::parse(triangle_to_json(t));
  CHECK(j["family"] == "r-stirling1");
  CHECK(j["r"] == 2);
  CHECK(j["rows"][2][1] == "5");

  CHECK(parse_triangle_family("stirling2") == TriangleFamily::Stirling2);
  CHECK(family_name(parse_triangle_family("r-stirling1")) == "r-stirling1");
  CHECK_THROWS_AS(parse_triangle_family("stirling3"), std::invalid_argument);
}
