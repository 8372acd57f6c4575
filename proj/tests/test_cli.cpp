#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "hyperstir/bell.hpp"
#include "hyperstir/registry.hpp"
#include "hyperstir/special_poly.hpp"
#include "hyperstir/stirling.hpp"

using namespace hyperstir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval examples") {
  CHECK(run({"eval", "r-stirling", "n=4", "k=3", "r=2"}).out == "5\n");
  CHECK(run({"eval", "hyper-sum", "k=0", "m=2", "n=3"}).out == "10\n");
  CHECK(run({"eval", "harmonic", "j=3", "k=1", "r=0"}).out == "11/6\n");
  CHECK(run({"eval", "harmonic", "j=3"}).out == "11/6\n");
  CHECK(run({"eval", "bernoulli", "k=1"}).out == "-1/2\n");
  CHECK(run({"eval", "complete-bell", "n=3", "x=1,2,3"}).out == "10\n");
  CHECK(run({"eval", "kolbig-s", "j=3", "q=1", "alpha=1/2"}).code == cli::kExitPass);
  CHECK(run({"eval", "factorial", "n=5", "--format", "csv"}).out == "quantity,value\nfactorial,120\n");
}

TEST_CASE("eval JSON round-trips to library values") {
  struct Case {
    std::vector<std::string> args;
    Rational expected;
  };
  const std::vector<Case> cases = {
      {{"eval", "r-stirling", "n=9", "k=5", "r=2"}, Rational(r_stirling1(9, 5, 2))},
      {{"eval", "stirling1", "n=12", "k=4"}, Rational(stirling1(12, 4))},
      {{"eval", "stirling2", "n=12", "k=4"}, Rational(stirling2(12, 4))},
      {{"eval", "hyperharmonic", "n=10", "r=4"}, hyperharmonic(10, 4)},
      {{"eval", "higher-bernoulli", "k=7", "i=5"}, higher_bernoulli(7, 5)},
      {{"eval", "p-number", "i=2", "j=3", "r=1"}, p_number(2, 3, 1)},
      {{"eval", "binomial", "n=-3", "k=2"}, Rational(binomial(-3, 2))},
      {{"eval", "bernoulli", "k=30"}, bernoulli_number(30)},
  };
  for (const auto& c : cases) {
    auto args = c.args;
    args.insert(args.begin(), {"--format", "json"});
    const Result r = run(args);
    REQUIRE(r.code == cli::kExitPass);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["quantity"] == c.args[1]);
    CHECK(Rational::parse(j["value"].get<std::string>()) == c.expected);
  }
}

TEST_CASE("eval errors are usage errors") {
  Result r = run({"eval", "nope", "n=1"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("unknown quantity 'nope'") != std::string::npos);
  r = run({"eval", "r-stirling", "n=4", "k=3"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("missing required argument 'r'") != std::string::npos);
  CHECK(run({"eval", "r-stirling", "n=4", "k=x", "r=1"}).code == cli::kExitUsage);
  CHECK(run({"eval", "r-stirling", "n=4", "k=3", "r=1", "z=2"}).code == cli::kExitUsage);
  CHECK(run({"eval", "r-stirling", "n=4", "n=4", "k=3", "r=1"}).code == cli::kExitUsage);
  r = run({"eval", "harmonic", "j=3", "k=0"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("k >= 1") != std::string::npos);
  CHECK(run({"eval", "kolbig-s", "j=3", "q=1", "alpha=-2"}).code == cli::kExitUsage);
  CHECK(run({"eval", "factorial", "n=-1"}).code == cli::kExitUsage);
  CHECK(run({"eval"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--format", "xml", "eval", "factorial", "n=3"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("table examples") {
  CHECK(run({"table", "r-stirling1", "r=2", "nmax=4"}).out == "# family=r-stirling1 r=2 nmax=4\n1\n2\t1\n6\t5\t1\n");
  CHECK(run({"table", "stirling1", "nmax=0"}).out == "# family=stirling1 r=0 nmax=0\n1\n");
  CHECK(run({"table", "r-stirling1", "r=5", "nmax=3"}).out == "# family=r-stirling1 r=5 nmax=3\n");
  CHECK(run({"table", "stirling2", "nmax=2", "--format", "csv"}).out == "# family=stirling2 r=0 nmax=2\n1\n0,1\n0,1,1\n");

  const auto j = nlohmann::json::parse(run({"table", "r-stirling1", "r=1", "nmax=6", "--format", "json"}).out);
  const Triangle t = make_triangle(TriangleFamily::RStirling1, 6, 1);
  REQUIRE(j["rows"].size() == t.rows.size());
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    for (std::size_t k = 0; k < t.rows[n].size(); ++k) CHECK(Integer::parse(j["rows"][n][k].get<std::string>()) == t.rows[n][k]);
  }

  CHECK(run({"table", "stirling1"}).code == cli::kExitUsage);
  CHECK(run({"table", "stirling1", "nmax=100000"}).code == cli::kExitUsage);
  CHECK(run({"table", "stirling1", "nmax=-1"}).code == cli::kExitUsage);
  CHECK(run({"table", "bell", "nmax=3"}).code == cli::kExitUsage);
  CHECK(run({"table", "stirling2", "nmax=3", "r=1"}).code == cli::kExitUsage);
}

TEST_CASE("poly output") {
  CHECK(run({"poly", "R", "m=2", "i=1"}).out == r_poly(2, 1).to_string() + "\n");
  CHECK(run({"poly", "bernoulli", "k=2"}).out == "1/6 + -1*x + 1*x^2\n");
  CHECK(run({"poly", "hyperharmonic", "j=3", "x=4"}).out == hyperharmonic(4, 4).to_string() + "\n");
  const Result r = run({"--format", "json", "poly", "RBar", "m=6", "i=2"});
  REQUIRE(r.code == cli::kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["family"] == "RBar");
  CHECK(Polynomial::from_json(j["coefficients"].dump()) == r_bar_poly(6, 2));
  CHECK(run({"poly", "R", "m=2"}).code == cli::kExitUsage);
  CHECK(run({"poly", "R", "m=2", "i=3"}).code == cli::kExitUsage);
  CHECK(run({"poly", "legendre", "k=2"}).code == cli::kExitUsage);
  CHECK(run({"poly", "bernoulli", "j=2"}).code == cli::kExitUsage);
}

TEST_CASE("verify exit codes") {
  Result r = run({"verify", "PROP-4", "--profile", "smoke"});
  CHECK(r.code == cli::kExitPass);
  CHECK(r.out.find("PASS PROP-4") == 0);
  r = run({"verify", "NOPE"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("unknown identity 'NOPE'") != std::string::npos);
  r = run({"verify", "CORRUPTED-REM2-N1", "--with-fixture", "--profile", "smoke"});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.out.find("counterexample m=0: lhs=1 rhs=2") != std::string::npos);
  CHECK(run({"verify", "REM2-N1", "m=0..6"}).out == "PASS REM2-N1 cases=7 m=0..6\n1/1 identities pass (profile desk)\n");
  CHECK(run({"verify", "REM2-N1", "m=-1..6"}).code == cli::kExitUsage);
  CHECK(run({"verify", "REM2-N1", "PROP-4", "m=0..6"}).code == cli::kExitUsage);
  CHECK(run({"verify", "all", "PROP-4"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
  CHECK(run({"verify", "all", "--profile", "/nonexistent"}).code == cli::kExitUsage);
  CHECK(run({"verify", "all", "--format", "csv"}).code == cli::kExitUsage);
}

TEST_CASE("verify JSON and determinism") {
  const std::vector<std::string> args = {"verify", "all", "--profile", "smoke", "--format", "json"};
  const Result a = run(args);
  const Result b = run(args);
  CHECK(a.code == cli::kExitPass);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j.size() == default_registry().size());
  for (const auto& rep : j) CHECK(rep["status"] == "pass");
  CHECK(a.out.find("seconds") == std::string::npos);
  CHECK(run({"verify", "REM2-N1", "--verbose"}).out.find("time=") != std::string::npos);
}

TEST_CASE("list-identities and audit") {
  const Result list = run({"list-identities"});
  CHECK(list.code == cli::kExitPass);
  CHECK(static_cast<std::size_t>(std::count(list.out.begin(), list.out.end(), '\n')) == default_registry().size());
  CHECK(nlohmann::json::parse(run({"list-identities", "--format", "json"}).out).size() == default_registry().size());
  CHECK(run({"audit"}).out == audit_text(default_registry()));
  CHECK(run({"audit", "--format", "json"}).out == audit_json(default_registry()));
}

TEST_CASE("help exits cleanly") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}
