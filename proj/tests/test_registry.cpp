#include <doctest.h>

#include <json.hpp>
#include <set>

#include "hyperstir/registry.hpp"

using namespace hyperstir;

namespace {

const IdentityRecord& record(const std::string& id) {
  const IdentityRecord* r = default_registry().find(id);
  REQUIRE(r != nullptr);
  return *r;
}

}  // namespace

TEST_CASE("registry contents") {
  const Registry& reg = default_registry();
  CHECK(reg.size() >= 45);
  std::set<std::string> ids;
  std::string previous;
  for (const auto* r : reg.records()) {
    CHECK(r->id > previous);
    previous = r->id;
    ids.insert(r->id);
    CHECK_FALSE(r->statement.empty());
    CHECK_FALSE(r->group.empty());
    CHECK(static_cast<bool>(r->lhs));
    CHECK(static_cast<bool>(r->rhs));
  }
  for (const char* id : {"PROP-4", "HS-KARGIN", "HS-CERE", "REM2-N1", "REM2-RECUR", "R-TWOFORMS", "RBAR-SHIFT",
                         "RBAR-PRODUCT", "BER-23", "BERN-SHIFT", "FIN1", "FIN4", "HORIZ-GF", "KOLBIG", "MYRES2-17",
                         "EGF-RSTIRLING", "IT5", "IT6", "IT7", "IT8", "W1508", "MYRES-HISRES"}) {
    CHECK(ids.contains(id));
  }
  CHECK(reg.find("NOPE") == nullptr);
}

TEST_CASE("duplicate ids are rejected") {
  Registry reg;
  reg.add(make_corrupted_fixture());
  CHECK_THROWS_AS(reg.add(make_corrupted_fixture()), DuplicateIdentityError);
}

TEST_CASE("REM2-N1 over m <= 6 passes with 7 cases") {
  const auto report = verify(default_registry(), "REM2-N1", {{"m", {0, 6}}});
  CHECK(report.status == VerificationStatus::Pass);
  CHECK(report.cases == 7);
  CHECK(report.failures.empty());
}

TEST_CASE("PROP-4 sweeps") {
  auto report = verify(record("PROP-4"), {{"m", {0, 6}}, {"i", {0, 6}}, {"n", {0, 4}}});
  CHECK(report.status == VerificationStatus::Pass);
  CHECK(report.cases == 28 * 5);
  report = verify(record("PROP-4"), {{"m", {0, 10}}, {"i", {0, 10}}, {"n", {0, 8}}});
  CHECK(report.status == VerificationStatus::Pass);
  CHECK(report.cases == 594);
}

TEST_CASE("corrupted fixture fails with counterexamples") {
  const IdentityRecord bad = make_corrupted_fixture();
  const auto report = verify(bad, {{"m", {0, 5}}});
  CHECK(report.status == VerificationStatus::Fail);
  REQUIRE(report.failures.size() == 6);
  CHECK(report.failures[3].assignment.to_string() == "m=3");
  CHECK(report.failures[3].lhs == "6");
  CHECK(report.failures[3].rhs == "7");
  const std::string text = report_to_text(report);
  CHECK(text.find("FAIL CORRUPTED-REM2-N1 cases=6 m=0..5") == 0);
  CHECK(text.find("counterexample m=4: lhs=24 rhs=25") != std::string::npos);
}

TEST_CASE("threaded sweeps match the sequential report") {
  const IdentityRecord bad = make_corrupted_fixture();
  const auto seq = verify(bad, {{"m", {0, 9}}});
  const auto par = verify(bad, {{"m", {0, 9}}}, VerifyOptions{4});
  CHECK(reports_to_json({seq}) == reports_to_json({par}));
  const auto prop = verify(record("CONV-52"), {{"m", {0, 5}}, {"i", {0, 5}}, {"j", {0, 5}}, {"r", {0, 2}}, {"s", {0, 2}}},
                           VerifyOptions{3});
  CHECK(prop.status == VerificationStatus::Pass);
}

TEST_CASE("ranges outside the declared domain are rejected") {
  CHECK_THROWS_AS(verify(record("REM2-N1"), {{"m", {-1, 3}}}), RangeError);
  CHECK_THROWS_AS(verify(record("REM2-N1"), {{"m", {0, 3}}, {"z", {0, 1}}}), RangeError);
  CHECK_THROWS_AS(verify(record("PROP-4"), {{"m", {0, 3}}, {"i", {0, 3}}}), RangeError);
  CHECK_THROWS_AS(verify(record("KOLBIG"), {{"j", {1, 3}}, {"q", {1, 3}}, {"a", {0, 4}}}), RangeError);
  CHECK_THROWS_AS(verify(record("BERN-NEGR"), {{"n", {0, 3}}, {"r", {0, 3}}}), RangeError);
  CHECK_THROWS_AS(verify(default_registry(), "NOPE", {}), UnknownIdentityError);
  const auto empty = verify(record("REM2-N1"), {{"m", {3, 2}}});
  CHECK(empty.cases == 0);
  CHECK(empty.status == VerificationStatus::Pass);
}

TEST_CASE("evaluation errors are reported, not thrown") {
  IdentityRecord r = make_corrupted_fixture();
  r.id = "THROWS";
  r.lhs = [](const Assignment& a) -> Value {
    if (a["m"] == 2) throw std::domain_error("boom");
    return Rational(0);
  };
  r.rhs = [](const Assignment&) -> Value { return Rational(0); };
  const auto report = verify(r, {{"m", {0, 4}}});
  CHECK(report.status == VerificationStatus::Error);
  CHECK(report.error.find("boom") != std::string::npos);

  IdentityRecord mixed = make_corrupted_fixture();
  mixed.rhs = [](const Assignment&) -> Value { return Polynomial(); };
  CHECK(verify(mixed, {{"m", {0, 1}}}).status == VerificationStatus::Error);
}

TEST_CASE("profile parsing") {
  const Profile p = parse_profile(
      "# desk-like\n"
      "default 5\n"
      "PROP-4 m=0..7 i=7 n=2..3  # trailing comment\n"
      "\n",
      "custom");
  CHECK(p.name == "custom");
  CHECK(p.default_max == 5);
  const auto& prop = p.overrides.at("PROP-4");
  CHECK(prop.at("m").lo == 0);
  CHECK(prop.at("m").hi == 7);
  CHECK_FALSE(prop.at("i").lo.has_value());
  CHECK(prop.at("n").lo == 2);

  const Ranges ranges = resolve_ranges(record("PROP-4"), p);
  CHECK(ranges.at("n") == ParamRange{2, 3});
  CHECK(ranges.at("i") == ParamRange{0, 7});
  const Ranges kolbig = resolve_ranges(record("KOLBIG"), p);
  CHECK(kolbig.at("a") == ParamRange{0, 3});
  CHECK(kolbig.at("j") == ParamRange{1, 5});

  CHECK_THROWS_AS(parse_profile("default"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("default x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("PROP-4 m"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("PROP-4 m=1..z"), std::invalid_argument);
  CHECK_THROWS_AS(builtin_profile("huge"), std::invalid_argument);
  CHECK_THROWS_AS(load_profile("/nonexistent/profile.txt"), std::invalid_argument);
  CHECK(resolve_profile("smoke").default_max == 4);
}

TEST_CASE("profile coverage") {
  CHECK(profile_ids(default_registry(), parse_profile("")).empty());
  CHECK(verify_suite(default_registry(), parse_profile("")).empty());
  const auto only = profile_ids(default_registry(), parse_profile("REM2-N1 m=3\nPROP-4 m=2 i=2 n=2"));
  CHECK(only == std::vector<std::string>{"PROP-4", "REM2-N1"});
  CHECK(profile_ids(default_registry(), builtin_profile("desk")).size() == default_registry().size());

  const auto reports = verify_suite(default_registry(), parse_profile("NOPE m=1\nREM2-N1 m=20..2"));
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].status == VerificationStatus::Error);
  CHECK(reports[1].status == VerificationStatus::Pass);
}

TEST_CASE("smoke suite passes and is deterministic") {
  const Profile smoke = builtin_profile("smoke");
  const auto a = verify_suite(default_registry(), smoke);
  const auto b = verify_suite(default_registry(), smoke, VerifyOptions{2});
  for (const auto& r : a) {
    CAPTURE(r.id);
    CHECK(r.status == VerificationStatus::Pass);
    CHECK(r.cases > 0);
  }
  CHECK(reports_to_json(a) == reports_to_json(b));
}

TEST_CASE("JSON report shape") {
  const auto report = verify(make_corrupted_fixture(), {{"m", {0, 1}}});
  const auto j = nlohmann::json::parse(reports_to_json({report}));
  REQUIRE(j.size() == 1);
  CHECK(j[0]["id"] == "CORRUPTED-REM2-N1");
  CHECK(j[0]["status"] == "fail");
  CHECK(j[0]["cases"] == 2);
  CHECK(j[0]["failures"][1]["assignment"]["m"] == 1);
  CHECK(j[0]["failures"][1]["rhs"] == "2");
  CHECK_FALSE(j[0].contains("seconds"));
  CHECK(nlohmann::json::parse(reports_to_json({report}, true))[0].contains("seconds"));
}

TEST_CASE("audit lists every identity") {
  const std::string text = audit_text(default_registry());
  for (const auto* r : default_registry().records()) CHECK(text.find(r->id + " [") != std::string::npos);
  const auto j = nlohmann::json::parse(audit_json(default_registry()));
  CHECK(j.size() == default_registry().size());
}
