// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hyperstir/registry.hpp"

using namespace hyperstir;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

/// Every parameter from its declared minimum to `hi`, except where `bounds`
/// says otherwise.
Ranges ranges_for(const IdentityRecord& rec, Index hi, const std::map<std::string, ParamRange>& bounds = {}) {
  Ranges out;
  for (const auto& p : rec.parameters) out[p.name] = ParamRange{p.min, hi};
  for (const auto& [name, r] : bounds) out[name] = r;
  return out;
}

/// Sweeps the listed identities and folds them into one outcome.
Outcome sweep(const std::vector<std::pair<std::string, Ranges>>& jobs,
              std::function<bool(const std::string&, const VerificationReport&)> extra = nullptr) {
  Outcome o;
  std::size_t cases = 0;
  for (const auto& [id, ranges] : jobs) {
    const IdentityRecord* rec = default_registry().find(id);
    if (!rec) {
      o.ok = false;
      o.detail += " missing " + id + ";";
      continue;
    }
    const VerificationReport r = verify(*rec, ranges);
    cases += r.cases;
    if (r.status != VerificationStatus::Pass || r.cases == 0 || (extra && !extra(id, r))) {
      o.ok = false;
      std::string first = report_to_text(r);
      first = first.substr(0, first.find('\n'));
      o.detail += " " + first + ";";
    }
  }
  o.detail = std::to_string(jobs.size()) + " identities, " + std::to_string(cases) + " cases" + o.detail;
  return o;
}

Ranges all_to(const std::string& id, Index hi, const std::map<std::string, ParamRange>& bounds = {}) {
  return ranges_for(*default_registry().find(id), hi, bounds);
}

std::vector<Criterion> criteria() {
  return {
      {1, "PROP-4 for 0 <= i <= m <= 10, 0 <= n <= 8 (594 cases)", 10.0,
       [] {
         return sweep({{"PROP-4", {{"m", {0, 10}}, {"i", {0, 10}}, {"n", {0, 8}}}}},
                      [](const std::string&, const VerificationReport& r) { return r.cases == 594; });
       }},
      {2, "hyper-sum triple agreement for k <= 6, m <= 5, n <= 8", 30.0,
       [] {
         const Ranges r = {{"k", {0, 6}}, {"m", {0, 5}}, {"n", {0, 8}}};
         return sweep({{"HS-KARGIN", r}, {"HS-CERE", r}, {"HS-INTRO", r}});
       }},
      {3, "alternating r-Stirling sums: m <= 12, and the power-sum form for m <= 8, n <= 6", 30.0,
       [] {
         return sweep({{"REM2-N1", {{"m", {0, 12}}}}, {"REM2-RECUR", {{"m", {0, 8}}, {"n", {0, 6}}}},
                       {"REM2-S0", {{"m", {0, 8}}, {"n", {0, 8}}}}});
       }},
      {4, "polynomial identities coefficient-exact for indices <= 10", 30.0,
       [] {
         std::vector<std::pair<std::string, Ranges>> jobs;
         for (const char* id : {"R-TWOFORMS", "RBAR-SHIFT", "RBAR-PRODUCT", "RBAR-PRODUCT-SHIFTED", "HH-DERIV-12",
                                "HH-DERIV-13", "HH-DERIV-R", "HH-BINOM-DERIV", "BER-23", "BER-23-EXPANDED", "BERN-SHIFT",
                                "FIN4", "HORIZ-GF"}) {
           jobs.emplace_back(id, all_to(id, 10));
         }
         return sweep(jobs, [](const std::string& id, const VerificationReport&) {
           return default_registry().find(id)->comparison == Comparison::Polynomial;
         });
       }},
      {5, "Kolbig: alpha in {1/2, 2, 7/3, -1/3} and alpha = r in 0..5, 1 <= q, j <= 8 with q > j vanishing", 30.0,
       [] {
         return sweep({{"KOLBIG", {{"j", {1, 8}}, {"q", {1, 8}}, {"a", {0, 3}}}},
                       {"KOLBIG-INT", {{"j", {1, 8}}, {"q", {1, 8}}, {"r", {0, 5}}}}},
                      [](const std::string& id, const VerificationReport& r) {
                        return r.cases == (id == "KOLBIG" ? 64u * 4 : 64u * 6);
                      });
       }},
      {6, "C(j+r, r) P(i, j+r, r) = (i!/j!) [j+r+1, i+r+1]_{r+1} for i <= j <= 10, r <= 5", 30.0,
       [] { return sweep({{"MYRES2-17", {{"i", {0, 10}}, {"j", {0, 10}}, {"r", {0, 5}}}}}); }},
      {7, "EGF coefficients match r-Stirling values for i <= 6, r <= 4, order 12", 30.0,
       [] {
         const Ranges r = {{"i", {0, 6}}, {"r", {0, 4}}, {"j", {0, 11}}};
         return sweep({{"EGF-RSTIRLING", r}, {"EGF-WANG", r}});
       }},
      {8, "higher-order Bernoulli triple agreement (k <= 10, i <= 5) and the <= 8 sweeps", 60.0,
       [] {
         const Ranges hb = {{"k", {0, 10}}, {"i", {1, 5}}};
         std::vector<std::pair<std::string, Ranges>> jobs = {{"HB-KIM", hb}, {"HB-SRIVASTAVA", hb}};
         for (const char* id : {"IT5", "IT5-I1", "IT5-R0", "IT6", "IT6-SPECIAL", "IT7", "IT7-SPECIAL", "IT8",
                                "IT8-SHIFTED", "IT8-FIN5", "W1508", "W1508-P", "W1508-SPECIAL", "W1508-IT5"}) {
           jobs.emplace_back(id, all_to(id, 8));
         }
         return sweep(jobs);
       }},
      {9, "verify all --profile desk exits 0 with >= 45 identities", 300.0,
       [] {
         std::ostringstream out, err;
         const int code = cli::run({"verify", "all", "--profile", "desk", "--format", "json"}, out, err);
         const auto reports = nlohmann::json::parse(out.str());
         std::size_t pass = 0;
         for (const auto& r : reports) pass += r["status"] == "pass";
         Outcome o;
         o.ok = code == cli::kExitPass && reports.size() >= 45 && pass == reports.size();
         o.detail = "exit " + std::to_string(code) + ", " + std::to_string(pass) + "/" + std::to_string(reports.size()) +
                    " pass";
         return o;
       }},
      {10, "corrupted fixture fails with a reported counterexample", 10.0,
       [] {
         const VerificationReport r = verify(make_corrupted_fixture(), {{"m", {0, 8}}});
         Outcome o;
         o.ok = r.status == VerificationStatus::Fail && r.failures.size() == r.cases && !r.failures.empty();
         o.detail = std::to_string(r.failures.size()) + " counterexamples";
         if (!r.failures.empty()) {
           const auto& f = r.failures.front();
           o.detail += ", first " + f.assignment.to_string() + ": lhs=" + f.lhs + " rhs=" + f.rhs;
         }
         return o;
       }},
  };
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool ok = o.ok && in_time;
    failed += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", seconds, c.limit_seconds);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << o.detail << "; "
              << timing << (in_time ? "" : ", over time limit") << "]\n";
  }
  std::cout << (failed == 0 ? "all acceptance criteria pass" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
