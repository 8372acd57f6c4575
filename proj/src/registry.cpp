#include "hyperstir/registry.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include <json.hpp>

namespace hyperstir {

std::string value_to_string(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  return std::get<Polynomial>(v).to_string();
}

Index Assignment::operator[](std::string_view name) const {
  for (const auto& [k, v] : entries_) {
    if (k == name) return v;
  }
  throw std::out_of_range("assignment has no parameter '" + std::string(name) + "'");
}

std::string Assignment::to_string() const {
  std::string out;
  for (const auto& [k, v] : entries_) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

void Registry::add(IdentityRecord record) {
  if (records_.contains(record.id)) {
    throw DuplicateIdentityError("duplicate identity id '" + record.id + "'");
  }
  std::string id = record.id;
  records_.emplace(std::move(id), std::move(record));
}

const IdentityRecord* Registry::find(std::string_view id) const {
  auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

std::vector<const IdentityRecord*> Registry::records() const {
  std::vector<const IdentityRecord*> out;
  out.reserve(records_.size());
  for (const auto& [id, rec] : records_) out.push_back(&rec);
  return out;
}

const Registry& default_registry() {
  static const Registry registry = register_all();
  return registry;
}

std::string status_name(VerificationStatus s) {
  switch (s) {
    case VerificationStatus::Pass: return "pass";
    case VerificationStatus::Fail: return "fail";
    case VerificationStatus::Error: return "error";
  }
  return "?";
}

namespace {

void validate_ranges(const IdentityRecord& record, const Ranges& ranges) {
  for (const auto& [name, range] : ranges) {
    auto it = std::find_if(record.parameters.begin(), record.parameters.end(),
                           [&](const Parameter& p) { return p.name == name; });
    if (it == record.parameters.end()) {
      throw RangeError(record.id + ": unknown parameter '" + name + "'");
    }
    if (range.lo < it->min) {
      throw RangeError(record.id + ": range " + name + "=" + std::to_string(range.lo) + ".." +
                       std::to_string(range.hi) + " starts below the minimum " + std::to_string(it->min));
    }
    if (it->max && range.hi > *it->max) {
      throw RangeError(record.id + ": range " + name + "=" + std::to_string(range.lo) + ".." +
                       std::to_string(range.hi) + " exceeds the maximum " + std::to_string(*it->max));
    }
  }
  for (const auto& p : record.parameters) {
    if (!ranges.contains(p.name)) throw RangeError(record.id + ": no range given for parameter '" + p.name + "'");
  }
}

std::vector<Assignment> enumerate(const IdentityRecord& record, const Ranges& ranges) {
  std::vector<Assignment> out;
  const auto& params = record.parameters;
  std::vector<Index> cur;
  for (const auto& p : params) {
    const auto& r = ranges.at(p.name);
    if (r.hi < r.lo) return out;
    cur.push_back(r.lo);
  }
  while (true) {
    std::vector<std::pair<std::string, Index>> entries;
    entries.reserve(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) entries.emplace_back(params[i].name, cur[i]);
    Assignment a(std::move(entries));
    if (!record.constraint || record.constraint(a)) out.push_back(std::move(a));
    // Odometer with the last parameter varying fastest.
    std::size_t pos = params.size();
    while (pos > 0) {
      --pos;
      const auto& r = ranges.at(params[pos].name);
      if (cur[pos] < r.hi) {
        ++cur[pos];
        break;
      }
      cur[pos] = r.lo;
      if (pos == 0) return out;
    }
    if (params.empty()) return out;
  }
}

struct CaseOutcome {
  bool ok = true;
  std::optional<Failure> failure;
  std::optional<std::string> error;
};

CaseOutcome evaluate_case(const IdentityRecord& record, const Assignment& a) {
  CaseOutcome out;
  try {
    Value lhs = record.lhs(a);
    Value rhs = record.rhs(a);
    const bool want_poly = record.comparison == Comparison::Polynomial;
    if (std::holds_alternative<Polynomial>(lhs) != want_poly ||
        std::holds_alternative<Polynomial>(rhs) != want_poly) {
      out.ok = false;
      out.error = record.id + " at " + a.to_string() + ": side value kind does not match the comparison mode";
      return out;
    }
    if (!(lhs == rhs)) {
      out.ok = false;
      out.failure = Failure{a, value_to_string(lhs), value_to_string(rhs)};
    }
  } catch (const std::exception& e) {
    out.ok = false;
    out.error = record.id + " at " + a.to_string() + ": " + e.what();
  }
  return out;
}

}  // namespace

VerificationReport verify(const IdentityRecord& record, const Ranges& ranges, const VerifyOptions& options) {
  validate_ranges(record, ranges);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.id = record.id;
  report.ranges = ranges;
  for (const auto& p : record.parameters) report.parameter_order.push_back(p.name);

  const std::vector<Assignment> cases = enumerate(record, ranges);
  std::vector<CaseOutcome> outcomes(cases.size());
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cases.size(), 1)));
  if (threads <= 1) {
    for (std::size_t c = 0; c < cases.size(); ++c) outcomes[c] = evaluate_case(record, cases[c]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t c = t; c < cases.size(); c += threads) outcomes[c] = evaluate_case(record, cases[c]);
      });
    }
  }

  // Merge by case index so the report does not depend on scheduling.
  report.cases = cases.size();
  for (auto& o : outcomes) {
    if (o.ok) continue;
    if (o.error && report.error.empty()) report.error = *o.error;
    if (o.failure) report.failures.push_back(std::move(*o.failure));
  }
  if (!report.error.empty()) {
    report.status = VerificationStatus::Error;
  } else if (!report.failures.empty()) {
    report.status = VerificationStatus::Fail;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify(const Registry& registry, std::string_view id, const Ranges& ranges,
                          const VerifyOptions& options) {
  const IdentityRecord* rec = registry.find(id);
  if (rec == nullptr) throw UnknownIdentityError("unknown identity '" + std::string(id) + "'");
  return verify(*rec, ranges, options);
}

std::vector<std::string> profile_ids(const Registry& registry, const Profile& profile) {
  std::set<std::string> ids;
  if (profile.default_max) {
    for (const auto* rec : registry.records()) ids.insert(rec->id);
  }
  for (const auto& [id, bounds] : profile.overrides) ids.insert(id);
  return {ids.begin(), ids.end()};
}

Ranges resolve_ranges(const IdentityRecord& record, const Profile& profile) {
  Ranges ranges;
  for (const auto& p : record.parameters) {
    if (!profile.default_max) continue;
    Index hi = *profile.default_max;
    if (p.max) hi = std::min(hi, *p.max);
    ranges[p.name] = ParamRange{p.min, hi};
  }
  auto it = profile.overrides.find(record.id);
  if (it != profile.overrides.end()) {
    for (const auto& [name, bound] : it->second) {
      auto pit = std::find_if(record.parameters.begin(), record.parameters.end(),
                              [&](const Parameter& p) { return p.name == name; });
      const Index min = pit == record.parameters.end() ? 0 : pit->min;
      ranges[name] = ParamRange{bound.lo.value_or(min), bound.hi};
    }
  }
  return ranges;
}

std::vector<VerificationReport> verify_suite(const Registry& registry, const Profile& profile,
                                             const VerifyOptions& options) {
  std::vector<VerificationReport> reports;
  for (const auto& id : profile_ids(registry, profile)) {
    const IdentityRecord* rec = registry.find(id);
    if (rec == nullptr) {
      VerificationReport r;
      r.id = id;
      r.status = VerificationStatus::Error;
      r.error = "unknown identity '" + id + "' in profile '" + profile.name + "'";
      reports.push_back(std::move(r));
      continue;
    }
    const Ranges ranges = resolve_ranges(*rec, profile);
    try {
      reports.push_back(verify(*rec, ranges, options));
    } catch (const std::exception& e) {
      VerificationReport r;
      r.id = id;
      r.ranges = ranges;
      r.status = VerificationStatus::Error;
      r.error = e.what();
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

namespace {

std::string ranges_to_string(const VerificationReport& report) {
  std::string out;
  auto append = [&](const std::string& name, const ParamRange& r) {
    if (!out.empty()) out += ' ';
    out += name + "=" + std::to_string(r.lo) + ".." + std::to_string(r.hi);
  };
  if (report.parameter_order.empty()) {
    for (const auto& [name, r] : report.ranges) append(name, r);
    return out;
  }
  for (const auto& name : report.parameter_order) {
    if (auto it = report.ranges.find(name); it != report.ranges.end()) append(name, it->second);
  }
  return out;
}

}  // namespace

std::string report_to_text(const VerificationReport& report, bool verbose) {
  std::string status = status_name(report.status);
  std::transform(status.begin(), status.end(), status.begin(), ::toupper);
  std::string out = status + " " + report.id + " cases=" + std::to_string(report.cases);
  const std::string ranges = ranges_to_string(report);
  if (!ranges.empty()) out += " " + ranges;
  if (verbose) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " time=%.3fs", report.seconds);
    out += buf;
  }
  out += '\n';
  if (!report.error.empty()) out += "  error: " + report.error + "\n";
  for (const auto& f : report.failures) {
    out += "  counterexample " + f.assignment.to_string() + ": lhs=" + f.lhs + " rhs=" + f.rhs + "\n";
  }
  return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool verbose) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = status_name(r.status);
    j["cases"] = r.cases;
    nlohmann::ordered_json ranges = nlohmann::ordered_json::object();
    for (const auto& name : r.parameter_order) {
      if (auto it = r.ranges.find(name); it != r.ranges.end()) ranges[name] = {it->second.lo, it->second.hi};
    }
    for (const auto& [name, range] : r.ranges) {
      if (!ranges.contains(name)) ranges[name] = {range.lo, range.hi};
    }
    j["ranges"] = std::move(ranges);
    auto failures = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) {
      nlohmann::ordered_json a = nlohmann::ordered_json::object();
      for (const auto& [k, v] : f.assignment.entries()) a[k] = v;
      failures.push_back({{"assignment", std::move(a)}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    }
    j["failures"] = std::move(failures);
    if (!r.error.empty()) j["error"] = r.error;
    if (verbose) j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string parameters_to_string(const IdentityRecord& rec) {
  std::string out;
  for (const auto& p : rec.parameters) {
    if (!out.empty()) out += ", ";
    out += p.name + ">=" + std::to_string(p.min);
    if (p.max) out += "<=" + std::to_string(*p.max);
  }
  return out;
}

}  // namespace

std::string audit_text(const Registry& registry) {
  std::string out;
  for (const auto* rec : registry.records()) {
    out += rec->id + " [" + rec->group + "] (" + parameters_to_string(*rec) + ")";
    if (!rec->constraint_text.empty()) out += " where " + rec->constraint_text;
    out += std::string(rec->comparison == Comparison::Polynomial ? " poly" : " scalar");
    out += ": " + rec->statement + "\n";
  }
  out += std::to_string(registry.size()) + " identities\n";
  return out;
}

std::string audit_json(const Registry& registry) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto* rec : registry.records()) {
    nlohmann::ordered_json j;
    j["id"] = rec->id;
    j["group"] = rec->group;
    j["statement"] = rec->statement;
    auto params = nlohmann::ordered_json::array();
    for (const auto& p : rec->parameters) {
      nlohmann::ordered_json pj{{"name", p.name}, {"min", p.min}};
      if (p.max) pj["max"] = *p.max;
      params.push_back(std::move(pj));
    }
    j["parameters"] = std::move(params);
    j["constraint"] = rec->constraint_text;
    j["comparison"] = rec->comparison == Comparison::Polynomial ? "polynomial" : "scalar";
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace hyperstir
