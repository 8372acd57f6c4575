#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hyperstir/exact.hpp"
#include "hyperstir/polynomial.hpp"

namespace hyperstir {

/// Either side of an identity evaluates to a scalar or to a polynomial in x.
using Value = std::variant<Rational, Polynomial>;

std::string value_to_string(const Value& v);

enum class Comparison { Scalar, Polynomial };

/// A named integer parameter with its declared lower bound and optional upper
/// bound.
struct Parameter {
  std::string name;
  Index min = 0;
  std::optional<Index> max;
};

/// One point of a parameter sweep, in declaration order.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<std::pair<std::string, Index>> entries) : entries_(std::move(entries)) {}

  /// Throws std::out_of_range for an unknown name.
  Index operator[](std::string_view name) const;
  const std::vector<std::pair<std::string, Index>>& entries() const { return entries_; }
  /// "m=3 i=1 n=2"
  std::string to_string() const;

 private:
  std::vector<std::pair<std::string, Index>> entries_;
};

using Evaluator = std::function<Value(const Assignment&)>;

struct IdentityRecord {
  std::string id;
  /// Topic the identity belongs to (hyper-sums, Bell bridge, ...).
  std::string group;
  /// The identity written out, lhs = rhs.
  std::string statement;
  std::vector<Parameter> parameters;
  /// Joint constraint beyond the per-parameter bounds, e.g. "i <= m".
  std::string constraint_text;
  std::function<bool(const Assignment&)> constraint;
  Comparison comparison = Comparison::Scalar;
  Evaluator lhs;
  Evaluator rhs;
};

class DuplicateIdentityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};
class UnknownIdentityError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};
/// A requested range leaves a parameter's declared domain, names an unknown
/// parameter, or omits one.
class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Registry {
 public:
  /// Throws DuplicateIdentityError if the id is taken.
  void add(IdentityRecord record);
  const IdentityRecord* find(std::string_view id) const;
  /// Ordered by id.
  std::vector<const IdentityRecord*> records() const;
  std::size_t size() const { return records_.size(); }

 private:
  std::map<std::string, IdentityRecord, std::less<>> records_;
};

/// Every identity this library checks.
Registry register_all();
/// Process-wide instance of register_all().
const Registry& default_registry();

/// A record whose rhs is the true value plus one. Used to show that the
/// engine reports failures.
IdentityRecord make_corrupted_fixture();

struct ParamRange {
  Index lo = 0;
  Index hi = 0;
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};
using Ranges = std::map<std::string, ParamRange>;

struct Failure {
  Assignment assignment;
  std::string lhs;
  std::string rhs;
};

enum class VerificationStatus { Pass, Fail, Error };
std::string status_name(VerificationStatus s);

struct VerificationReport {
  std::string id;
  Ranges ranges;
  /// Parameter names in declaration order.
  std::vector<std::string> parameter_order;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  VerificationStatus status = VerificationStatus::Pass;
  /// Exception text when status is Error.
  std::string error;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Worker threads for the case sweep; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Exhaustive sweep over the Cartesian product of `ranges` filtered by the
/// record's constraint. Throws RangeError for ranges outside the declared
/// domain; exceptions thrown by the sides are captured as status Error.
VerificationReport verify(const IdentityRecord& record, const Ranges& ranges, const VerifyOptions& options = {});
/// Throws UnknownIdentityError for an unregistered id.
VerificationReport verify(const Registry& registry, std::string_view id, const Ranges& ranges,
                          const VerifyOptions& options = {});

/// Named range profile: an optional bound applied to every registered
/// identity, plus per-identity, per-parameter overrides.
struct ParamBound {
  /// Unset means the parameter's declared minimum.
  std::optional<Index> lo;
  Index hi = 0;
};

struct Profile {
  std::string name;
  std::optional<Index> default_max;
  std::map<std::string, std::map<std::string, ParamBound>> overrides;
};

/// "smoke", "desk" or "deep". Throws std::invalid_argument otherwise.
Profile builtin_profile(const std::string& name);
/// Plain-text profile:
///   # comment
///   default 8
///   PROP-4 m=0..10 i=0..10 n=8
/// A bare value is an upper bound; the lower bound is the parameter minimum.
Profile parse_profile(const std::string& text, const std::string& name = "config");
Profile load_profile(const std::string& path);
/// Built-in name, or else a path to a profile file.
Profile resolve_profile(const std::string& name_or_path);

/// Ids the profile covers, ordered by id.
std::vector<std::string> profile_ids(const Registry& registry, const Profile& profile);
/// Full ranges for one record. Default bounds are clamped to declared maxima;
/// explicit overrides are validated by verify().
Ranges resolve_ranges(const IdentityRecord& record, const Profile& profile);

/// Runs every identity the profile covers; per-identity failures are
/// captured in the reports.
std::vector<VerificationReport> verify_suite(const Registry& registry, const Profile& profile,
                                             const VerifyOptions& options = {});

std::string report_to_text(const VerificationReport& report, bool verbose = false);
/// {"id", "status", "cases", "ranges", "failures": [{"assignment", "lhs", "rhs"}], "error"?}
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool verbose = false);

/// One line per identity: id, group, parameters with bounds, constraint,
/// statement.
std::string audit_text(const Registry& registry);
std::string audit_json(const Registry& registry);

}  // namespace hyperstir
