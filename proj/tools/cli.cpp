#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hyperstir/bell.hpp"
#include "hyperstir/registry.hpp"
#include "hyperstir/special_poly.hpp"
#include "hyperstir/stirling.hpp"

namespace hyperstir::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr Index kMaxTableRows = 5000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

/// key=value tokens in command-line order.
class KeyValues {
 public:
  KeyValues(const std::vector<std::string>& tokens) {
    for (const auto& token : tokens) {
      const auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + token + "'");
      std::string key = token.substr(0, eq);
      if (find(key)) throw UsageError("argument '" + key + "' given twice");
      entries_.emplace_back(std::move(key), token.substr(eq + 1));
    }
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  /// Rejects keys outside `allowed`.
  void restrict_to(const std::vector<std::string_view>& allowed, const std::string& what) const {
    for (const auto& [key, value] : entries_) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        std::string list;
        for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
        throw UsageError(what + ": unknown argument '" + key + "' (expected " + list + ")");
      }
    }
  }

  const std::string* find(std::string_view key) const {
    for (const auto& [k, v] : entries_) {
      if (k == key) return &v;
    }
    return nullptr;
  }

  Index index(std::string_view key, std::optional<Index> fallback = std::nullopt) const {
    const std::string* text = find(key);
    if (!text) {
      if (fallback) return *fallback;
      throw UsageError("missing required argument '" + std::string(key) + "'");
    }
    Index value = 0;
    const auto* end = text->data() + text->size();
    auto [ptr, ec] = std::from_chars(text->data(), end, value);
    if (text->empty() || ec != std::errc() || ptr != end) {
      throw UsageError("argument '" + std::string(key) + "' must be an integer, got '" + *text + "'");
    }
    return value;
  }

  Rational rational(std::string_view key) const {
    const std::string* text = find(key);
    if (!text) throw UsageError("missing required argument '" + std::string(key) + "'");
    try {
      return Rational::parse(*text);
    } catch (const std::exception& e) {
      throw UsageError("argument '" + std::string(key) + "': " + e.what());
    }
  }

  std::vector<Rational> rational_list(std::string_view key) const {
    const std::string* text = find(key);
    if (!text) throw UsageError("missing required argument '" + std::string(key) + "'");
    std::vector<Rational> out;
    std::stringstream in(*text);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        out.push_back(Rational::parse(item));
      } catch (const std::exception& e) {
        throw UsageError("argument '" + std::string(key) + "': " + e.what());
      }
    }
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format '" + name + "'");
}

struct Quantity {
  std::vector<std::string_view> keys;
  std::function<Rational(const KeyValues&)> compute;
};

const std::map<std::string, Quantity>& quantities() {
  static const std::map<std::string, Quantity> table = {
      {"r-stirling", {{"n", "k", "r"}, [](const KeyValues& a) {
                        return Rational(r_stirling1(a.index("n"), a.index("k"), a.index("r")));
                      }}},
      {"stirling1", {{"n", "k"}, [](const KeyValues& a) { return Rational(stirling1(a.index("n"), a.index("k"))); }}},
      {"stirling2", {{"n", "k"}, [](const KeyValues& a) { return Rational(stirling2(a.index("n"), a.index("k"))); }}},
      {"harmonic", {{"j", "k", "r"}, [](const KeyValues& a) {
                      return harmonic({a.index("j"), a.index("k", 1), a.index("r", 0)});
                    }}},
      {"hyperharmonic", {{"n", "r"}, [](const KeyValues& a) { return hyperharmonic(a.index("n"), a.index("r")); }}},
      {"bernoulli", {{"k"}, [](const KeyValues& a) { return bernoulli_number(a.index("k")); }}},
      {"higher-bernoulli",
       {{"k", "i"}, [](const KeyValues& a) { return higher_bernoulli(a.index("k"), a.index("i")); }}},
      {"p-number", {{"i", "j", "r"}, [](const KeyValues& a) {
                      return p_number(a.index("i"), a.index("j"), a.index("r"));
                    }}},
      {"hyper-sum", {{"k", "m", "n"}, [](const KeyValues& a) {
                       return Rational(hyper_sum(a.index("k"), a.index("m"), a.index("n")));
                     }}},
      {"complete-bell", {{"n", "x"}, [](const KeyValues& a) {
                           return complete_bell(a.index("n"), BellArguments{a.rational_list("x")});
                         }}},
      {"kolbig-s", {{"j", "q", "alpha"}, [](const KeyValues& a) {
                      return kolbig_s(a.index("j"), a.index("q"), a.rational("alpha"));
                    }}},
      {"factorial", {{"n"}, [](const KeyValues& a) { return Rational(factorial(a.index("n"))); }}},
      {"binomial", {{"n", "k"}, [](const KeyValues& a) { return Rational(binomial(a.index("n"), a.index("k"))); }}},
  };
  return table;
}

std::string quantity_names() {
  std::string out;
  for (const auto& [name, q] : quantities()) out += (out.empty() ? "" : ", ") + name;
  return out;
}

json arguments_json(const KeyValues& kv) {
  json args = json::object();
  for (const auto& [k, v] : kv.entries()) args[k] = v;
  return args;
}

int cmd_eval(const std::string& name, const KeyValues& kv, Format format, std::ostream& out) {
  const auto it = quantities().find(name);
  if (it == quantities().end()) {
    throw UsageError("unknown quantity '" + name + "' (expected one of " + quantity_names() + ")");
  }
  kv.restrict_to(it->second.keys, name);
  const Rational value = it->second.compute(kv);
  switch (format) {
    case Format::Text: out << value.to_string() << '\n'; break;
    case Format::Json:
      out << json{{"quantity", name}, {"arguments", arguments_json(kv)}, {"value", value.to_string()}}.dump() << '\n';
      break;
    case Format::Csv: out << "quantity,value\n" << name << ',' << value.to_string() << '\n'; break;
  }
  return kExitPass;
}

int cmd_table(const std::string& family_name_text, const KeyValues& kv, Format format, std::ostream& out) {
  kv.restrict_to({"nmax", "r"}, "table");
  TriangleFamily family;
  try {
    family = parse_triangle_family(family_name_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Index nmax = kv.index("nmax");
  const Index r = kv.index("r", 0);
  if (nmax < 0 || r < 0) throw UsageError("table: nmax and r must be nonnegative");
  if (nmax > kMaxTableRows) throw UsageError("table: nmax above " + std::to_string(kMaxTableRows) + " is not supported");
  if (family != TriangleFamily::RStirling1 && kv.find("r")) {
    throw UsageError("table: r applies to r-stirling1 only");
  }
  const Triangle t = make_triangle(family, nmax, r);
  switch (format) {
    case Format::Text: out << triangle_to_delimited(t, '\t'); break;
    case Format::Csv: out << triangle_to_delimited(t, ','); break;
    case Format::Json: out << triangle_to_json(t) << '\n'; break;
  }
  return kExitPass;
}

int cmd_poly(const std::string& family_text, const KeyValues& kv, Format format, std::ostream& out) {
  PolyFamily family;
  try {
    family = parse_poly_family(family_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  PolyFamilyKey key{family, 0, 0};
  if (poly_family_arity(family) == 2) {
    kv.restrict_to({"m", "i", "x"}, family_text);
    key.first = kv.index("m");
    key.second = kv.index("i");
  } else {
    const char* index_name = (family == PolyFamily::Bernoulli || family == PolyFamily::PowerSum) ? "k" : "j";
    kv.restrict_to({index_name, "x"}, family_text);
    key.first = kv.index(index_name);
  }
  const Polynomial p = family_polynomial(key);
  if (kv.find("x")) {
    const Rational value = p.evaluate(kv.rational("x"));
    if (format == Format::Json) {
      out << json{{"family", poly_family_name(family)}, {"arguments", arguments_json(kv)}, {"value", value.to_string()}}
                 .dump()
          << '\n';
    } else {
      out << value.to_string() << '\n';
    }
    return kExitPass;
  }
  switch (format) {
    case Format::Text: out << p.to_string() << '\n'; break;
    case Format::Json:
      out << json{{"family", poly_family_name(family)},
                  {"arguments", arguments_json(kv)},
                  {"coefficients", json::parse(p.to_json())}}
                 .dump()
          << '\n';
      break;
    case Format::Csv:
      out << "degree,coefficient\n";
      for (std::size_t d = 0; d < p.coefficients().size(); ++d) {
        out << d << ',' << p.coefficients()[d].to_string() << '\n';
      }
      break;
  }
  return kExitPass;
}

struct VerifyRequest {
  std::vector<std::string> targets;
  std::string profile = "desk";
  bool with_fixture = false;
  unsigned threads = 1;
};

int cmd_verify(const VerifyRequest& req, Format format, bool verbose, std::ostream& out) {
  if (format == Format::Csv) throw UsageError("verify: csv output is not supported");

  std::vector<std::string> ids;
  Ranges manual;
  bool all = false;
  for (const auto& t : req.targets) {
    if (t == "all") {
      all = true;
    } else if (t.find('=') != std::string::npos) {
      const auto eq = t.find('=');
      const std::string value = t.substr(eq + 1);
      const auto dots = value.find("..");
      try {
        const Index lo = dots == std::string::npos ? 0 : std::stoll(value.substr(0, dots));
        const Index hi = std::stoll(dots == std::string::npos ? value : value.substr(dots + 2));
        manual[t.substr(0, eq)] = ParamRange{lo, hi};
      } catch (const std::logic_error&) {
        throw UsageError("verify: bad range '" + t + "'");
      }
    } else {
      ids.push_back(t);
    }
  }
  if (all && !ids.empty()) throw UsageError("verify: 'all' cannot be combined with identity ids");
  if (!manual.empty() && (all || ids.size() != 1)) {
    throw UsageError("verify: explicit ranges need exactly one identity id");
  }
  if (!all && ids.empty()) throw UsageError("verify: name an identity id or 'all'");

  Registry registry = register_all();
  if (req.with_fixture) registry.add(make_corrupted_fixture());
  for (const auto& id : ids) {
    if (!registry.find(id)) throw UsageError("verify: unknown identity '" + id + "'");
  }

  Profile profile;
  try {
    profile = resolve_profile(req.profile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const VerifyOptions options{req.threads};
  std::vector<VerificationReport> reports;
  if (all) {
    if (req.with_fixture) {
      // The fixture is not in the built-in profiles; give it the default bound.
      profile.overrides.try_emplace(make_corrupted_fixture().id);
    }
    reports = verify_suite(registry, profile, options);
  } else {
    for (const auto& id : ids) {
      const IdentityRecord& rec = *registry.find(id);
      Ranges ranges = resolve_ranges(rec, profile);
      for (const auto& [param_name, range] : manual) ranges[param_name] = range;
      try {
        reports.push_back(verify(rec, ranges, options));
      } catch (const RangeError& e) {
        throw UsageError("verify " + id + ": " + e.what());
      }
    }
  }

  std::size_t pass = 0;
  for (const auto& r : reports) pass += r.status == VerificationStatus::Pass;
  if (format == Format::Json) {
    out << reports_to_json(reports, verbose);
  } else {
    for (const auto& r : reports) out << report_to_text(r, verbose);
    out << pass << '/' << reports.size() << " identities pass (profile " << profile.name << ")\n";
  }
  return pass == reports.size() ? kExitPass : kExitFailure;
}

int cmd_list(Format format, std::ostream& out) {
  const auto records = default_registry().records();
  if (format == Format::Json) {
    json arr = json::array();
    for (const auto* r : records) arr.push_back(json{{"id", r->id}, {"group", r->group}});
    out << arr.dump() << '\n';
  } else {
    const char sep = format == Format::Csv ? ',' : '\t';
    for (const auto* r : records) out << r->id << sep << r->group << '\n';
  }
  return kExitPass;
}

int cmd_audit(Format format, std::ostream& out) {
  if (format == Format::Csv) throw UsageError("audit: csv output is not supported");
  out << (format == Format::Json ? audit_json(default_registry()) : audit_text(default_registry()));
  return kExitPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact r-Stirling numbers, hyperharmonic polynomials and hyper-sums", "hyperstir"};
  app.require_subcommand(1);

  std::string format_name = "text";
  bool verbose = false;
  app.add_option("--format", format_name, "Output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--verbose", verbose, "Include run metadata such as timings");

  std::string name;
  std::vector<std::string> tokens;

  auto* eval = app.add_subcommand("eval", "Evaluate one quantity exactly");
  eval->add_option("quantity", name, "Quantity name")->required();
  eval->add_option("arguments", tokens, "key=value arguments");

  auto* table = app.add_subcommand("table", "Emit a Stirling-type triangle");
  table->add_option("family", name, "stirling1, stirling2 or r-stirling1")->required();
  table->add_option("arguments", tokens, "nmax=N [r=R]");

  auto* poly_cmd = app.add_subcommand("poly", "Print a named polynomial");
  poly_cmd->add_option("family", name, "R, RBar, Q, Hyperharmonic, HyperharmonicShifted, Bernoulli, PowerSum")->required();
  poly_cmd->add_option("arguments", tokens, "indices as key=value, optional x=value to evaluate");

  VerifyRequest verify_req;
  auto* verify_cmd = app.add_subcommand("verify", "Verify registered identities over a range profile");
  verify_cmd->add_option("targets", verify_req.targets, "'all', identity ids, or name=lo..hi ranges for one id");
  verify_cmd->add_option("--profile", verify_req.profile, "smoke, desk, deep or a profile file");
  verify_cmd->add_option("--threads", verify_req.threads, "Worker threads per sweep (0 = hardware)");
  verify_cmd->add_flag("--with-fixture", verify_req.with_fixture, "Also register the deliberately false self-test identity");

  auto* list_cmd = app.add_subcommand("list-identities", "List registered identity ids");
  auto* audit_cmd = app.add_subcommand("audit", "Describe every registered identity");

  // Global options may follow the subcommand.
  for (auto* sub : {eval, table, poly_cmd, verify_cmd, list_cmd, audit_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (*eval) return cmd_eval(name, KeyValues(tokens), format, out);
    if (*table) return cmd_table(name, KeyValues(tokens), format, out);
    if (*poly_cmd) return cmd_poly(name, KeyValues(tokens), format, out);
    if (*verify_cmd) return cmd_verify(verify_req, format, verbose, out);
    if (*list_cmd) return cmd_list(format, out);
    return cmd_audit(format, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hyperstir::cli
