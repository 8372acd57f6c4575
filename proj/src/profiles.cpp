#include <charconv>
#include <fstream>
#include <sstream>

#include "hyperstir/registry.hpp"

namespace hyperstir {

namespace {

using Overrides = std::map<std::string, std::map<std::string, ParamBound>>;

void set_all(Overrides& o, const std::string& id, std::initializer_list<std::pair<const char*, Index>> bounds) {
  for (const auto& [name, hi] : bounds) o[id][name] = ParamBound{std::nullopt, hi};
}

// Caps every parameter of every polynomial identity at `hi`, keeping
// explicit overrides.
void cap_polynomial_records(Overrides& o, Index hi) {
  for (const IdentityRecord* rec : default_registry().records()) {
    if (rec->comparison != Comparison::Polynomial) continue;
    for (const Parameter& p : rec->parameters) {
      if (!o[rec->id].contains(p.name)) o[rec->id][p.name] = ParamBound{std::nullopt, hi};
    }
  }
}

Profile smoke() {
  Profile p{"smoke", 4, {}};
  set_all(p.overrides, "P-LIST", {{"s", 7}});
  set_all(p.overrides, "CONV-52", {{"m", 4}, {"i", 3}, {"j", 3}, {"r", 2}, {"s", 2}});
  return p;
}

Profile desk() {
  Profile p{"desk", 8, {}};
  auto& o = p.overrides;
  set_all(o, "PROP-4", {{"m", 10}, {"i", 10}, {"n", 8}});
  for (const char* id : {"HS-KARGIN", "HS-CERE", "HS-INTRO"}) set_all(o, id, {{"k", 6}, {"m", 5}, {"n", 8}});
  set_all(o, "REM2-N1", {{"m", 12}});
  set_all(o, "REM2-RECUR", {{"m", 8}, {"n", 6}});
  set_all(o, "KOLBIG", {{"j", 8}, {"q", 8}});
  set_all(o, "KOLBIG-INT", {{"j", 8}, {"q", 8}, {"r", 5}});
  set_all(o, "MYRES2-17", {{"i", 10}, {"j", 10}, {"r", 5}});
  for (const char* id : {"EGF-RSTIRLING", "EGF-WANG"}) set_all(o, id, {{"i", 6}, {"r", 4}, {"j", 11}});
  for (const char* id : {"EGF-LOG", "EGF-LOG-P"}) set_all(o, id, {{"i", 6}, {"j", 11}});
  set_all(o, "MACLAURIN-LOG", {{"j", 11}});
  for (const char* id : {"HB-KIM", "HB-SRIVASTAVA"}) set_all(o, id, {{"k", 10}, {"i", 5}});
  set_all(o, "HB-ORDER1", {{"k", 10}});
  set_all(o, "P-LIST", {{"s", 7}});
  set_all(o, "CONV-52", {{"m", 6}, {"i", 6}, {"j", 6}, {"r", 4}, {"s", 4}});
  cap_polynomial_records(o, 10);
  return p;
}

Profile deep() {
  Profile p{"deep", 16, {}};
  auto& o = p.overrides;
  set_all(o, "P-LIST", {{"s", 15}});
  set_all(o, "CONV-52", {{"m", 9}, {"i", 9}, {"j", 9}, {"r", 6}, {"s", 6}});
  for (const char* id : {"FIN1", "FIN2", "FIN3"}) set_all(o, id, {{"l", 12}, {"q", 8}, {"r", 8}, {"n", 12}});
  for (const char* id : {"WANG-WA1", "WANG-WA12"}) set_all(o, id, {{"m", 12}, {"i", 12}, {"r", 8}, {"s", 8}});
  for (const char* id : {"IT6", "IT7"}) set_all(o, id, {{"m", 12}, {"i", 8}, {"r", 8}});
  cap_polynomial_records(o, 14);
  return p;
}

Index parse_index(std::string_view text, const std::string& context) {
  Index value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument(context + ": expected an integer, got '" + std::string(text) + "'");
  }
  return value;
}

ParamBound parse_bound(std::string_view text, const std::string& context) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) return ParamBound{std::nullopt, parse_index(text, context)};
  return ParamBound{parse_index(text.substr(0, dots), context), parse_index(text.substr(dots + 2), context)};
}

}  // namespace

Profile builtin_profile(const std::string& name) {
  if (name == "smoke") return smoke();
  if (name == "desk") return desk();
  if (name == "deep") return deep();
  throw std::invalid_argument("unknown profile '" + name + "' (expected smoke, desk or deep)");
}

Profile parse_profile(const std::string& text, const std::string& name) {
  Profile profile{name, std::nullopt, {}};
  std::istringstream lines(text);
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string head;
    if (!(words >> head)) continue;
    const std::string context = name + ":" + std::to_string(line_no);
    if (head == "default") {
      std::string value, extra;
      if (!(words >> value) || (words >> extra)) throw std::invalid_argument(context + ": expected 'default N'");
      profile.default_max = parse_index(value, context);
      continue;
    }
    auto& bounds = profile.overrides[head];
    std::string token;
    while (words >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument(context + ": expected name=value, got '" + token + "'");
      }
      bounds[token.substr(0, eq)] = parse_bound(std::string_view(token).substr(eq + 1), context);
    }
  }
  return profile;
}

Profile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open profile '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_profile(buffer.str(), path);
}

Profile resolve_profile(const std::string& name_or_path) {
  if (name_or_path == "smoke" || name_or_path == "desk" || name_or_path == "deep") {
    return builtin_profile(name_or_path);
  }
  return load_profile(name_or_path);
}

}  // namespace hyperstir
