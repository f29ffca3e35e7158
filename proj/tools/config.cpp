#include "config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "cyccov/catalog.hpp"

namespace cyccov::cli {

ConfigError::ConfigError(const std::string& source, int line, int column, const std::string& field,
                         const std::string& problem)
    : std::runtime_error(fmt::format("{}:{}:{}: {}: {}", source, line, column, field, problem)),
      line_(line),
      field_(field) {}

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& problem) const {
    const YAML::Mark mark = node.Mark();
    const int line = mark.line >= 0 ? mark.line + 1 : 0;
    const int column = mark.column >= 0 ? mark.column + 1 : 0;
    throw ConfigError(source_, line, column, field, problem);
  }

  Int integer(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a decimal integer");
    const std::string& s = node.Scalar();
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (begin != end && *begin == '+') ++begin;
    Int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) fail(node, field, "integer out of range");
    if (ec != std::errc() || ptr != end || begin == end) fail(node, field, "expected a decimal integer, got '" + s + "'");
    return value;
  }

  bool boolean(const YAML::Node& node, const std::string& field) const {
    if (node.IsScalar()) {
      if (node.Scalar() == "true") return true;
      if (node.Scalar() == "false") return false;
    }
    fail(node, field, "expected true or false");
  }

  std::string text(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a string");
    return node.Scalar();
  }

  void only_keys(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& where) const {
    if (!map.IsMap()) fail(map, where, "expected a mapping");
    for (const auto& kv : map) {
      const std::string key = kv.first.Scalar();
      if (!allowed.contains(key)) fail(kv.first, where.empty() ? key : where + "." + key, "unknown key");
    }
  }

  const std::string& source() const { return source_; }

 private:
  std::string source_;
};

struct FamilySpec {
  std::vector<std::string> parameters;
  CoveringScenario (*build)(const Parameters&);
};

const std::map<std::string, FamilySpec>& families() {
  static const std::map<std::string, FamilySpec> table = {
      {"projective-space",
       {{"n", "a", "r", "d"},
        [](const Parameters& p) { return projective_space_scenario(p.at("n"), p.at("a"), p.at("r"), p.at("d")); }}},
      {"geiser", {{"k"}, [](const Parameters& p) { return geiser_scenario(p.at("k")); }}},
      {"bertini", {{"a", "b"}, [](const Parameters& p) { return hirzebruch2_scenario(p.at("a"), p.at("b")); }}},
      {"abelian-torsion",
       {{"m", "d"}, [](const Parameters& p) { return abelian_torsion_scenario(p.at("m"), p.at("d")); }}},
  };
  return table;
}

CoveringScenario from_family(const Reader& r, const YAML::Node& root) {
  const YAML::Node family_node = root["family"];
  const std::string family = r.text(family_node, "family");
  auto it = families().find(family);
  if (it == families().end()) {
    std::string known;
    for (const auto& [name, spec] : families()) known += (known.empty() ? "" : ", ") + name;
    r.fail(family_node, "family", "unknown family '" + family + "' (known: " + known + ")");
  }
  const YAML::Node params = root["parameters"];
  if (!params) r.fail(root, "parameters", "missing");
  const std::set<std::string> allowed(it->second.parameters.begin(), it->second.parameters.end());
  r.only_keys(params, allowed, "parameters");
  Parameters values;
  for (const auto& name : it->second.parameters) {
    const YAML::Node v = params[name];
    if (!v) r.fail(params, "parameters." + name, "missing");
    values[name] = r.integer(v, "parameters." + name);
  }
  try {
    CoveringScenario s = it->second.build(values);
    if (root["label"]) s.label = r.text(root["label"], "label");
    return s;
  } catch (const ArgumentError& e) {
    r.fail(params, "parameters", e.what());
  }
}

CoveringScenario from_profile(const Reader& r, const YAML::Node& root) {
  const YAML::Node d_node = root["d"];
  if (!d_node) r.fail(root, "d", "missing");
  const Int d = r.integer(d_node, "d");
  if (d < 2) r.fail(d_node, "d", "covering degree must be at least 2");
  const bool branched = root["branched"] ? r.boolean(root["branched"], "branched") : true;
  const std::string label = root["label"] ? r.text(root["label"], "label") : "";

  const YAML::Node list = root["profile"];
  if (!list) r.fail(root, "profile", "missing");
  if (!list.IsSequence()) r.fail(list, "profile", "expected a list of twists");
  PositivityProfile profile(label);
  std::set<Int> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const YAML::Node entry = list[i];
    const std::string where = fmt::format("profile[{}]", i);
    r.only_keys(entry, {"q", "jet", "very"}, where);
    if (!entry["q"]) r.fail(entry, where + ".q", "missing");
    const Int q = r.integer(entry["q"], where + ".q");
    if (q < 0 || q >= d) r.fail(entry["q"], where + ".q", fmt::format("twist index must lie in 0..{}", d - 1));
    if (!seen.insert(q).second) r.fail(entry["q"], where + ".q", fmt::format("twist {} listed twice", q));
    TwistOrders orders;
    if (entry["jet"]) orders.jet = r.integer(entry["jet"], where + ".jet");
    if (entry["very"]) orders.very = r.integer(entry["very"], where + ".very");
    if (orders.jet < -1) r.fail(entry["jet"], where + ".jet", "orders are >= -1");
    if (orders.very < -1) r.fail(entry["very"], where + ".very", "orders are >= -1");
    profile.set(q, orders);
  }
  return make_scenario(d, branched, std::move(profile), label);
}

}  // namespace

CoveringScenario parse_scenario(const std::string& text, const std::string& source) {
  Reader r(source);
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source, e.mark.line + 1, e.mark.column + 1, "<document>", e.msg);
  }
  if (!root.IsMap()) throw ConfigError(source, 1, 1, "<document>", "expected a mapping at top level");
  r.only_keys(root, {"schema_version", "label", "d", "branched", "profile", "family", "parameters"}, "");

  const YAML::Node version = root["schema_version"];
  if (!version) r.fail(root, "schema_version", "missing");
  if (r.integer(version, "schema_version") != kSchemaVersion) {
    r.fail(version, "schema_version", fmt::format("unsupported version (expected {})", kSchemaVersion));
  }

  if (root["family"]) {
    for (const char* key : {"d", "branched", "profile"}) {
      if (root[key]) r.fail(root[key], key, "not allowed together with 'family'");
    }
    return from_family(r, root);
  }
  if (root["parameters"]) r.fail(root["parameters"], "parameters", "only allowed together with 'family'");
  return from_profile(r, root);
}

CoveringScenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, 0, "<file>", "cannot open");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), path);
}

}  // namespace cyccov::cli
