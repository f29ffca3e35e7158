#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "cyccov/catalog.hpp"
#include "cyccov/local_model.hpp"
#include "cyccov/serialization.hpp"
#include "cyccov/trials.hpp"

namespace cyccov::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const std::string& what) {
  Int value = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) throw UsageError(fmt::format("{}: '{}' is not an integer", what, text));
  return value;
}

std::map<std::string, OutputFormat> format_names() {
  return {{"plain", OutputFormat::plain},
          {"markdown", OutputFormat::markdown},
          {"csv", OutputFormat::csv},
          {"records", OutputFormat::records}};
}

std::string format_name(OutputFormat f) {
  for (const auto& [name, value] : format_names()) {
    if (value == f) return name;
  }
  return "?";
}

void require_format(const RunConfig& config, std::initializer_list<OutputFormat> allowed, const char* command) {
  if (std::find(allowed.begin(), allowed.end(), config.output_format) == allowed.end()) {
    throw UsageError(fmt::format("{} does not support --format {}", command, format_name(config.output_format)));
  }
}

Int param(const RunConfig& config, const std::string& name) {
  auto it = config.parameters.find(name);
  if (it == config.parameters.end()) throw UsageError("missing parameter --" + name);
  return parse_int(it->second, "--" + name);
}

std::string param_text(const RunConfig& config, const std::string& name, std::string fallback = {}) {
  auto it = config.parameters.find(name);
  return it == config.parameters.end() ? fallback : it->second;
}

std::uint64_t env_value(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t value = 0;
  const std::string text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw ArgumentError(fmt::format("{} must be a positive integer, got '{}'", name, text));
  }
  return value;
}

// ---------------------------------------------------------------- commands

int run_sigma_table(const RunConfig& config, std::ostream& out) {
  const Int d = param(config, "d");
  const Int k_max = param(config, "kmax");
  if (d < 2) throw UsageError("--d must be at least 2");
  if (k_max < 0) throw UsageError("--kmax must be non-negative");
  if (k_max > 10'000) throw UsageError("--kmax is limited to 10000");
  out << render_sigma_table(sigma_table(d, k_max), config.output_format);
  return exit_code::success;
}

int report_lemma(const LemmaReport& report, const RunConfig& config, std::ostream& out) {
  out << (config.output_format == OutputFormat::records ? to_record(report) + "\n" : to_text(report));
  return report.passed() ? exit_code::success : exit_code::failure;
}

int run_verify_lemma(const RunConfig& config, std::ostream& out, std::ostream& err) {
  require_format(config, {OutputFormat::plain, OutputFormat::records}, "verify-lemma");
  const std::string mode = param_text(config, "mode");
  try {
    if (mode == "alg") {
      const Int k = param(config, "k");
      const Int ell = param(config, "ell");
      if (ell < 2 || k < ell) throw UsageError("verify-lemma alg needs --ell >= 2 and --k >= --ell");
      return report_lemma(check_lemma_alg(k, ell, config.budget), config, out);
    }
    if (mode == "num") {
      NumBox box{param(config, "max-m"), param(config, "max-K"), param(config, "max-ell"), param(config, "max-q")};
      if (box.max_m < 1 || box.max_K < 1 || box.max_ell < 1 || box.max_q < 1) {
        throw UsageError("verify-lemma num bounds must be positive");
      }
      return report_lemma(check_lemma_num(box, config.budget), config, out);
    }
  } catch (const BudgetExceeded& e) {
    report_lemma(e.partial_report(), config, out);
    err << "budget exhausted: " << e.what() << "\n";
    return exit_code::budget;
  }
  throw UsageError("verify-lemma needs 'alg' or 'num'");
}

void print_explanations(const CriterionVerdict& v, const CoveringScenario& s, const RunConfig& config,
                        std::ostream& out) {
  // The guaranteed order and the first order that fails.
  for (Int k = std::max<Int>(v.k_star, 0); k <= v.k_star + 1; ++k) {
    const OrderCheck check = explain_requirement(v.kind, k, s);
    if (config.output_format == OutputFormat::records) {
      out << to_record(check) << "\n";
    } else {
      out << fmt::format("  k={} {}: {}\n", k, check.satisfied() ? "holds" : "fails", render_order_check(check));
    }
  }
}

int run_criteria(const RunConfig& config, std::ostream& out) {
  require_format(config, {OutputFormat::plain, OutputFormat::records}, "criteria");
  const std::string path = param_text(config, "config");
  if (path.empty()) throw UsageError("criteria needs a scenario file");
  const CoveringScenario s = load_scenario_file(path);
  const bool records = config.output_format == OutputFormat::records;
  if (!records) {
    out << fmt::format("scenario: {}\n", s.label.empty() ? "(unlabelled)" : s.label);
    out << fmt::format("degree: {} ({})\n", s.d, s.branched ? "branched" : "unbranched");
    for (Int q = 0; q < s.d; ++q) {
      const TwistOrders t = s.profile.at(q);
      out << fmt::format("  L-{}M: jet {} very {}\n", q, t.jet, t.very);
    }
  }
  for (CriterionKind kind : {CriterionKind::jet, CriterionKind::very}) {
    const CriterionVerdict v = max_guaranteed_order(kind, s);
    if (records) {
      out << to_record(v, s.label) << "\n";
    } else {
      out << fmt::format("{} k*: {}\n", to_string(kind), v.k_star);
      if (!v.contiguous) out << fmt::format("  warning: feasible orders are not contiguous\n");
    }
    print_explanations(v, s, config, out);
  }
  return exit_code::success;
}

int run_examples(const RunConfig& config, std::ostream& out) {
  const std::string only = param_text(config, "only");
  if (!only.empty()) {
    const auto families = catalog_families();
    if (std::find(families.begin(), families.end(), only) == families.end()) {
      std::string known;
      for (const auto& f : families) known += (known.empty() ? "" : ", ") + f;
      throw UsageError(fmt::format("unknown example family '{}' (known: {})", only, known));
    }
  }
  std::vector<ClaimLine> lines;
  int failed = 0;
  int notes = 0;
  for (const CatalogEntry& entry : default_catalog()) {
    if (!only.empty() && entry.family != only) continue;
    for (const ClaimOutcome& o : evaluate_claims(entry)) {
      if (!o.holds) (o.claim.informational ? notes : failed) += 1;
      lines.push_back({entry.id, o});
    }
  }
  out << render_claims(lines, config.output_format);
  if (config.output_format == OutputFormat::plain) {
    out << fmt::format("claims: {} checked, {} failed, {} informational notes\n", lines.size(), failed, notes);
  }
  return failed == 0 ? exit_code::success : exit_code::failure;
}

std::vector<Int> parse_list(const std::string& text) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_int(text.substr(start, comma - start), "--betas"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_vandermonde(const RunConfig& config, std::ostream& out) {
  const Int d = param(config, "d");
  if (d < 1 || d > 64) throw UsageError("--d must lie in 1..64");
  const std::vector<Int> betas = parse_list(param_text(config, "betas"));
  const Int rhs = param(config, "rhs");
  if (rhs < 0 || rhs > static_cast<Int>(betas.size())) throw UsageError("--rhs must index one of the equations");
  std::vector<CyclotomicNumber> alphas;
  try {
    alphas = vandermonde_solve(static_cast<int>(d), betas, static_cast<int>(rhs));
  } catch (const SingularSystemError& e) {
    throw UsageError(e.what());
  }
  const auto residual = vandermonde_residual(static_cast<int>(d), betas, alphas, static_cast<int>(rhs));
  const bool zero = std::all_of(residual.begin(), residual.end(), [](const auto& r) { return r.is_zero(); });
  if (config.output_format == OutputFormat::records) {
    std::vector<std::string> a;
    for (const auto& x : alphas) a.push_back(x.to_string());
    nlohmann::ordered_json j = {{"record", "vandermonde"}, {"d", d},          {"betas", betas},
                                {"rhs", rhs},              {"alphas", a},     {"residual_zero", zero}};
    out << j.dump() << "\n";
  } else {
    out << fmt::format("field: Q(e), e^{} = 1\n", d);
    for (std::size_t i = 0; i < alphas.size(); ++i) out << fmt::format("alpha_{} = {}\n", i + 1, alphas[i].to_string());
    out << fmt::format("residual: {}\n", zero ? "zero" : "NONZERO");
  }
  return zero ? exit_code::success : exit_code::failure;
}

int run_trials(const RunConfig& config, std::ostream& out) {
  const Int count = param(config, "count");
  const Int seed = param(config, "seed");
  TrialLimits limits;
  limits.max_d = static_cast<int>(param(config, "max-d"));
  limits.max_order = static_cast<int>(param(config, "max-order"));
  if (count < 0) throw UsageError("--count must be non-negative");
  if (limits.max_d < 2 || limits.max_d > 12) throw UsageError("--max-d must lie in 2..12");
  if (limits.max_order < 1 || limits.max_order > 6) throw UsageError("--max-order must lie in 1..6");
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  Int ok = 0;
  for (Int i = 0; i < count; ++i) {
    const Case2Transcript t = run_case2_trial(random_case2_trial(rng, limits));
    if (t.residuals_zero && t.prescriptions_met) ++ok;
    if (config.output_format == OutputFormat::records) out << to_record(t) << "\n";
  }
  if (config.output_format == OutputFormat::plain) {
    out << fmt::format("trials: {}\nexact: {}\nfailed: {}\n", count, ok, count - ok);
  }
  return ok == count ? exit_code::success : exit_code::failure;
}

int run_obstruction(const RunConfig& config, std::ostream& out) {
  const Int d = param(config, "d");
  const Int r = param(config, "r");
  const Int n = param(config, "n");
  if (d < 2 || d > 10) throw UsageError("--d must lie in 2..10");
  if (r < 2) throw UsageError("--r must be at least 2");
  if (n < 2 || n > 3) throw UsageError("--n must be 2 or 3");
  const CoveringScenario s = projective_space_scenario(n, (d - 1) * r, r, d);

  const FieldPtr field = CyclotomicField::of_order(static_cast<int>(d));
  std::vector<std::string> vars;
  for (Int i = 1; i <= n; ++i) vars.push_back("u" + std::to_string(i));
  Exponent e(static_cast<std::size_t>(n), 0);
  e[0] = static_cast<int>(d - 1);
  e[1] = 1;
  // A degree-d jet lives modulo m^{d+1}.
  const int order = static_cast<int>(d + 1);
  const TruncatedSeries jet = TruncatedSeries::monomial(field, vars, order, e, CyclotomicNumber(field, 1));
  const SectionDecomposition sec = case3_construct(static_cast<int>(d), jet, order);
  const bool exact = evaluate_at_ramification_point(sec, vars, order) == jet;
  const auto obstructions = jet_obstructions(sec, s.profile);

  if (config.output_format == OutputFormat::records) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& o : obstructions) list.push_back({{"q", o.q}, {"required", o.required}, {"available", o.available}});
    nlohmann::ordered_json j = {{"record", "obstruction"}, {"scenario", s.label}, {"jet", jet.to_string()},
                                {"reassembly_exact", exact}, {"obstructions", list},
                                {"jet_k_star", max_guaranteed_jet_order(s).k_star}};
    out << j.dump() << "\n";
    return exit_code::success;
  }
  out << fmt::format("scenario: {}\n", s.label);
  out << fmt::format("jet at a ramification point: {} modulo m^{}\n", jet.to_string(), order);
  for (const auto& t : twist_requirements(sec, order)) {
    const std::string comp = sec.component(static_cast<int>(t.q)).to_string();
    if (t.required < 0) {
      out << fmt::format("  s_{} = 0\n", t.q);
    } else {
      out << fmt::format("  s_{} = {}  (needs {}-jets of L-{}M, has {})\n", t.q, comp, t.required, t.q,
                         s.profile.at(t.q).jet);
    }
  }
  out << fmt::format("reassembly: {}\n", exact ? "exact" : "MISMATCH");
  for (const auto& o : obstructions) {
    out << fmt::format("obstruction: L-{}M gives {}-jets, component needs {}\n", o.q, o.available, o.required);
  }
  if (obstructions.empty()) out << "obstruction: none\n";
  out << fmt::format("jet k*: {}\n", max_guaranteed_jet_order(s).k_star);
  return exit_code::success;
}

int run_local_model(const RunConfig& config, std::ostream& out) {
  require_format(config, {OutputFormat::plain, OutputFormat::records}, "local-model");
  const std::string mode = param_text(config, "mode");
  if (mode == "vandermonde") return run_vandermonde(config, out);
  if (mode == "trials") return run_trials(config, out);
  if (mode == "obstruction") return run_obstruction(config, out);
  throw UsageError("local-model needs 'vandermonde', 'trials' or 'obstruction'");
}

}  // namespace

SearchBudget budget_from_environment() {
  SearchBudget budget;
  budget.max_instances = env_value("CYCCOV_MAX_INSTANCES", budget.max_instances);
  budget.staircase_cap = static_cast<int>(env_value("CYCCOV_STAIRCASE_CAP", static_cast<std::uint64_t>(budget.staircase_cap)));
  return budget;
}

std::variant<RunConfig, int> parse_arguments(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positivity criteria for pullbacks along cyclic coverings", "cyccov"};
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::string format = "plain";
  const auto formats = std::vector<std::string>{"plain", "markdown", "csv", "records"};

  // Every option lands in `values` under its long name.
  auto opt = [&](CLI::App* sub, const std::string& name, const std::string& help, bool required = true,
                 std::string fallback = {}) {
    auto* o = sub->add_option_function<std::string>(
        "--" + name, [&values, name](const std::string& v) { values[name] = v; }, help);
    if (required) {
      o->required();
    } else if (!fallback.empty()) {
      values[name] = fallback;
      o->default_str(fallback);
    }
    return o;
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "plain, markdown, csv or records")->check(CLI::IsMember(formats));
  };

  auto* sigma = app.add_subcommand("sigma-table", "Print sigma(k,d,q) for 1 <= q <= min(k,d-1), 0 <= k <= kmax");
  opt(sigma, "d", "covering degree (>= 2)");
  opt(sigma, "kmax", "largest k");
  add_format(sigma);

  auto* verify = app.add_subcommand("verify-lemma", "Exhaustively check one of the combinatorial lemmas");
  verify->require_subcommand(1);
  std::string budget_text;
  auto* alg = verify->add_subcommand("alg", "Staircase bound on the colength of ideal intersections");
  opt(alg, "k", "total colength");
  opt(alg, "ell", "number of ideals (>= 2)");
  auto* num = verify->add_subcommand("num", "Integer inequality between sums of tau values");
  opt(num, "max-m", "largest r", false, "4");
  opt(num, "max-K", "largest K_i", false, "10");
  opt(num, "max-ell", "largest l_i", false, "6");
  opt(num, "max-q", "largest q", false, "5");
  for (auto* sub : {alg, num}) {
    sub->add_option("--budget", budget_text, "instance budget (default from CYCCOV_MAX_INSTANCES or 10^7)");
    add_format(sub);
  }

  auto* criteria = app.add_subcommand("criteria", "Evaluate both criteria on a scenario file");
  criteria->add_option_function<std::string>("config", [&values](const std::string& v) { values["config"] = v; },
                                             "YAML scenario file")
      ->required();
  add_format(criteria);

  auto* examples = app.add_subcommand("examples", "Check the example geometries against their claims");
  opt(examples, "only", "restrict to one family", false);
  add_format(examples);

  auto* local = app.add_subcommand("local-model", "Exact constructions on toy local models");
  local->require_subcommand(1);
  auto* vdm = local->add_subcommand("vandermonde", "Solve the fiber-separation system");
  opt(vdm, "d", "root of unity order");
  opt(vdm, "betas", "comma-separated orbit indices b_2,...,b_l", false, "");
  opt(vdm, "rhs", "unit right-hand side index (0-based)", false, "0");
  auto* trials = local->add_subcommand("trials", "Randomized fiber-separation trials");
  opt(trials, "count", "number of trials", false, "1000");
  opt(trials, "seed", "random seed", false, "1");
  opt(trials, "max-d", "largest covering degree", false, "6");
  opt(trials, "max-order", "largest jet order", false, "4");
  auto* obstruction = local->add_subcommand("obstruction", "Ramified jet u_1^{d-1} u_2 on P^n with L = O((d-1)r)");
  opt(obstruction, "d", "covering degree");
  opt(obstruction, "r", "degree of M", false, "2");
  opt(obstruction, "n", "dimension (2 or 3)", false, "2");
  for (auto* sub : {vdm, trials, obstruction}) add_format(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::success : exit_code::usage;
  }

  RunConfig config;
  config.parameters = values;
  config.output_format = format_names().at(format);
  try {
    config.budget = budget_from_environment();
    if (!budget_text.empty()) {
      const Int b = parse_int(budget_text, "--budget");
      if (b < 1) throw UsageError("--budget must be positive");
      config.budget.max_instances = static_cast<std::uint64_t>(b);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  }

  if (sigma->parsed()) {
    config.command = Command::sigma_table;
  } else if (verify->parsed()) {
    config.command = Command::verify_lemma;
    config.parameters["mode"] = alg->parsed() ? "alg" : "num";
  } else if (criteria->parsed()) {
    config.command = Command::criteria;
  } else if (examples->parsed()) {
    config.command = Command::examples;
  } else {
    config.command = Command::local_model;
    config.parameters["mode"] = vdm->parsed() ? "vandermonde" : trials->parsed() ? "trials" : "obstruction";
  }
  return config;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::sigma_table: return run_sigma_table(config, out);
      case Command::verify_lemma: return run_verify_lemma(config, out, err);
      case Command::criteria: return run_criteria(config, out);
      case Command::examples: return run_examples(config, out);
      case Command::local_model: return run_local_model(config, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::budget;
  }
  return exit_code::usage;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  auto parsed = parse_arguments(args, out, err);
  if (auto* code = std::get_if<int>(&parsed)) return *code;
  return execute(std::get<RunConfig>(parsed), out, err);
}

}  // namespace cyccov::cli
