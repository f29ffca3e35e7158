#include "cyccov/serialization.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace cyccov {

using json = nlohmann::ordered_json;

std::string_view to_string(LemmaId id) { return id == LemmaId::alg ? "alg" : "num"; }

namespace {

json optional_int(const std::optional<Int>& v) { return v ? json(*v) : json(nullptr); }

json box_json(const LemmaReport& report) {
  json box = json::object();
  for (const auto& r : report.parameter_box) box[r.name] = json::array({r.lo, r.hi});
  return box;
}

json check_json(const OrderCheck& check) {
  json per_q = json::array();
  for (const auto& c : check.checks) {
    per_q.push_back({{"q", c.q}, {"required", c.required}, {"available", c.available}, {"satisfied", c.satisfied}});
  }
  return {{"kind", to_string(check.kind)}, {"k", check.k}, {"satisfied", check.satisfied()}, {"requirements", per_q}};
}

json strings(const std::vector<CyclotomicNumber>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

}  // namespace

std::string to_text(const LemmaReport& report) {
  std::string out;
  out += fmt::format("lemma: {}\n", to_string(report.lemma_id));
  for (const auto& r : report.parameter_box) out += fmt::format("range {}: {}..{}\n", r.name, r.lo, r.hi);
  out += fmt::format("instances_checked: {}\n", report.instances_checked);
  out += fmt::format("max_slack: {}\n", report.max_slack ? std::to_string(*report.max_slack) : "none");
  if (report.bound) out += fmt::format("bound: {}\n", *report.bound);
  if (report.observed_max) out += fmt::format("observed_max: {}\n", *report.observed_max);
  if (auto attained = report.bound_attained()) out += fmt::format("bound_attained: {}\n", *attained ? "yes" : "no");
  out += fmt::format("complete: {}\n", report.complete ? "yes" : "no");
  out += fmt::format("counterexamples: {}\n", report.counterexamples.size());
  for (const auto& c : report.counterexamples) out += fmt::format("counterexample: {}\n", c);
  if (!report.note.empty()) out += fmt::format("note: {}\n", report.note);
  out += fmt::format("status: {}\n", report.passed() ? "pass" : (report.complete ? "fail" : "incomplete"));
  return out;
}

std::string to_record(const LemmaReport& report) {
  json j = {{"record", "lemma_report"},
            {"lemma", to_string(report.lemma_id)},
            {"box", box_json(report)},
            {"instances_checked", report.instances_checked},
            {"max_slack", optional_int(report.max_slack)},
            {"bound", optional_int(report.bound)},
            {"observed_max", optional_int(report.observed_max)},
            {"complete", report.complete},
            {"counterexamples", report.counterexamples},
            {"note", report.note},
            {"passed", report.passed()}};
  return j.dump();
}

std::string to_record(const CriterionVerdict& verdict, const std::string& scenario_label) {
  json j = {{"record", "verdict"},
            {"scenario", scenario_label},
            {"kind", to_string(verdict.kind)},
            {"k_star", verdict.k_star},
            {"feasible", verdict.feasible},
            {"contiguous", verdict.contiguous}};
  return j.dump();
}

std::string to_record(const OrderCheck& check) {
  json j = {{"record", "requirement"}};
  j.update(check_json(check));
  return j.dump();
}

std::string to_record(const Case2Transcript& t) {
  json jets = json::array();
  for (const auto& jet : t.trial.jets) jets.push_back(jet.to_string());
  json alphas = json::array();
  for (const auto& a : t.alphas) alphas.push_back(strings(a));
  json residuals = json::array();
  for (const auto& r : t.residuals) residuals.push_back(strings(r));
  json components = json::array();
  for (const auto& c : t.section.components()) components.push_back(c.to_string());
  json achieved = json::array();
  for (const auto& a : t.achieved) achieved.push_back(a.to_string());
  json j = {{"record", "case2_trial"},
            {"d", t.trial.d},
            {"betas", t.trial.betas},
            {"orders", t.trial.orders},
            {"jets", jets},
            {"alphas", alphas},
            {"residuals", residuals},
            {"components", components},
            {"achieved", achieved},
            {"residuals_zero", t.residuals_zero},
            {"prescriptions_met", t.prescriptions_met}};
  return j.dump();
}

}  // namespace cyccov
