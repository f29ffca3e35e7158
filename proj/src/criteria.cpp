#include "cyccov/criteria.hpp"

#include <algorithm>
#include <string>

namespace cyccov {

void PositivityProfile::set(Int q, TwistOrders orders) {
  if (q < 0) throw ArgumentError("profile twist index must be non-negative, got " + std::to_string(q));
  if (orders.jet < -1 || orders.very < -1) {
    throw ArgumentError("profile orders must be >= -1 at q = " + std::to_string(q));
  }
  entries_[q] = orders;
}

TwistOrders PositivityProfile::at(Int q) const {
  auto it = entries_.find(q);
  return it == entries_.end() ? TwistOrders{} : it->second;
}

Int PositivityProfile::effective_very(Int q) const {
  const TwistOrders t = at(q);
  return std::max(t.jet, t.very);
}

void CoveringScenario::validate() const {
  if (d < 2) throw ArgumentError("covering degree must be at least 2, got " + std::to_string(d));
}

CoveringScenario make_scenario(Int d, bool branched, PositivityProfile profile, std::string label) {
  CoveringScenario s{d, branched, std::move(profile), std::move(label)};
  s.validate();
  return s;
}

bool OrderCheck::satisfied() const {
  return std::all_of(checks.begin(), checks.end(), [](const RequirementCheck& c) { return c.satisfied; });
}

OrderCheck explain_requirement(CriterionKind kind, Int k, const CoveringScenario& scenario) {
  scenario.validate();
  const RequiredProfile required = required_profile(kind, k, scenario.d);
  OrderCheck out{kind, k, {}};
  out.checks.reserve(required.requirements.size());
  for (std::size_t i = 0; i < required.requirements.size(); ++i) {
    const Int q = static_cast<Int>(i);
    const Int available =
        kind == CriterionKind::jet ? scenario.profile.at(q).jet : scenario.profile.effective_very(q);
    const Int need = required.requirements[i];
    out.checks.push_back({q, need, available, available >= need});
  }
  return out;
}

namespace {

CriterionVerdict scan(CriterionKind kind, const CoveringScenario& scenario, Int bound) {
  CriterionVerdict verdict{kind, -1, {}, {}, true};
  for (Int k = 0; k <= bound; ++k) {
    verdict.per_k_detail.push_back(explain_requirement(kind, k, scenario));
    if (verdict.per_k_detail.back().satisfied()) verdict.feasible.push_back(k);
  }
  if (!verdict.feasible.empty()) {
    verdict.k_star = verdict.feasible.back();
    verdict.contiguous = verdict.feasible.size() == static_cast<std::size_t>(verdict.k_star + 1);
  }
  return verdict;
}

}  // namespace

CriterionVerdict max_guaranteed_jet_order(const CoveringScenario& scenario) {
  scenario.validate();
  // No k above jet(0) can meet the q = 0 requirement.
  return scan(CriterionKind::jet, scenario, scenario.profile.at(0).jet);
}

CriterionVerdict max_guaranteed_very_order(const CoveringScenario& scenario) {
  scenario.validate();
  return scan(CriterionKind::very, scenario, scenario.profile.effective_very(0));
}

CriterionVerdict max_guaranteed_order(CriterionKind kind, const CoveringScenario& scenario) {
  return kind == CriterionKind::jet ? max_guaranteed_jet_order(scenario) : max_guaranteed_very_order(scenario);
}

}  // namespace cyccov
