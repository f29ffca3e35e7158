#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyccov/checked.hpp"
#include "cyccov/combinatorics.hpp"

namespace cyccov {

/// Best known orders of one twist L - qM. -1: no guarantee; 0: globally
/// generated; 1: very ample.
struct TwistOrders {
  Int jet = -1;
  Int very = -1;

  friend bool operator==(const TwistOrders&, const TwistOrders&) = default;
};

/// q -> TwistOrders. Unset twists read as (-1, -1).
class PositivityProfile {
 public:
  PositivityProfile() = default;
  explicit PositivityProfile(std::string label) : label_(std::move(label)) {}

  /// Throws ArgumentError for q < 0 or an order below -1.
  void set(Int q, TwistOrders orders);
  TwistOrders at(Int q) const;

  /// max(jet, very): k-jet ampleness implies k-very ampleness.
  Int effective_very(Int q) const;

  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const std::map<Int, TwistOrders>& entries() const { return entries_; }

 private:
  std::map<Int, TwistOrders> entries_;
  std::string label_;
};

struct CoveringScenario {
  Int d = 2;
  bool branched = true;
  PositivityProfile profile;
  std::string label;

  /// Throws ArgumentError unless d >= 2.
  void validate() const;
};

CoveringScenario make_scenario(Int d, bool branched, PositivityProfile profile, std::string label);

struct RequirementCheck {
  Int q;
  Int required;
  Int available;
  bool satisfied;
};

/// Requirements of one order k against the profile.
struct OrderCheck {
  CriterionKind kind;
  Int k;
  std::vector<RequirementCheck> checks;

  bool satisfied() const;
};

struct CriterionVerdict {
  CriterionKind kind;
  /// Largest guaranteed order; -1 when even k = 0 fails.
  Int k_star = -1;
  /// Every k from 0 to the scan bound.
  std::vector<OrderCheck> per_k_detail;
  std::vector<Int> feasible;
  /// False if the feasible set has a gap below k_star.
  bool contiguous = true;
};

/// Per-q comparison of the order-k requirements (k - q for jets, sigma(k,d,q)
/// for very ampleness) with what the profile provides.
OrderCheck explain_requirement(CriterionKind kind, Int k, const CoveringScenario& scenario);

/// Largest k with jet(q) >= k - q for all 0 <= q <= min(k, d-1).
CriterionVerdict max_guaranteed_jet_order(const CoveringScenario& scenario);

/// Largest k with effective_very(q) >= sigma(k,d,q) for all 0 <= q <= min(k, d-1).
/// The whole range 0..effective_very(0) is scanned and reported.
CriterionVerdict max_guaranteed_very_order(const CoveringScenario& scenario);

CriterionVerdict max_guaranteed_order(CriterionKind kind, const CoveringScenario& scenario);

}  // namespace cyccov
