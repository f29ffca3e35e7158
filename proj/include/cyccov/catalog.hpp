#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cyccov/criteria.hpp"

namespace cyccov {

/// P^n with L = O(a), M = O(r), covering branched over a smooth member of |dM|.
/// O(m) is m-jet ample for m >= 0, so L - qM = O(a - qr) has both orders a - qr.
CoveringScenario projective_space_scenario(Int n, Int a, Int r, Int d);

/// Double plane branched over a smooth quartic, L = O(k), M = O(2).
CoveringScenario geiser_scenario(Int k);

/// Double cover of the Hirzebruch surface F_2 branched along 2(2D + 3f),
/// L = aD + bf. aD + bf is k-jet (equivalently k-very) ample iff
/// a >= k and b - 2a >= k.
CoveringScenario hirzebruch2_scenario(Int a, Int b);

/// Unbranched cyclic cover of a principally polarized abelian variety by a
/// d-torsion point, L = m·Theta. All torsion twists of mΘ are (m-2)-jet ample.
CoveringScenario abelian_torsion_scenario(Int m, Int d);

enum class Comparison { eq, ge, le };

std::string_view to_string(Comparison c);

enum class ClaimSource { literature, derived };

struct ExpectedClaim {
  CriterionKind kind;
  Comparison comparison;
  Int value;
  ClaimSource source;
  std::string statement;
  /// Reported, never counted as a failure.
  bool informational = false;
};

using Parameters = std::map<std::string, Int>;

struct CatalogEntry {
  std::string id;
  std::string family;
  Parameters parameters;
  std::function<CoveringScenario(const Parameters&)> scenario_builder;
  std::vector<ExpectedClaim> expected_claims;
  std::string annotation;

  CoveringScenario scenario() const { return scenario_builder(parameters); }
};

struct ClaimOutcome {
  ExpectedClaim claim;
  Int observed;
  bool holds;
};

std::vector<ClaimOutcome> evaluate_claims(const CatalogEntry& entry);

/// The example geometries with their claims, in a fixed order.
std::vector<CatalogEntry> default_catalog();

/// Family names in catalog order, without duplicates.
std::vector<std::string> catalog_families();

}  // namespace cyccov
