#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cyccov/checked.hpp"

namespace cyccov {

/// The two positivity notions the criteria are stated for.
enum class CriterionKind { jet, very };

std::string_view to_string(CriterionKind kind);

/// 1 if l divides k, 0 otherwise. Both arguments must be positive.
int gamma(Int k, Int l);

/// k - floor(k/l) - l + gamma(k,l) + 1. Not clamped: large l gives values <= 0.
Int tau(Int k, Int l);

/// Required very-ampleness order of L - qM for pi^*L to be k-very ample on a
/// degree-d cyclic covering. sigma(k,d,0) = k; for q >= 1 it is
/// max{ tau(k+1,l) : q+1 <= l <= min(d,k+1) } - 1.
///
/// Defined only for 0 <= q <= min(k, d-1); anything else throws DomainError.
Int sigma(Int k, Int d, Int q);

/// sigma(k,d,q) for every 1 <= q <= min(k,d-1), 0 <= k <= k_max.
class SigmaTable {
 public:
  SigmaTable(Int d, Int k_max);

  Int degree() const { return d_; }
  Int k_max() const { return k_max_; }

  /// Largest populated q, i.e. min(k_max, d-1). Zero when the table is empty.
  Int max_q() const;

  /// Value at (q,k), or nullopt when the pair is outside 1 <= q <= min(k,d-1).
  std::optional<Int> value(Int q, Int k) const;

  const std::map<std::pair<Int, Int>, Int>& entries() const { return entries_; }

 private:
  Int d_;
  Int k_max_;
  std::map<std::pair<Int, Int>, Int> entries_;  // (q,k) -> sigma
};

SigmaTable sigma_table(Int d, Int k_max);

/// Orders the twists L - qM must have, q = 0..min(k,d-1).
struct RequiredProfile {
  CriterionKind kind;
  Int k;
  Int d;
  std::vector<Int> requirements;
};

RequiredProfile required_profile(CriterionKind kind, Int k, Int d);

}  // namespace cyccov
