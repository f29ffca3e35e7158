#include "cyccov/combinatorics.hpp"

#include <algorithm>
#include <string>

namespace cyccov {

std::string_view to_string(CriterionKind kind) {
  return kind == CriterionKind::jet ? "jet" : "very";
}

namespace {

void require_positive(Int k, Int l, const char* what) {
  if (k < 1 || l < 1) {
    throw ArgumentError(std::string(what) + ": arguments must be positive, got (" +
                        std::to_string(k) + ", " + std::to_string(l) + ")");
  }
}

void require_degree(Int d) {
  if (d < 2) throw ArgumentError("covering degree must be at least 2, got " + std::to_string(d));
}

}  // namespace

int gamma(Int k, Int l) {
  require_positive(k, l, "gamma");
  return k % l == 0 ? 1 : 0;
}

Int tau(Int k, Int l) {
  require_positive(k, l, "tau");
  Int value = checked_sub(k, k / l);
  value = checked_sub(value, l);
  return checked_add(value, gamma(k, l) + 1);
}

Int sigma(Int k, Int d, Int q) {
  if (k < 0) throw ArgumentError("sigma: k must be non-negative, got " + std::to_string(k));
  require_degree(d);
  if (q < 0 || q > std::min(k, d - 1)) {
    throw DomainError("sigma(" + std::to_string(k) + "," + std::to_string(d) + "," +
                      std::to_string(q) + "): q must lie in 0..min(k,d-1)");
  }
  if (q == 0) return k;
  const Int k1 = checked_add(k, 1);
  const Int top = std::min(d, k1);
  Int best = tau(k1, q + 1);
  for (Int l = q + 2; l <= top; ++l) best = std::max(best, tau(k1, l));
  return checked_sub(best, 1);
}

SigmaTable::SigmaTable(Int d, Int k_max) : d_(d), k_max_(k_max) {
  require_degree(d);
  if (k_max < 0) throw ArgumentError("sigma table: k_max must be non-negative");
  for (Int q = 1; q <= max_q(); ++q) {
    for (Int k = q; k <= k_max; ++k) entries_.emplace(std::pair{q, k}, sigma(k, d, q));
  }
}

Int SigmaTable::max_q() const { return std::min(k_max_, d_ - 1); }

std::optional<Int> SigmaTable::value(Int q, Int k) const {
  auto it = entries_.find({q, k});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

SigmaTable sigma_table(Int d, Int k_max) { return SigmaTable(d, k_max); }

RequiredProfile required_profile(CriterionKind kind, Int k, Int d) {
  if (k < 0) throw ArgumentError("required_profile: k must be non-negative");
  require_degree(d);
  RequiredProfile profile{kind, k, d, {}};
  const Int top = std::min(k, d - 1);
  profile.requirements.reserve(static_cast<std::size_t>(top + 1));
  for (Int q = 0; q <= top; ++q) {
    profile.requirements.push_back(kind == CriterionKind::jet ? k - q : sigma(k, d, q));
  }
  return profile;
}

}  // namespace cyccov
