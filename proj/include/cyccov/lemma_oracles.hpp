#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyccov/checked.hpp"
#include "cyccov/errors.hpp"

namespace cyccov {

/// Lattice point (i, j), standing for the monomial x^i y^j.
using Cell = std::pair<int, int>;

/// Downward-closed finite set of lattice points: the standard monomials of a
/// monomial ideal in k[[x,y]]. The number of cells is the colength of the ideal.
class Staircase {
 public:
  /// Builds the staircase whose row j has `rows[j]` cells. Rows must be
  /// non-increasing and positive.
  static Staircase from_rows(std::span<const int> rows);

  /// Validates downward closure; throws ArgumentError otherwise.
  static Staircase from_cells(std::vector<Cell> cells);

  std::size_t colength() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }  // sorted
  bool contains(Cell c) const;

  friend bool operator==(const Staircase&, const Staircase&) = default;

 private:
  explicit Staircase(std::vector<Cell> sorted_cells) : cells_(std::move(sorted_cells)) {}

  std::vector<Cell> cells_;
};

struct SearchBudget {
  std::uint64_t max_instances = 10'000'000;
  int staircase_cap = 12;  // enumerate_staircases refuses colength >= cap
};

/// Every staircase with the given number of cells; one per integer partition.
std::vector<Staircase> enumerate_staircases(int colength, int cap = SearchBudget{}.staircase_cap);

/// Colength of I_1 ∩ ... ∩ I_n for monomial ideals: the size of the union of
/// their staircases.
std::size_t intersection_colength(std::span<const Staircase> staircases);

enum class LemmaId { alg, num };

struct ParameterRange {
  std::string name;
  Int lo;
  Int hi;
};

struct LemmaReport {
  LemmaId lemma_id = LemmaId::alg;
  std::vector<ParameterRange> parameter_box;
  std::uint64_t instances_checked = 0;
  /// Minimum of (bound - observed) over all checked instances.
  std::optional<Int> max_slack;
  std::vector<std::string> counterexamples;
  bool complete = true;
  std::string note;

  // Staircase lemma only.
  std::optional<Int> observed_max;
  std::optional<Int> bound;

  bool passed() const { return complete && counterexamples.empty(); }
  std::optional<bool> bound_attained() const;
};

/// Thrown when a search would exceed its budget; carries what was checked.
class BudgetExceeded : public ResourceError {
 public:
  BudgetExceeded(const std::string& what, LemmaReport partial)
      : ResourceError(what), partial_(std::move(partial)) {}
  const LemmaReport& partial_report() const { return partial_; }

 private:
  LemmaReport partial_;
};

/// Exhaustive check of the staircase-length bound: over all tuples
/// (I_1,...,I_l) of monomial ideals in two variables with total colength k and
/// I_1 of maximal colength, length O/(I_2 ∩ ... ∩ I_l) <= tau(k,l).
///
/// Colength tuples are enumerated non-increasing (the union is symmetric in
/// I_2..I_l), every staircase is tried in every slot.
LemmaReport check_lemma_alg(Int k, Int l, const SearchBudget& budget = {});

struct NumBox {
  Int max_m = 4;
  Int max_K = 10;
  Int max_ell = 6;
  Int max_q = 5;
};

/// Exhaustive check of
///   sum_{i<=m} tau(K_i, l_i) + sum_{m<i<=r} floor(K_i/(q+1)) <= tau(K, max l_i)
/// with K = sum K_i, over 1 <= m <= r <= max_m, 1 <= K_i <= max_K,
/// 2 <= l_i <= max_ell, 1 <= q <= max_q. Both sums are symmetric, so each
/// multiset of (K_i, l_i) pairs and of trailing K_i is visited once.
///
/// Runs the (r, m) blocks concurrently; the report does not depend on the
/// schedule.
LemmaReport check_lemma_num(const NumBox& box, const SearchBudget& budget = {});

}  // namespace cyccov
