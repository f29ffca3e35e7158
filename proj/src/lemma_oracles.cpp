#include "cyccov/lemma_oracles.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cyccov/combinatorics.hpp"

namespace cyccov {

Staircase Staircase::from_rows(std::span<const int> rows) {
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j] < 1 || (j > 0 && rows[j] > rows[j - 1])) {
      throw ArgumentError("staircase rows must be positive and non-increasing");
    }
    for (int i = 0; i < rows[j]; ++i) cells.emplace_back(i, static_cast<int>(j));
  }
  std::sort(cells.begin(), cells.end());
  return Staircase(std::move(cells));
}

Staircase Staircase::from_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  auto has = [&](Cell c) { return std::binary_search(cells.begin(), cells.end(), c); };
  for (auto [i, j] : cells) {
    if (i < 0 || j < 0) throw ArgumentError("staircase cells must have non-negative coordinates");
    if ((i > 0 && !has({i - 1, j})) || (j > 0 && !has({i, j - 1}))) {
      throw ArgumentError(fmt::format("cell set is not downward closed at ({}, {})", i, j));
    }
  }
  return Staircase(std::move(cells));
}

bool Staircase::contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

namespace {

void partitions(int remaining, int largest, std::vector<int>& prefix,
                const std::function<void(const std::vector<int>&)>& emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  for (int part = std::min(remaining, largest); part >= 1; --part) {
    prefix.push_back(part);
    partitions(remaining - part, part, prefix, emit);
    prefix.pop_back();
  }
}

// Partitions of n into exactly `count` parts, largest first.
void partitions_into(int n, int count, int largest, std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& emit) {
  if (count == 0) {
    if (n == 0) emit(prefix);
    return;
  }
  for (int part = std::min(n - (count - 1), largest); part >= 1; --part) {
    if (part * count < n) break;
    prefix.push_back(part);
    partitions_into(n - part, count - 1, part, prefix, emit);
    prefix.pop_back();
  }
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return UINT64_MAX;
  return r;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) return UINT64_MAX;
  return r;
}

// Number of multisets of size k drawn from n kinds.
std::uint64_t multichoose(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 1;
  if (n == 0) return 0;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n + i - 1) / i stays integral at every step
    const std::uint64_t num = saturating_mul(result, n + i - 1);
    if (num == UINT64_MAX) return UINT64_MAX;
    result = num / i;
  }
  return result;
}

// Calls visit(idx) for every non-decreasing index vector of the given size over [0, n).
template <typename Visit>
void for_each_multiset(int n, int size, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(size), 0);
  if (size == 0) {
    visit(idx);
    return;
  }
  if (n == 0) return;
  while (true) {
    visit(idx);
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - 1) --pos;
    if (pos < 0) return;
    const int next = idx[static_cast<std::size_t>(pos)] + 1;
    for (int p = pos; p < size; ++p) idx[static_cast<std::size_t>(p)] = next;
  }
}

constexpr std::size_t kMaxStoredCounterexamples = 100;

struct Accumulator {
  std::uint64_t instances = 0;
  std::optional<Int> min_slack;
  std::vector<std::string> counterexamples;

  void record(Int slack, const std::function<std::string()>& describe) {
    ++instances;
    if (!min_slack || slack < *min_slack) min_slack = slack;
    if (slack < 0 && counterexamples.size() < kMaxStoredCounterexamples) {
      counterexamples.push_back(describe());
    }
  }

  void merge(const Accumulator& other) {
    instances += other.instances;
    if (other.min_slack && (!min_slack || *other.min_slack < *min_slack)) min_slack = other.min_slack;
    for (const auto& c : other.counterexamples) {
      if (counterexamples.size() >= kMaxStoredCounterexamples) break;
      counterexamples.push_back(c);
    }
  }

  void write_to(LemmaReport& report) const {
    report.instances_checked = instances;
    report.max_slack = min_slack;
    report.counterexamples = counterexamples;
  }
};

}  // namespace

std::vector<Staircase> enumerate_staircases(int colength, int cap) {
  if (colength < 1) throw ArgumentError("staircase colength must be positive");
  if (colength >= cap) {
    throw ResourceError(fmt::format("staircase enumeration capped below colength {}, requested {}", cap, colength));
  }
  std::vector<Staircase> out;
  std::vector<int> prefix;
  partitions(colength, colength, prefix, [&](const std::vector<int>& rows) {
    out.push_back(Staircase::from_rows(rows));
  });
  return out;
}

std::size_t intersection_colength(std::span<const Staircase> staircases) {
  if (staircases.empty()) throw ArgumentError("intersection_colength needs at least one staircase");
  std::vector<Cell> merged = staircases.front().cells();
  std::vector<Cell> scratch;
  for (const auto& s : staircases.subspan(1)) {
    scratch.clear();
    std::set_union(merged.begin(), merged.end(), s.cells().begin(), s.cells().end(), std::back_inserter(scratch));
    merged.swap(scratch);
  }
  return merged.size();
}

std::optional<bool> LemmaReport::bound_attained() const {
  if (!observed_max || !bound) return std::nullopt;
  return *observed_max == *bound;
}

LemmaReport check_lemma_alg(Int k, Int l, const SearchBudget& budget) {
  if (l < 2) throw ArgumentError("check_lemma_alg: l must be at least 2");
  if (k < l) throw ArgumentError("check_lemma_alg: need k >= l so every ideal has colength >= 1");

  LemmaReport report;
  report.lemma_id = LemmaId::alg;
  report.parameter_box = {{"k", k, k}, {"ell", l, l}};
  report.bound = tau(k, l);
  report.note = "monomial ideals in two variables";

  // I_1 ranges up to colength k - (l - 1).
  const Int largest = k - (l - 1);
  if (largest >= budget.staircase_cap) {
    report.complete = false;
    throw BudgetExceeded(fmt::format("colength {} needed for (k={}, l={}) reaches the staircase cap {}", largest, k, l,
                                     budget.staircase_cap),
                         report);
  }

  std::vector<std::vector<Staircase>> by_colength(static_cast<std::size_t>(largest + 1));
  for (int c = 1; c <= largest; ++c) by_colength[static_cast<std::size_t>(c)] = enumerate_staircases(c, budget.staircase_cap);

  Accumulator acc;
  Int observed_max = 0;
  std::optional<std::string> overflow;
  std::vector<int> prefix;
  partitions_into(static_cast<int>(k), static_cast<int>(l), static_cast<int>(largest), prefix,
                  [&](const std::vector<int>& colengths) {
                    if (overflow) return;
                    // I_1 only enters through its colength; each of its staircases is one instance.
                    std::uint64_t tuples = 1;
                    for (int c : colengths) tuples = saturating_mul(tuples, by_colength[static_cast<std::size_t>(c)].size());
                    if (saturating_add(acc.instances, tuples) > budget.max_instances) {
                      overflow = fmt::format("tuple budget {} exceeded", budget.max_instances);
                      return;
                    }
                    const std::uint64_t first_count = by_colength[static_cast<std::size_t>(colengths[0])].size();
                    const std::size_t slots = colengths.size() - 1;
                    std::vector<std::size_t> odometer(slots, 0);
                    std::vector<Staircase> tuple;
                    tuple.reserve(slots);
                    while (true) {
                      tuple.clear();
                      for (std::size_t s = 0; s < slots; ++s) {
                        tuple.push_back(by_colength[static_cast<std::size_t>(colengths[s + 1])][odometer[s]]);
                      }
                      const Int observed = static_cast<Int>(intersection_colength(tuple));
                      observed_max = std::max(observed_max, observed);
                      for (std::uint64_t rep = 0; rep < first_count; ++rep) {
                        acc.record(*report.bound - observed, [&] {
                          return fmt::format("colengths {} intersection length {} > tau {}", colengths, observed,
                                             *report.bound);
                        });
                      }
                      std::size_t s = 0;
                      for (; s < slots; ++s) {
                        if (++odometer[s] < by_colength[static_cast<std::size_t>(colengths[s + 1])].size()) break;
                        odometer[s] = 0;
                      }
                      if (s == slots) break;
                    }
                  });

  acc.write_to(report);
  report.observed_max = observed_max;
  if (overflow) {
    report.complete = false;
    throw BudgetExceeded(*overflow, report);
  }
  return report;
}

LemmaReport check_lemma_num(const NumBox& box, const SearchBudget& budget) {
  if (box.max_m < 1 || box.max_K < 1 || box.max_ell < 1 || box.max_q < 1) {
    throw ArgumentError("check_lemma_num: all bounds must be positive");
  }
  LemmaReport report;
  report.lemma_id = LemmaId::num;
  report.parameter_box = {{"r", 1, box.max_m}, {"K_i", 1, box.max_K}, {"ell_i", 2, box.max_ell}, {"q", 1, box.max_q}};
  report.note = "reduced inequality against tau(K, max ell_i); multisets up to reordering";

  struct Pair {
    Int K;
    Int ell;
    Int tau;
  };
  std::vector<Pair> pairs;
  for (Int K = 1; K <= box.max_K; ++K) {
    for (Int ell = 2; ell <= box.max_ell; ++ell) pairs.push_back({K, ell, tau(K, ell)});
  }

  struct Block {
    int r;
    int m;
    std::uint64_t size;
  };
  std::vector<Block> blocks;
  std::uint64_t planned = 0;
  bool truncated = false;
  for (int r = 1; r <= box.max_m; ++r) {
    for (int m = 1; m <= r; ++m) {
      const std::uint64_t size = saturating_mul(
          saturating_mul(multichoose(pairs.size(), static_cast<std::uint64_t>(m)),
                         multichoose(static_cast<std::uint64_t>(box.max_K), static_cast<std::uint64_t>(r - m))),
          static_cast<std::uint64_t>(box.max_q));
      if (truncated || saturating_add(planned, size) > budget.max_instances) {
        truncated = true;
        continue;
      }
      planned += size;
      blocks.push_back({r, m, size});
    }
  }

  auto run_block = [&pairs, &box](Block block) {
    Accumulator acc;
    const int rest = block.r - block.m;
    for_each_multiset(static_cast<int>(pairs.size()), block.m, [&](const std::vector<int>& chosen) {
      Int tau_sum = 0;
      Int K_head = 0;
      Int ell_max = 2;
      for (int i : chosen) {
        const Pair& p = pairs[static_cast<std::size_t>(i)];
        tau_sum = checked_add(tau_sum, p.tau);
        K_head = checked_add(K_head, p.K);
        ell_max = std::max(ell_max, p.ell);
      }
      for_each_multiset(static_cast<int>(box.max_K), rest, [&](const std::vector<int>& tail) {
        Int K = K_head;
        for (int t : tail) K = checked_add(K, t + 1);
        const Int rhs = tau(K, ell_max);
        for (Int q = 1; q <= box.max_q; ++q) {
          Int lhs = tau_sum;
          for (int t : tail) lhs = checked_add(lhs, (t + 1) / (q + 1));
          acc.record(rhs - lhs, [&] {
            std::vector<std::string> head;
            for (int i : chosen) head.push_back(fmt::format("({},{})", pairs[static_cast<std::size_t>(i)].K,
                                                           pairs[static_cast<std::size_t>(i)].ell));
            std::vector<int> tail_K;
            for (int t : tail) tail_K.push_back(t + 1);
            return fmt::format("r={} m={} q={} (K,ell)={} tail K={}: {} > {}", block.r, block.m, q,
                               fmt::join(head, ","), tail_K, lhs, rhs);
          });
        }
      });
    });
    return acc;
  };

  std::vector<std::future<Accumulator>> pending;
  pending.reserve(blocks.size());
  for (const Block& b : blocks) pending.push_back(std::async(std::launch::async, run_block, b));
  Accumulator total;
  for (auto& f : pending) total.merge(f.get());
  total.write_to(report);

  if (truncated) {
    report.complete = false;
    throw BudgetExceeded(fmt::format("instance budget {} exceeded", budget.max_instances), report);
  }
  return report;
}

}  // namespace cyccov
