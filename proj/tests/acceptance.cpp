// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is 0 only if all of them pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "cyccov/catalog.hpp"
#include "cyccov/combinatorics.hpp"
#include "cyccov/lemma_oracles.hpp"
#include "cyccov/local_model.hpp"
#include "cyccov/trials.hpp"
#include "sigma_table_d15.hpp"

namespace {

using namespace cyccov;

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Outcome sigma_table_reproduction() {
  Outcome o;
  const SigmaTable t = sigma_table(15, 15);
  std::size_t cells = 0;
  for (Int q = 1; q <= 14; ++q)
    for (Int k = 0; k <= 15; ++k) {
      const int want = testdata::kSigmaTable15[static_cast<std::size_t>(q - 1)][static_cast<std::size_t>(k)];
      const auto got = t.value(q, k);
      if (want < 0) {
        o.check(!got, fmt::format("unexpected entry at q={} k={}", q, k));
      } else {
        o.check(got && *got == want, fmt::format("sigma({},15,{}) differs", k, q));
        ++cells;
      }
    }
  o.check(t.entries().size() == cells, "entry count");
  o.check(sigma(15, 15, 1) == 9 && sigma(4, 15, 2) == 1 && sigma(7, 15, 3) == 3 && sigma(10, 15, 5) == 4,
          "spot values");
  if (o.ok) o.detail = fmt::format("{} cells", cells);
  return o;
}

Outcome very_prose_checks() {
  Outcome o;
  for (Int d = 2; d <= 50; ++d) {
    o.check(sigma(2, d, 1) == 0, fmt::format("sigma(2,{},1)", d));
    if (d >= 3) o.check(sigma(2, d, 2) == 0, fmt::format("sigma(2,{},2)", d));
  }
  o.check(required_profile(CriterionKind::very, 4, 15).requirements == std::vector<Int>{4, 1, 1, 0, 0},
          "required_profile(very,4,15)");
  o.check(required_profile(CriterionKind::very, 2, 15).requirements == std::vector<Int>{2, 0, 0},
          "required_profile(very,2,15)");
  return o;
}

Outcome lemma_num() {
  Outcome o;
  const LemmaReport r = check_lemma_num(NumBox{4, 10, 6, 5});
  o.check(r.complete, "incomplete");
  o.check(r.counterexamples.empty(), fmt::format("{} counterexamples", r.counterexamples.size()));
  if (o.ok) o.detail = fmt::format("{} instances, min slack {}", r.instances_checked, *r.max_slack);
  return o;
}

Outcome lemma_alg() {
  Outcome o;
  std::uint64_t instances = 0;
  int attained = 0;
  int cases = 0;
  for (Int l = 2; l <= 4; ++l)
    for (Int k = l; k <= 10; ++k) {
      const LemmaReport r = check_lemma_alg(k, l);
      o.check(r.passed(), fmt::format("(k={}, l={}) failed", k, l));
      instances += r.instances_checked;
      attained += r.bound_attained().value_or(false) ? 1 : 0;
      ++cases;
    }
  if (o.ok) o.detail = fmt::format("{} tuples, bound attained in {}/{} cases", instances, attained, cases);
  return o;
}

Outcome geiser() {
  Outcome o;
  for (Int k = 2; k <= 20; ++k) {
    o.check(max_guaranteed_very_order(geiser_scenario(k)).k_star >= k, fmt::format("k={}", k));
  }
  return o;
}

Outcome projective_sharpness() {
  Outcome o;
  for (Int r = 2; r <= 6; ++r)
    for (Int d = 2; d <= 6; ++d) {
      const auto s = projective_space_scenario(2, (d - 1) * r, r, d);
      const CriterionVerdict v = max_guaranteed_jet_order(s);
      o.check(v.k_star == d - 1, fmt::format("r={} d={} gave {}", r, d, v.k_star));
      o.check(!explain_requirement(CriterionKind::jet, d, s).satisfied(), fmt::format("r={} d={}: k=d holds", r, d));
    }
  return o;
}

Outcome abelian_tightness() {
  Outcome o;
  for (Int k = 0; k <= 10; ++k)
    for (Int d = 2; d <= 6; ++d) {
      o.check(max_guaranteed_jet_order(abelian_torsion_scenario(k + 2, d)).k_star == k, fmt::format("k={} d={}", k, d));
    }
  return o;
}

Outcome local_model() {
  Outcome o;
  std::size_t systems = 0;
  for (int d = 1; d <= 8; ++d) {
    std::vector<Int> tuple;
    std::vector<bool> used(static_cast<std::size_t>(d), false);
    std::function<void()> rec = [&] {
      const auto alpha = vandermonde_solve(d, tuple);
      for (const auto& r : vandermonde_residual(d, tuple, alpha)) o.check(r.is_zero(), fmt::format("residual d={}", d));
      ++systems;
      for (Int b = 1; b < d; ++b) {
        if (used[static_cast<std::size_t>(b)]) continue;
        used[static_cast<std::size_t>(b)] = true;
        tuple.push_back(b);
        rec();
        tuple.pop_back();
        used[static_cast<std::size_t>(b)] = false;
      }
    };
    rec();
  }

  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Case2Transcript t = run_case2_trial(random_case2_trial(rng, TrialLimits{}));
    o.check(t.residuals_zero && t.prescriptions_met, fmt::format("trial {}", i));
  }

  std::size_t monomials = 0;
  for (int d = 1; d <= 5; ++d) {
    const FieldPtr f = CyclotomicField::of_order(d);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::string> vars;
      for (std::size_t v = 1; v <= n; ++v) vars.push_back("u" + std::to_string(v));
      for (int K = 1; K <= 6; ++K) {
        Exponent e(n, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
          if (pos == n) {
            const auto m = TruncatedSeries::monomial(f, vars, K, e, CyclotomicNumber(f, 1));
            o.check(reassemble_ramified(decompose_jet_ramified(m, d), d, vars, K) == m, "round trip");
            ++monomials;
            return;
          }
          for (int x = 0; x < left; ++x) {
            e[pos] = x;
            rec(pos + 1, left - x);
          }
          e[pos] = 0;
        };
        rec(0, K);
      }
    }
  }
  if (o.ok) o.detail = fmt::format("{} systems, 1000 trials, {} round trips", systems, monomials);
  return o;
}

Outcome obstruction() {
  Outcome o;
  for (Int d = 2; d <= 6; ++d)
    for (Int r = 2; r <= 6; ++r) {
      const FieldPtr f = CyclotomicField::of_order(static_cast<int>(d));
      const std::vector<std::string> vars{"u1", "u2"};
      const int order = static_cast<int>(d + 1);
      const auto jet = TruncatedSeries::monomial(f, vars, order, {static_cast<int>(d - 1), 1}, CyclotomicNumber(f, 1));
      const auto s = case3_construct(static_cast<int>(d), jet, order);
      o.check(evaluate_at_ramification_point(s, vars, order) == jet, "reassembly");
      const auto obs = jet_obstructions(s, projective_space_scenario(2, (d - 1) * r, r, d).profile);
      o.check(obs.size() == 1 && obs[0].q == d - 1 && obs[0].required == 1 && obs[0].available == 0,
              fmt::format("d={} r={} not flagged", d, r));
    }
  return o;
}

Outcome engine_properties() {
  Outcome o;
  std::mt19937_64 rng(10000);
  std::uniform_int_distribution<Int> order(-1, 15);
  for (int i = 0; i < 10000; ++i) {
    const Int d = std::uniform_int_distribution<Int>(2, 10)(rng);
    PositivityProfile p;
    PositivityProfile dominating;
    for (Int q = 0; q < d; ++q) {
      const TwistOrders t{order(rng), order(rng)};
      p.set(q, t);
      dominating.set(q, {std::min<Int>(t.jet + std::uniform_int_distribution<Int>(0, 3)(rng), 15),
                         std::min<Int>(t.very + std::uniform_int_distribution<Int>(0, 3)(rng), 15)});
    }
    const auto branched = make_scenario(d, true, p, "");
    const auto unbranched = make_scenario(d, false, p, "");
    const auto dom = make_scenario(d, true, dominating, "");
    for (CriterionKind kind : {CriterionKind::jet, CriterionKind::very}) {
      const Int base = max_guaranteed_order(kind, branched).k_star;
      o.check(max_guaranteed_order(kind, dom).k_star >= base, fmt::format("monotonicity, profile {}", i));
      o.check(max_guaranteed_order(kind, unbranched).k_star == base, fmt::format("branched flag, profile {}", i));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"sigma table d=15 reproduction", sigma_table_reproduction},
      {"very-ampleness prose checks", very_prose_checks},
      {"integer inequality, exhaustive box", lemma_num},
      {"staircase length bound, 2<=l<=4, k<=10", lemma_alg},
      {"Geiser double plane, 2<=k<=20", geiser},
      {"projective space sharpness, 2<=r,d<=6", projective_sharpness},
      {"abelian torsion tightness", abelian_tightness},
      {"local model constructions", local_model},
      {"ramified jet obstruction", obstruction},
      {"engine properties, 10000 profiles", engine_properties},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.ok ? 0 : 1;
    std::printf("%s %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", index, name, seconds, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
