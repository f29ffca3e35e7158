#include <gtest/gtest.h>

#include <random>

#include "cyccov/combinatorics.hpp"
#include "cyccov/criteria.hpp"

namespace cyccov {
namespace {

CoveringScenario jet_profile(Int d, std::vector<Int> jets, bool branched = true) {
  PositivityProfile p;
  for (std::size_t q = 0; q < jets.size(); ++q) p.set(static_cast<Int>(q), {jets[q], -1});
  return make_scenario(d, branched, p, "test");
}

CoveringScenario random_scenario(std::mt19937_64& rng, Int& d) {
  d = std::uniform_int_distribution<Int>(2, 10)(rng);
  std::uniform_int_distribution<Int> order(-1, 15);
  PositivityProfile p;
  for (Int q = 0; q < d; ++q) p.set(q, {order(rng), order(rng)});
  return make_scenario(d, rng() % 2 == 0, p, "random");
}

// Largest k passing the definition directly, scanning far past any plausible answer.
Int brute_jet(const CoveringScenario& s) {
  Int best = -1;
  for (Int k = 0; k <= 40; ++k) {
    bool ok = true;
    for (Int q = 0; q <= std::min(k, s.d - 1); ++q) ok = ok && s.profile.at(q).jet >= k - q;
    if (ok) best = k;
  }
  return best;
}

TEST(Profile, Defaults) {
  PositivityProfile p;
  EXPECT_EQ(p.at(3), (TwistOrders{-1, -1}));
  p.set(1, {2, 5});
  EXPECT_EQ(p.at(1), (TwistOrders{2, 5}));
  EXPECT_EQ(p.effective_very(1), 5);
  p.set(2, {4, 1});
  EXPECT_EQ(p.effective_very(2), 4);
  EXPECT_THROW(p.set(-1, {0, 0}), ArgumentError);
  EXPECT_THROW(p.set(0, {-2, 0}), ArgumentError);
  EXPECT_THROW(make_scenario(1, true, p, "bad"), ArgumentError);
}

TEST(JetCriterion, Examples) {
  EXPECT_EQ(max_guaranteed_jet_order(jet_profile(2, {2, 1})).k_star, 2);
  EXPECT_EQ(max_guaranteed_jet_order(jet_profile(2, {2, 0})).k_star, 1);
  EXPECT_EQ(max_guaranteed_jet_order(jet_profile(3, {-1, 5, 5})).k_star, -1);
  EXPECT_EQ(max_guaranteed_jet_order(jet_profile(4, {7, 7, 7, 7})).k_star, 7);
  // L = O(2), M = O(2) on P^n with d = 2.
  EXPECT_EQ(max_guaranteed_jet_order(jet_profile(2, {2, 0})).k_star, 1);
}

TEST(VeryCriterion, Examples) {
  // Degree 2: L 2-very ample and L - M globally generated.
  PositivityProfile p;
  p.set(0, {-1, 2});
  p.set(1, {-1, 0});
  EXPECT_GE(max_guaranteed_very_order(make_scenario(2, true, p, "")).k_star, 2);

  EXPECT_EQ(max_guaranteed_very_order(make_scenario(3, true, PositivityProfile{}, "")).k_star, -1);
  EXPECT_EQ(max_guaranteed_jet_order(make_scenario(3, true, PositivityProfile{}, "")).k_star, -1);
}

TEST(ExplainRequirement, Examples) {
  PositivityProfile p;
  for (Int q = 0; q < 15; ++q) p.set(q, {-1, std::max<Int>(4 - q, -1)});
  const auto s = make_scenario(15, true, p, "");
  const OrderCheck c = explain_requirement(CriterionKind::very, 4, s);
  ASSERT_EQ(c.checks.size(), 5u);
  const std::vector<Int> want{4, 1, 1, 0, 0};
  for (std::size_t q = 0; q < 5; ++q) EXPECT_EQ(c.checks[q].required, want[q]);
  EXPECT_TRUE(c.satisfied());

  const OrderCheck j0 = explain_requirement(CriterionKind::jet, 0, s);
  ASSERT_EQ(j0.checks.size(), 1u);
  EXPECT_EQ(j0.checks[0].required, 0);
  EXPECT_FALSE(j0.satisfied());

  const OrderCheck j5 = explain_requirement(CriterionKind::jet, 5, jet_profile(2, {5, 4}));
  ASSERT_EQ(j5.checks.size(), 2u);
  EXPECT_EQ(j5.checks[0].required, 5);
  EXPECT_EQ(j5.checks[1].required, 4);
  EXPECT_TRUE(j5.satisfied());
}

TEST(CriteriaProperties, RandomizedProfiles) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 2000; ++trial) {
    Int d = 0;
    const CoveringScenario s = random_scenario(rng, d);
    const CriterionVerdict jet = max_guaranteed_jet_order(s);
    const CriterionVerdict very = max_guaranteed_very_order(s);

    ASSERT_EQ(jet.k_star, brute_jet(s));
    EXPECT_TRUE(jet.contiguous);
    EXPECT_TRUE(very.contiguous);
    EXPECT_GE(very.k_star, jet.k_star);
    for (Int k = 0; k <= jet.k_star; ++k) EXPECT_TRUE(explain_requirement(CriterionKind::jet, k, s).satisfied());
    EXPECT_FALSE(explain_requirement(CriterionKind::jet, jet.k_star + 1, s).satisfied());
    for (Int k : very.feasible) EXPECT_TRUE(explain_requirement(CriterionKind::very, k, s).satisfied());
    EXPECT_EQ(jet.k_star == -1, !explain_requirement(CriterionKind::jet, 0, s).satisfied());

    // Unbranched with the same data gives the same verdicts.
    CoveringScenario flipped = s;
    flipped.branched = !s.branched;
    EXPECT_EQ(max_guaranteed_jet_order(flipped).k_star, jet.k_star);
    EXPECT_EQ(max_guaranteed_very_order(flipped).k_star, very.k_star);
    EXPECT_EQ(max_guaranteed_very_order(flipped).feasible, very.feasible);

    // Raising any order never lowers a verdict.
    CoveringScenario raised = s;
    const Int q = std::uniform_int_distribution<Int>(0, d - 1)(rng);
    TwistOrders t = s.profile.at(q);
    t.jet += std::uniform_int_distribution<Int>(0, 3)(rng);
    t.very += std::uniform_int_distribution<Int>(0, 3)(rng);
    raised.profile.set(q, t);
    EXPECT_GE(max_guaranteed_jet_order(raised).k_star, jet.k_star);
    EXPECT_GE(max_guaranteed_very_order(raised).k_star, very.k_star);

    // Larger degree with no guarantees on the new twists.
    if (jet.k_star + 2 <= d) {
      CoveringScenario wider = s;
      wider.d = d + 3;
      EXPECT_EQ(max_guaranteed_jet_order(wider).k_star, jet.k_star);
    }
  }
}

}  // namespace
}  // namespace cyccov
