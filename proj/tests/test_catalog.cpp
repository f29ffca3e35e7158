#include <gtest/gtest.h>

#include <set>

#include "cyccov/catalog.hpp"

namespace cyccov {
namespace {

TEST(Catalog, EveryNonInformationalClaimHolds) {
  int informational_failures = 0;
  for (const CatalogEntry& e : default_catalog()) {
    for (const ClaimOutcome& o : evaluate_claims(e)) {
      if (o.claim.informational) {
        informational_failures += o.holds ? 0 : 1;
      } else {
        EXPECT_TRUE(o.holds) << e.id << ": " << o.claim.statement << " observed " << o.observed;
      }
    }
  }
  // The literature Bertini conditions are weaker than what the twists give.
  EXPECT_GT(informational_failures, 0);
}

TEST(Catalog, IdsUniqueAndFamiliesOrdered) {
  std::set<std::string> ids;
  for (const auto& e : default_catalog()) EXPECT_TRUE(ids.insert(e.id).second) << e.id;
  EXPECT_EQ(catalog_families(),
            (std::vector<std::string>{"abelian-principal", "elliptic-product", "projective-space", "geiser", "bertini"}));
}

TEST(Catalog, BuildersAreDeterministic) {
  for (const auto& e : default_catalog()) {
    const auto a = e.scenario();
    const auto b = e.scenario();
    EXPECT_EQ(a.d, b.d);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.profile.entries(), b.profile.entries());
  }
}

TEST(ProjectiveSpace, ExampleValues) {
  EXPECT_EQ(max_guaranteed_jet_order(projective_space_scenario(2, 2, 2, 2)).k_star, 1);
  EXPECT_EQ(max_guaranteed_jet_order(projective_space_scenario(2, 6, 3, 3)).k_star, 2);
  EXPECT_EQ(max_guaranteed_jet_order(projective_space_scenario(2, 0, 2, 2)).k_star, 0);
}

TEST(ProjectiveSpace, SharpnessGrid) {
  for (Int r = 2; r <= 6; ++r)
    for (Int d = 2; d <= 6; ++d)
      for (Int n = 1; n <= 4; ++n) {
        const auto s = projective_space_scenario(n, (d - 1) * r, r, d);
        EXPECT_EQ(max_guaranteed_jet_order(s).k_star, d - 1) << r << "," << d;
        // L itself is ((d-1)r)-jet ample, which is at least d.
        EXPECT_GE(s.profile.at(0).jet, d);
      }
}

TEST(ProjectiveSpace, IndependentOfDimension) {
  for (Int a = 0; a <= 12; ++a)
    for (Int r = 2; r <= 4; ++r)
      for (Int d = 2; d <= 5; ++d) {
        const Int base = max_guaranteed_jet_order(projective_space_scenario(1, a, r, d)).k_star;
        const Int very = max_guaranteed_very_order(projective_space_scenario(1, a, r, d)).k_star;
        for (Int n = 2; n <= 4; ++n) {
          EXPECT_EQ(max_guaranteed_jet_order(projective_space_scenario(n, a, r, d)).k_star, base);
          EXPECT_EQ(max_guaranteed_very_order(projective_space_scenario(n, a, r, d)).k_star, very);
        }
      }
}

TEST(Geiser, VeryOrderMatchesK) {
  EXPECT_EQ(max_guaranteed_very_order(geiser_scenario(0)).k_star, 0);
  EXPECT_LE(max_guaranteed_very_order(geiser_scenario(1)).k_star, 1);
  for (Int k = 2; k <= 20; ++k) EXPECT_EQ(max_guaranteed_very_order(geiser_scenario(k)).k_star, k);
}

TEST(Bertini, DerivedConditions) {
  EXPECT_EQ(max_guaranteed_jet_order(hirzebruch2_scenario(0, 0)).k_star, 0);
  for (Int k = 0; k <= 6; ++k)
    for (Int a = 0; a <= 10; ++a)
      for (Int b = 0; b <= 30; ++b) {
        const bool derived = a >= k + 1 && b >= 2 * a + k;
        const Int got = max_guaranteed_jet_order(hirzebruch2_scenario(a, b)).k_star;
        if (derived) EXPECT_GE(got, k) << a << "," << b;
      }
  EXPECT_EQ(max_guaranteed_jet_order(hirzebruch2_scenario(3, 9)).k_star, 2);
  EXPECT_EQ(max_guaranteed_jet_order(hirzebruch2_scenario(4, 9)).k_star, 1);
}

TEST(AbelianTorsion, JetOrderIsKAndPrincipalFails) {
  for (Int k = 0; k <= 10; ++k)
    for (Int d = 2; d <= 6; ++d) {
      const auto s = abelian_torsion_scenario(k + 2, d);
      EXPECT_FALSE(s.branched);
      EXPECT_EQ(max_guaranteed_jet_order(s).k_star, k);
    }
  for (Int d = 2; d <= 6; ++d) EXPECT_EQ(max_guaranteed_jet_order(abelian_torsion_scenario(1, d)).k_star, -1);
}

TEST(Builders, ValidateArguments) {
  EXPECT_THROW(projective_space_scenario(2, 4, 2, 1), ArgumentError);
  EXPECT_THROW(geiser_scenario(-1), ArgumentError);
  EXPECT_THROW(abelian_torsion_scenario(0, 3), ArgumentError);
}

}  // namespace
}  // namespace cyccov
