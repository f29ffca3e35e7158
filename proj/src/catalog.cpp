#include "cyccov/catalog.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace cyccov {

namespace {

Int clamp_order(Int value) { return std::max<Int>(value, -1); }

void require(bool ok, const char* message) {
  if (!ok) throw ArgumentError(message);
}

TwistOrders both(Int order) { return {clamp_order(order), clamp_order(order)}; }

}  // namespace

CoveringScenario projective_space_scenario(Int n, Int a, Int r, Int d) {
  require(n >= 1, "projective_space_scenario: n must be >= 1");
  require(a >= 0, "projective_space_scenario: a must be >= 0");
  require(r >= 2, "projective_space_scenario: r must be >= 2");
  require(d >= 2, "projective_space_scenario: d must be >= 2");
  PositivityProfile profile(fmt::format("O({}) - q·O({}) on P^{}", a, r, n));
  for (Int q = 0; q < d; ++q) profile.set(q, both(checked_sub(a, checked_mul(q, r))));
  return make_scenario(d, true, std::move(profile),
                       fmt::format("P^{}, L = O({}), M = O({}), d = {}", n, a, r, d));
}

CoveringScenario geiser_scenario(Int k) {
  require(k >= 0, "geiser_scenario: k must be >= 0");
  // The branch quartic is 2M, so M = O(2).
  PositivityProfile profile(fmt::format("O({}) - q·O(2) on P^2", k));
  for (Int q = 0; q < 2; ++q) profile.set(q, both(k - 2 * q));
  return make_scenario(2, true, std::move(profile), fmt::format("Geiser double plane, L = O({})", k));
}

CoveringScenario hirzebruch2_scenario(Int a, Int b) {
  PositivityProfile profile(fmt::format("({})D + ({})f - q(2D + 3f) on F_2", a, b));
  for (Int q = 0; q < 2; ++q) {
    const Int da = checked_sub(a, checked_mul(2, q));
    const Int db = checked_sub(b, checked_mul(3, q));
    // L.f = a and L.D = b - 2a for L = aD + bf on F_2.
    profile.set(q, both(std::min(da, checked_sub(db, checked_mul(2, da)))));
  }
  return make_scenario(2, true, std::move(profile), fmt::format("Bertini double cover of F_2, L = {}D + {}f", a, b));
}

CoveringScenario abelian_torsion_scenario(Int m, Int d) {
  require(m >= 1, "abelian_torsion_scenario: m must be >= 1");
  require(d >= 2, "abelian_torsion_scenario: d must be >= 2");
  PositivityProfile profile(fmt::format("{}·Theta twisted by {}-torsion", m, d));
  for (Int q = 0; q < d; ++q) profile.set(q, both(m - 2));
  return make_scenario(d, false, std::move(profile),
                       fmt::format("abelian variety, L = {}·Theta, {}-torsion cover", m, d));
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::eq: return "==";
    case Comparison::ge: return ">=";
    case Comparison::le: return "<=";
  }
  return "?";
}

std::vector<ClaimOutcome> evaluate_claims(const CatalogEntry& entry) {
  const CoveringScenario scenario = entry.scenario();
  Int jet = -2;
  Int very = -2;
  std::vector<ClaimOutcome> out;
  for (const ExpectedClaim& claim : entry.expected_claims) {
    Int& cached = claim.kind == CriterionKind::jet ? jet : very;
    if (cached == -2) cached = max_guaranteed_order(claim.kind, scenario).k_star;
    bool holds = false;
    switch (claim.comparison) {
      case Comparison::eq: holds = cached == claim.value; break;
      case Comparison::ge: holds = cached >= claim.value; break;
      case Comparison::le: holds = cached <= claim.value; break;
    }
    out.push_back({claim, cached, holds});
  }
  return out;
}

namespace {

ExpectedClaim claim(CriterionKind kind, Comparison cmp, Int value, ClaimSource source, std::string statement,
                    bool informational = false) {
  return {kind, cmp, value, source, std::move(statement), informational};
}

constexpr auto jet = CriterionKind::jet;
constexpr auto very = CriterionKind::very;
constexpr auto lit = ClaimSource::literature;
constexpr auto der = ClaimSource::derived;

std::string param_id(const std::string& family, const Parameters& p) {
  std::string id = family;
  char sep = '/';
  for (const auto& [k, v] : p) {
    id += fmt::format("{}{}={}", sep, k, v);
    sep = ',';
  }
  return id;
}

void add(std::vector<CatalogEntry>& out, const std::string& family, Parameters params,
         std::function<CoveringScenario(const Parameters&)> builder, std::vector<ExpectedClaim> claims,
         std::string annotation = {}) {
  std::string id = param_id(family, params);
  // Claims about the same bundle share one entry.
  for (CatalogEntry& e : out) {
    if (e.id != id) continue;
    e.expected_claims.insert(e.expected_claims.end(), claims.begin(), claims.end());
    if (e.annotation.empty()) e.annotation = std::move(annotation);
    return;
  }
  out.push_back({std::move(id), family, std::move(params), std::move(builder), std::move(claims),
                 std::move(annotation)});
}

}  // namespace

std::vector<CatalogEntry> default_catalog() {
  std::vector<CatalogEntry> out;

  auto abelian = [](const Parameters& p) { return abelian_torsion_scenario(p.at("m"), p.at("d")); };
  for (Int d : {2, 3, 5}) {
    add(out, "abelian-principal", {{"m", 1}, {"d", d}}, abelian,
        {claim(jet, Comparison::eq, -1, lit, "principal polarization is not even globally generated"),
         claim(very, Comparison::eq, -1, der, "no guarantee from the twists either")},
        "pullback becomes very ample once d > 2^g; the criterion cannot see this");
  }

  for (Int k = 0; k <= 4; ++k) {
    for (Int d : {2, 3, 5}) {
      add(out, "elliptic-product", {{"m", k + 2}, {"d", d}}, abelian,
          {claim(jet, Comparison::eq, k, lit, fmt::format("(k+2)L pulls back to a {}-jet ample bundle and no more", k)),
           claim(very, Comparison::eq, k, lit, fmt::format("not l-very ample for l > {}", k))});
    }
  }

  auto projective = [](const Parameters& p) {
    return projective_space_scenario(p.at("n"), p.at("a"), p.at("r"), p.at("d"));
  };
  for (Int r : {2, 3, 4}) {
    for (Int d : {2, 3, 4}) {
      add(out, "projective-space", {{"n", 2}, {"a", (d - 1) * r}, {"r", r}, {"d", d}}, projective,
          {claim(jet, Comparison::eq, d - 1, lit,
                 fmt::format("pullback of O((d-1)r) is {}-jet ample but not {}-jet ample", d - 1, d))});
    }
  }
  add(out, "projective-space", {{"n", 3}, {"a", 0}, {"r", 2}, {"d", 2}}, projective,
      {claim(jet, Comparison::eq, 0, der, "trivial bundle pulls back globally generated only")});

  auto geiser = [](const Parameters& p) { return geiser_scenario(p.at("k")); };
  add(out, "geiser", {{"k", 0}}, geiser, {claim(very, Comparison::eq, 0, der, "O(0) gives global generation only")});
  add(out, "geiser", {{"k", 1}}, geiser, {claim(very, Comparison::le, 1, der, "O(1) gives at most very ampleness"),
                                                  claim(very, Comparison::eq, 0, der, "L - M = O(-1) has no sections")});
  for (Int k = 2; k <= 6; ++k) {
    add(out, "geiser", {{"k", k}}, geiser,
        {claim(very, Comparison::ge, k, lit, fmt::format("-{}K_Y is {}-very ample", k, k)),
         claim(very, Comparison::eq, k, der, "sharp: not (k+1)-very ample")});
  }

  auto bertini = [](const Parameters& p) { return hirzebruch2_scenario(p.at("a"), p.at("b")); };
  add(out, "bertini", {{"a", 0}, {"b", 0}}, bertini,
      {claim(jet, Comparison::eq, 0, der, "trivial bundle pulls back globally generated only")});
  add(out, "bertini", {{"a", 3}, {"b", 9}}, bertini,
      {claim(jet, Comparison::ge, 2, lit, "a >= k+1 and b >= 3k at k = 2", true)});
  for (Int k = 1; k <= 4; ++k) {
    add(out, "bertini", {{"a", k + 1}, {"b", 3 * k}}, bertini,
        {claim(jet, Comparison::ge, k, lit, fmt::format("a >= k+1 and b >= 3k at k = {}", k), true)},
        "the twist conditions need b >= 2a + k, i.e. b >= 3k+2 at a = k+1");
    add(out, "bertini", {{"a", k + 1}, {"b", 3 * k + 2}}, bertini,
        {claim(jet, Comparison::ge, k, der, "a >= k+1 and b >= 2a + k"),
         claim(jet, Comparison::le, k, der, "b = 2a + k caps L itself at order k")});
    add(out, "bertini", {{"a", k + 1}, {"b", 3 * k + 1}}, bertini,
        {claim(jet, Comparison::le, k - 1, der, "b < 2a + k fails the q = 0 twist")});
  }
  // The very-ampleness conditions depend on k only through floor((k-1)/2).
  for (Int h = 0; h <= 1; ++h) {
    std::vector<ExpectedClaim> claims;
    for (Int k = 2 * h + 1; k <= 2 * h + 2; ++k) {
      claims.push_back(claim(very, Comparison::ge, k, lit,
                             fmt::format("a >= floor((k-1)/2)+2 and b >= 3 floor((k-1)/2)+3 at k = {}", k), true));
    }
    add(out, "bertini", {{"a", h + 2}, {"b", 3 * h + 3}}, bertini, std::move(claims));
  }
  return out;
}

std::vector<std::string> catalog_families() {
  std::vector<std::string> out;
  for (const auto& e : default_catalog()) {
    if (std::find(out.begin(), out.end(), e.family) == out.end()) out.push_back(e.family);
  }
  return out;
}

}  // namespace cyccov
