#include "cyccov/trials.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cyccov {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void for_each_exponent(std::size_t arity, int bound, Exponent& e, std::size_t pos, int budget,
                       const std::function<void(const Exponent&)>& visit) {
  if (pos == arity) {
    visit(e);
    return;
  }
  for (int a = 0; a < budget; ++a) {
    e[pos] = a;
    for_each_exponent(arity, bound, e, pos + 1, budget - a, visit);
  }
  e[pos] = 0;
}

}  // namespace

Case2Trial random_case2_trial(std::mt19937_64& rng, const TrialLimits& limits) {
  Case2Trial trial;
  trial.d = uniform(rng, 2, limits.max_d);
  const int l = uniform(rng, 1, trial.d);
  std::vector<Int> others(static_cast<std::size_t>(trial.d - 1));
  std::iota(others.begin(), others.end(), Int{1});
  std::shuffle(others.begin(), others.end(), rng);
  trial.betas.push_back(0);
  for (int i = 1; i < l; ++i) {
    // Orbit indices are only meaningful mod d; shift some by multiples of d.
    trial.betas.push_back(others[static_cast<std::size_t>(i - 1)] + trial.d * uniform(rng, -1, 1));
  }

  const int arity = uniform(rng, 1, limits.max_variables);
  std::vector<std::string> vars;
  for (int i = 1; i <= arity; ++i) vars.push_back("u" + std::to_string(i));
  const FieldPtr field = CyclotomicField::of_order(trial.d);
  for (int i = 0; i < l; ++i) {
    const int order = uniform(rng, 1, limits.max_order);
    trial.orders.push_back(order);
    TruncatedSeries jet(field, vars, order);
    Exponent e(static_cast<std::size_t>(arity), 0);
    for_each_exponent(e.size(), order, e, 0, order, [&](const Exponent& ex) {
      if (uniform(rng, 0, 1) == 0) return;
      const mpq_class c(uniform(rng, -limits.max_numerator, limits.max_numerator),
                        uniform(rng, 1, limits.max_denominator));
      jet.add_term(ex, CyclotomicNumber(field, c));
    });
    trial.jets.push_back(std::move(jet));
  }
  return trial;
}

Case2Transcript run_case2_trial(const Case2Trial& trial) {
  const std::vector<Int> tail(trial.betas.begin() + 1, trial.betas.end());
  std::vector<std::vector<CyclotomicNumber>> alphas;
  std::vector<std::vector<CyclotomicNumber>> residuals;
  bool residuals_zero = true;
  for (std::size_t i = 0; i < trial.betas.size(); ++i) {
    alphas.push_back(vandermonde_solve(trial.d, tail, static_cast<int>(i)));
    residuals.push_back(vandermonde_residual(trial.d, tail, alphas.back(), static_cast<int>(i)));
    residuals_zero = residuals_zero && std::all_of(residuals.back().begin(), residuals.back().end(),
                                                   [](const CyclotomicNumber& r) { return r.is_zero(); });
  }

  SectionDecomposition section = case2_construct(trial.d, trial.betas, trial.jets, trial.orders);
  std::vector<TruncatedSeries> achieved;
  bool met = true;
  for (std::size_t i = 0; i < trial.betas.size(); ++i) {
    achieved.push_back(evaluate_at_orbit_point(section, trial.betas[i]).truncated(trial.orders[i]));
    met = met && achieved.back() == trial.jets[i].truncated(trial.orders[i]);
  }
  return {trial, std::move(alphas), std::move(residuals), std::move(section), std::move(achieved), residuals_zero, met};
}

}  // namespace cyccov
