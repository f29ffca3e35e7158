#pragma once

#include <random>
#include <vector>

#include "cyccov/local_model.hpp"

namespace cyccov {

struct TrialLimits {
  int max_d = 6;
  int max_order = 4;
  int max_variables = 3;
  int max_numerator = 9;
  int max_denominator = 5;
};

/// One randomized fiber-separation problem: l points of an unbranched orbit,
/// the first at the reference point (beta = 0), with rational target jets.
struct Case2Trial {
  int d;
  std::vector<Int> betas;
  std::vector<int> orders;
  std::vector<TruncatedSeries> jets;
};

Case2Trial random_case2_trial(std::mt19937_64& rng, const TrialLimits& limits = {});

/// Everything needed to audit one trial: solved alphas for each target point,
/// their residuals, and the jets the constructed section actually has.
struct Case2Transcript {
  Case2Trial trial;
  std::vector<std::vector<CyclotomicNumber>> alphas;     // per target point
  std::vector<std::vector<CyclotomicNumber>> residuals;  // per target point
  SectionDecomposition section;
  std::vector<TruncatedSeries> achieved;  // jet at point i modulo m^{orders[i]}
  bool residuals_zero = false;
  bool prescriptions_met = false;
};

Case2Transcript run_case2_trial(const Case2Trial& trial);

}  // namespace cyccov
