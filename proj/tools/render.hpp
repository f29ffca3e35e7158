#pragma once

#include <string>
#include <vector>

#include "cyccov/catalog.hpp"
#include "cyccov/combinatorics.hpp"
#include "cyccov/criteria.hpp"

namespace cyccov::cli {

enum class OutputFormat { plain, markdown, csv, records };

std::string render_sigma_table(const SigmaTable& table, OutputFormat format);

/// "q=0 need 3 have 3 ok; q=1 ..." on one line.
std::string render_order_check(const OrderCheck& check);

struct ClaimLine {
  std::string entry_id;
  ClaimOutcome outcome;
};

std::string render_claims(const std::vector<ClaimLine>& lines, OutputFormat format);

}  // namespace cyccov::cli
