#pragma once

#include <string>

#include "cyccov/criteria.hpp"
#include "cyccov/lemma_oracles.hpp"
#include "cyccov/trials.hpp"

namespace cyccov {

std::string_view to_string(LemmaId id);

/// Line-oriented report, one "key: value" per line.
std::string to_text(const LemmaReport& report);

// Single-line JSON records for CI consumption.
std::string to_record(const LemmaReport& report);
std::string to_record(const CriterionVerdict& verdict, const std::string& scenario_label);
std::string to_record(const OrderCheck& check);
std::string to_record(const Case2Transcript& transcript);

}  // namespace cyccov
