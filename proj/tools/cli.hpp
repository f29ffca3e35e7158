#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <variant>

#include "cyccov/lemma_oracles.hpp"
#include "render.hpp"

namespace cyccov::cli {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int failure = 1;  // a claim or lemma check failed
inline constexpr int usage = 2;    // bad arguments or unparsable config
inline constexpr int budget = 3;   // search budget exhausted
}  // namespace exit_code

enum class Command { sigma_table, verify_lemma, criteria, examples, local_model };

struct RunConfig {
  Command command = Command::sigma_table;
  /// Subcommand arguments by option name (without dashes); "mode" selects the
  /// variant of verify-lemma and local-model.
  std::map<std::string, std::string> parameters;
  OutputFormat output_format = OutputFormat::plain;
  SearchBudget budget;
};

/// Budget defaults with CYCCOV_MAX_INSTANCES / CYCCOV_STAIRCASE_CAP applied.
/// Throws ArgumentError for malformed values.
SearchBudget budget_from_environment();

/// Parsed configuration, or the exit code to return (help, usage error).
std::variant<RunConfig, int> parse_arguments(std::span<const std::string> args, std::ostream& out, std::ostream& err);

int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cyccov::cli
