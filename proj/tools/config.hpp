#pragma once

#include <stdexcept>
#include <string>

#include "cyccov/criteria.hpp"

namespace cyccov::cli {

/// Malformed scenario file. what() reads "<source>:<line>:<column>: <field>: <problem>".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, int column, const std::string& field, const std::string& problem);
  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

inline constexpr int kSchemaVersion = 1;

/// Scenario files are YAML with `schema_version: 1` and either an explicit
/// profile
///
///     d: 2
///     branched: true
///     profile:
///       - {q: 0, jet: 3, very: 3}
///       - {q: 1, jet: 2, very: 2}
///
/// or a catalog family with its parameters
///
///     family: geiser
///     parameters: {k: 3}
///
/// Unknown keys are rejected and every number must be a decimal integer.
CoveringScenario parse_scenario(const std::string& text, const std::string& source = "<string>");
CoveringScenario load_scenario_file(const std::string& path);

}  // namespace cyccov::cli
