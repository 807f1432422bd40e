#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slope/scenario.hpp"

// The built-in reference suite: ten self-contained checks covering exact slope
// values, oracle equivalences, randomized cross-formula agreement and verdict
// behavior. The CLI's verify subcommand prints one line per check.

namespace slope {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// "criterion N: PASS - name: detail" (one line, ASCII, deterministic).
std::string format_criterion_line(const CriterionResult& r);

// The scenario library embedded in the binary; the files under scenarios/
// carry byte-identical text so reports do not depend on the working directory.
struct ShippedScenario {
  std::string file;  // basename under scenarios/
  std::string text;
};
const std::vector<ShippedScenario>& shipped_scenario_texts();
std::vector<Scenario> shipped_scenarios();

// Runs all checks (or the one selected by number or name). An exception inside
// a check fails that check with the message as detail; a selection that
// matches no check throws invalid_input.
std::vector<CriterionResult> run_reference_suite(
    const std::optional<std::string>& only = std::nullopt);

}  // namespace slope
