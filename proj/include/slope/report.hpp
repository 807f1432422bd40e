#pragma once

#include <string>
#include <vector>

#include "slope/scenario.hpp"

// Deterministic plain-text reports, CSV sweeps and destabilizer-scan listings
// over parsed scenarios, plus the exit-code mapping shared with the CLI.

namespace slope {

struct RunResult {
  std::string text;
  int exit_code = 0;
};

// 0: StableAgainst / SemistableOnly, 2: StrictlyUnstable, 3: Inconclusive.
int verdict_exit_code(VerdictKind k);

// Decimal rendering of an exact rational, rounded to 12 significant digits
// (half away from zero), trailing zeros stripped; scientific notation outside
// [1e-4, 1e12). Deterministic.
std::string approx12(const Rational& r);

// RFC-4180 style quoting: wraps in double quotes when the value contains a
// comma, quote or newline.
std::string csv_quote(const std::string& s);

// Full analysis report for one scenario. Exit code reflects the verdict; a
// curve-in-nfold scenario without ambient totals yields a slopes-only report
// with an Inconclusive verdict.
RunResult run_scenario(const Scenario& s);

// One row per requested parameter, exact columns plus 12-digit decimals and a
// validity flag; rows outside the certified range (or outside the span) are
// flagged, never fatal. An empty grid yields just the header.
std::string scenario_csv(const Scenario& s, const std::vector<Rational>& grid);

// Ranked search for destabilizing invariant subschemes of a toric scenario's
// polygon. Exit code 2 when the top candidate has strictly negative Futaki
// invariant, 0 otherwise (including budget 0, which examines nothing).
RunResult scan_scenario(const Scenario& s, long budget);

}  // namespace slope
