#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slope/bundles.hpp"
#include "slope/formulas.hpp"
#include "slope/toric.hpp"

// Text scenario files: a line-oriented key = value format with exact "p/q"
// rationals, one scenario per file.  See docs/scenario-format.md.

namespace slope {

enum class ScenarioKind {
  SurfaceCurve,
  Divisor,
  CurveInNfold,
  SmoothCurve,
  Toric,
  Bundle,
  RawProfile,
};

std::string kind_name(ScenarioKind k);

struct SmoothCurveInput {
  long genus = 0;
  Rational degL;
  Rational d;
};

struct ToricInput {
  std::vector<Halfspace> facets;
  ToricSubscheme Z;
};

struct RawProfileInput {
  int dim = 0;
  std::vector<Rational> breaks;
  std::vector<Polynomial> a0, a1;
  SeshadriBound eps = SeshadriBound::unknown();
  Saturation sat = Saturation::Unknown;
};

struct Scenario {
  ScenarioKind kind = ScenarioKind::RawProfile;
  std::string tag;    // short identifier used by --only and report headers
  std::string title;  // optional free text
  std::optional<Rational> c;

  SurfaceCurveData surface;
  DivisorData divisor;
  CurveInNfoldData curve;
  SmoothCurveInput smooth;
  ToricInput toric;
  BundleScenario bundle;
  RawProfileInput raw;
};

// Parses scenario text; throws invalid_input naming the offending field.
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// The profile backing a scenario's verdict, when the kind defines one.
// CurveInNfold without ambient totals has none (slopes-only reporting).
std::optional<SlopeProfile> scenario_profile(const Scenario& s);

// Canonical re-rendering of the parsed inputs (round-trips through the parser).
std::string scenario_echo(const Scenario& s);

}  // namespace slope
