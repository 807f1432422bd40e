#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slope/errors.hpp"
#include "slope/refsuite.hpp"
#include "slope/report.hpp"

namespace {

// Reports are byte-deterministic by default; the timestamp footer is strictly
// opt-in so golden comparisons stay stable.
std::string timestamp_line(bool csv_style) {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(csv_style ? "# generated: " : "generated: ") + buf + "\n";
}

std::vector<slope::Rational> parse_grid(const std::string& grid) {
  std::vector<slope::Rational> out;
  std::string cur;
  for (std::size_t i = 0; i <= grid.size(); ++i) {
    if (i == grid.size() || grid[i] == ',') {
      if (!cur.empty()) out.push_back(slope::Rational::parse(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(grid[i]))) {
      cur += grid[i];
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slopetool: exact slope-stability analysis of polarized varieties"};
  app.require_subcommand(1);

  std::string path;
  std::string grid = "1/4,1/2,3/4,1";
  std::string only;
  long budget = 2;
  bool footer = false;

  CLI::App* run = app.add_subcommand("run", "analyze one scenario file and print a report");
  run->add_option("scenario", path, "scenario file")->required();
  run->add_flag("--footer-timestamps", footer, "append a generation timestamp");

  CLI::App* verify =
      app.add_subcommand("verify-paper", "run the built-in reference checks and print "
                                         "one PASS/FAIL line per check");
  verify->add_option("--only", only, "restrict to one check (by number or name)");

  CLI::App* csv = app.add_subcommand("csv", "emit an exact CSV sweep over parameter values");
  csv->add_option("scenario", path, "scenario file")->required();
  csv->add_option("--grid", grid, "comma-separated rational parameters");
  csv->add_flag("--footer-timestamps", footer, "append a generation timestamp comment");

  CLI::App* scan =
      app.add_subcommand("scan", "search a toric scenario for destabilizing subschemes");
  scan->add_option("scenario", path, "scenario file")->required();
  scan->add_option("--budget", budget, "facet-subset and multiplicity budget");
  scan->add_flag("--footer-timestamps", footer, "append a generation timestamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed()) {
      slope::RunResult r = slope::run_scenario(slope::load_scenario_file(path));
      std::cout << r.text;
      if (footer) std::cout << timestamp_line(false);
      return r.exit_code;
    }
    if (verify->parsed()) {
      std::optional<std::string> sel;
      if (!only.empty()) sel = only;
      bool all = true;
      for (const slope::CriterionResult& r : slope::run_reference_suite(sel)) {
        std::cout << slope::format_criterion_line(r) << "\n";
        all = all && r.pass;
      }
      return all ? 0 : 1;
    }
    if (csv->parsed()) {
      slope::Scenario s = slope::load_scenario_file(path);
      std::cout << slope::scenario_csv(s, parse_grid(grid));
      if (footer) std::cout << timestamp_line(true);
      return 0;
    }
    if (scan->parsed()) {
      slope::RunResult r = slope::scan_scenario(slope::load_scenario_file(path), budget);
      std::cout << r.text;
      if (footer) std::cout << timestamp_line(false);
      return r.exit_code;
    }
  } catch (const slope::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
