#include <cstdio>

#include "slope/refsuite.hpp"

// Prints one line per built-in reference check; exits nonzero if any fails.
int main() {
  bool all = true;
  for (const slope::CriterionResult& r : slope::run_reference_suite()) {
    std::puts(slope::format_criterion_line(r).c_str());
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
