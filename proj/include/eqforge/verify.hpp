#pragma once

#include <string>
#include <vector>

namespace eqforge::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  bool quick = false;        // replaces the full 120^2 oracle sweep by a sample
  bool inject_fault = false; // test-only: flips one canonical-basis coefficient
};

// Runs the library invariant suite and returns one result per check.
std::vector<CheckResult> run_suite(const Options& opts);

} // namespace eqforge::verify
