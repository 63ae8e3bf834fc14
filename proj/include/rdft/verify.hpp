#pragma once

#include <string>
#include <vector>

// Self-contained invariant suites: each check recomputes a mathematical
// identity the library is supposed to satisfy and reports the measured
// residual against a fixed threshold.  All grids and random draws are
// deterministic, so repeated runs produce identical numbers.

namespace rdft {

struct CheckResult {
  std::string name;
  double residual;
  double threshold;
  bool pass;
};

std::vector<CheckResult> suite_specfun();
std::vector<CheckResult> suite_kernel();
std::vector<CheckResult> suite_downsample();
std::vector<CheckResult> suite_transform();

// name in {"specfun", "kernel", "downsample", "transform", "all"}.
std::vector<CheckResult> run_suite(const std::string& name);

}  // namespace rdft
