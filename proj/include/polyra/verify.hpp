#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyra::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail; // first failure, or a short summary when passing
};

struct Options {
  /// Full runs the exhaustive-adversary searches at their contract knobs;
  /// fast substitutes cheaper grids that still include the worst cases.
  bool full = false;
  /// Test hook: scales every numeric tolerance. 1.0 for real verification;
  /// anything else is a deliberate tamper used as a negative control.
  double tolerance_scale = 1.0;
  std::uint64_t seed = 1;
  /// 0 runs everything; 1..9 restricts to a single criterion.
  int only_criterion = 0;
};

/// Runs the whole acceptance suite in order. Each entry is one criterion.
std::vector<CheckResult> run_acceptance_checks(const Options& opts);

} // namespace polyra::verify
