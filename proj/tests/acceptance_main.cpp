// Acceptance suite runner: executes every criterion at full strength and
// prints one pass/fail line per criterion. Exits nonzero on any failure.

#include <cstdio>

#include "polyra/verify.hpp"

int main() {
  polyra::verify::Options opts;
  opts.full = true;
  opts.seed = 1;

  const auto results = polyra::verify::run_acceptance_checks(opts);
  bool all_ok = true;
  double total = 0.0;
  for (const auto& r : results) {
    all_ok = all_ok && r.passed;
    total += r.seconds;
    std::printf("[%s] %-32s (%7.2fs)  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.detail.c_str());
  }

  // Negative control: with tampered tolerances at least one criterion must
  // go red, proving the assertions are live.
  polyra::verify::Options tampered = opts;
  tampered.full = false;
  tampered.only_criterion = 2;
  tampered.tolerance_scale = -1.0;
  const auto control = polyra::verify::run_acceptance_checks(tampered);
  const bool control_failed = !control.empty() && !control.front().passed;
  std::printf("[%s] %-32s (%7.2fs)  %s\n", control_failed ? "PASS" : "FAIL",
              "negative control (tampered)", control.empty() ? 0.0 : control.front().seconds,
              control_failed ? "tamper detected as expected" : "tampering went unnoticed");
  all_ok = all_ok && control_failed;

  std::printf("%s in %.2fs\n", all_ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", total);
  return all_ok ? 0 : 1;
}
