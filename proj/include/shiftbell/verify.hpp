#pragma once

// Self-check suite behind `shiftbell verify`: analytic identities plus
// reduced-size Monte Carlo comparisons against the closed-form laws.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "shiftbell/analytics.hpp"
#include "shiftbell/montecarlo.hpp"

namespace shiftbell {

struct VerifyOptions {
  std::uint64_t n = 20000;  // trials per Monte Carlo point
  std::uint64_t seed = 0;
  Parallelism par;
  // Fault injection for exercising the suite itself.
  bool flip_bob_fixed_sign = false;
  HeavisideAtZero heaviside_at_zero = HeavisideAtZero::Zero;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;   // worst deviation, or the checked quantity
  double tolerance = 0.0;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

// One "PASS|FAIL name observed=.. tol=.. detail" line per check.
void print_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace shiftbell
