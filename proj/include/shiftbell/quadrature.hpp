#pragma once

#include <functional>
#include <vector>

namespace shiftbell {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Adaptive Gauss-Kronrod (7/15) integration of f over [lo, hi], split at
// every breakpoint inside the interval. Breakpoints should sit on the
// integrand's kinks and jumps. Throws NumericError if the summed error
// estimate exceeds abs_tol.
QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           std::vector<double> breakpoints, double abs_tol);

}  // namespace shiftbell
