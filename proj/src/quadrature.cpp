#include "shiftbell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "shiftbell/errors.hpp"

namespace shiftbell {

namespace {

using Kronrod15 = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss7 = boost::math::quadrature::gauss<double, 7>;

constexpr int kMaxDepth = 40;

// One 7/15 Gauss-Kronrod panel on [lo, hi]. Node tables hold the
// non-negative half; even indices are shared with the 7-point Gauss rule.
QuadratureResult panel(const std::function<double(double)>& f, double lo, double hi) {
  const auto& x = Kronrod15::abscissa();
  const auto& wk = Kronrod15::weights();
  const auto& wg = Gauss7::weights();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  const double f0 = f(mid);
  double kronrod = f0 * wk[0];
  double gauss = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double pair = f(mid + half * x[i]) + f(mid - half * x[i]);
    kronrod += pair * wk[i];
    if (i % 2 == 0) gauss += pair * wg[i / 2];
  }
  return {kronrod * half, std::fabs(kronrod - gauss) * half};
}

QuadratureResult adapt(const std::function<double(double)>& f, double lo, double hi, double tol, int depth) {
  const QuadratureResult whole = panel(f, lo, hi);
  if (whole.error_estimate <= tol || depth >= kMaxDepth) return whole;
  const double mid = 0.5 * (lo + hi);
  const QuadratureResult left = adapt(f, lo, mid, 0.5 * tol, depth + 1);
  const QuadratureResult right = adapt(f, mid, hi, 0.5 * tol, depth + 1);
  return {left.value + right.value, left.error_estimate + right.error_estimate};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double lo, double hi,
                           std::vector<double> breakpoints, double abs_tol) {
  if (!(abs_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw DomainError("quadrature interval must be finite and ordered");
  }

  std::vector<double> nodes{lo};
  std::sort(breakpoints.begin(), breakpoints.end());
  for (double x : breakpoints) {
    if (x > nodes.back() && x < hi) nodes.push_back(x);
  }
  nodes.push_back(hi);

  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double width = nodes[i + 1] - nodes[i];
    if (width <= 0.0) continue;
    // Tolerance shared in proportion to width.
    const QuadratureResult piece = adapt(f, nodes[i], nodes[i + 1], abs_tol * width / (hi - lo), 0);
    if (!std::isfinite(piece.value)) throw NumericError("quadrature produced a non-finite value");
    total.value += piece.value;
    total.error_estimate += piece.error_estimate;
  }
  if (total.error_estimate > abs_tol) {
    throw NumericError("quadrature did not converge: error estimate " + std::to_string(total.error_estimate) +
                       " exceeds tolerance " + std::to_string(abs_tol));
  }
  return total;
}

}  // namespace shiftbell
