#include "shiftbell/montecarlo.hpp"

#include <cmath>
#include <string>

#include "shiftbell/errors.hpp"

namespace shiftbell {

namespace {

void check_n(std::uint64_t n) {
  if (n == 0) throw UsageError("sample count must be at least 1");
}

auto trial_product_fn(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b) {
  return [&protocol, a, b](RngStream& rng) -> std::int64_t {
    return sample_trial(protocol, a, b, rng).product().value();
  };
}

}  // namespace

CorrelationEstimate make_estimate(PolarAngle a, PolarAngle b, std::int64_t product_sum, std::uint64_t n) {
  check_n(n);
  CorrelationEstimate e{.a = a, .b = b, .theta = separation(a, b), .n = n, .product_sum = product_sum};
  const double count = static_cast<double>(n);
  e.mean = static_cast<double>(product_sum) / count;
  e.std_error = std::sqrt(std::fmax(0.0, 1.0 - e.mean * e.mean) / count);
  return e;
}

CorrelationEstimate estimate_correlation(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b, std::uint64_t n,
                                         std::uint64_t seed, Parallelism par) {
  check_n(n);
  return make_estimate(a, b, sum_products(n, seed, par, trial_product_fn(protocol, a, b)), n);
}

CorrelationEstimate estimate_correlation_serial(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b,
                                                std::uint64_t n, std::uint64_t seed) {
  check_n(n);
  return make_estimate(a, b, sum_products_serial(n, seed, trial_product_fn(protocol, a, b)), n);
}

std::optional<CorrelationLaw> reference_law(const ProtocolSpec& protocol) {
  switch (protocol.kind()) {
    case ProtocolKind::PlainLhv: return CorrelationLaw::linear();
    case ProtocolKind::FixedShift: return CorrelationLaw::fixed_shift(*protocol.delta());
    case ProtocolKind::RandomShift:
    case ProtocolKind::TwoShare: return CorrelationLaw::averaged_shift();
    case ProtocolKind::QuantumReference: return CorrelationLaw::quantum_cosine();
    case ProtocolKind::AdaptiveK: return std::nullopt;
  }
  return std::nullopt;
}

CurveSweep sweep_curve(const ProtocolSpec& protocol, int grid_points, std::uint64_t n_per_point, std::uint64_t seed,
                       Parallelism par) {
  if (grid_points < 2) throw UsageError("grid needs at least 2 points, got " + std::to_string(grid_points));
  check_n(n_per_point);
  CurveSweep sweep{.protocol = protocol, .analytic_reference = reference_law(protocol), .seed = seed};
  sweep.grid.reserve(grid_points);
  sweep.estimates.reserve(grid_points);
  const PolarAngle a(0.0);
  for (int j = 0; j < grid_points; ++j) {
    // Last point pinned to pi exactly.
    const double theta = j + 1 == grid_points ? kPi : j * kPi / (grid_points - 1);
    sweep.grid.emplace_back(theta);
    sweep.estimates.push_back(
        estimate_correlation(protocol, a, PolarAngle(theta), n_per_point, derive_seed(seed, static_cast<std::uint64_t>(j)), par));
  }
  return sweep;
}

double max_abs_deviation(const CurveSweep& sweep) {
  if (!sweep.analytic_reference) {
    throw UsageError("protocol '" + std::string(sweep.protocol.name()) + "' has no analytic reference law");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < sweep.estimates.size(); ++j) {
    worst = std::fmax(worst, std::fabs(sweep.estimates[j].mean - (*sweep.analytic_reference)(sweep.grid[j])));
  }
  return worst;
}

}  // namespace shiftbell
