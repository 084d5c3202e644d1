#pragma once

// Seeded Monte Carlo estimation of correlation functions.
//
// Trial i draws its shares from RngStream(seed, i), and products are summed
// as exact integers, so results are bit-identical for every thread count.
// The *_serial functions are the single-threaded reference kept for tests
// and benchmarks.

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftbell/analytics.hpp"
#include "shiftbell/angles.hpp"
#include "shiftbell/protocols.hpp"
#include "shiftbell/rng.hpp"

namespace shiftbell {

// Worker threads for the parallel kernels; 0 keeps the OpenMP default.
struct Parallelism {
  int threads = 0;
};

struct CorrelationEstimate {
  PolarAngle a;
  PolarAngle b;
  SeparationAngle theta;
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
  // Exact sum of the n products alpha*beta.
  std::int64_t product_sum = 0;
};

// Mean and standard error sqrt((1 - mean^2) / n) from an exact product sum.
CorrelationEstimate make_estimate(PolarAngle a, PolarAngle b, std::int64_t product_sum, std::uint64_t n);

// Sum of trial_product(rng_i) over trials i in [0, n), rng_i = RngStream(seed, i).
// trial_product must return +1 or -1 and be safe to call concurrently.
template <class TrialProduct>
std::int64_t sum_products(std::uint64_t n, std::uint64_t seed, Parallelism par, const TrialProduct& trial_product);

template <class TrialProduct>
std::int64_t sum_products_serial(std::uint64_t n, std::uint64_t seed, const TrialProduct& trial_product) {
  std::int64_t sum = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    RngStream rng(seed, i);
    sum += trial_product(rng);
  }
  return sum;
}

// Throws UsageError when n == 0.
CorrelationEstimate estimate_correlation(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b, std::uint64_t n,
                                         std::uint64_t seed, Parallelism par = {});
CorrelationEstimate estimate_correlation_serial(const ProtocolSpec& protocol, PolarAngle a, PolarAngle b,
                                                std::uint64_t n, std::uint64_t seed);

// Closed-form law matching a protocol, if one exists.
std::optional<CorrelationLaw> reference_law(const ProtocolSpec& protocol);

struct CurveSweep {
  ProtocolSpec protocol;
  std::vector<SeparationAngle> grid;
  std::vector<CorrelationEstimate> estimates;
  std::optional<CorrelationLaw> analytic_reference;
  std::uint64_t seed = 0;
};

// Uniform grid theta_j = j pi / (grid_points - 1), a = 0, b = theta_j.
// Point j is sub-seeded with derive_seed(seed, j).
// Throws UsageError when grid_points < 2 or n_per_point == 0.
CurveSweep sweep_curve(const ProtocolSpec& protocol, int grid_points, std::uint64_t n_per_point, std::uint64_t seed,
                       Parallelism par = {});

// max_j |mean_j - law(theta_j)|. Throws UsageError without a reference law.
double max_abs_deviation(const CurveSweep& sweep);

}  // namespace shiftbell

#include "shiftbell/detail/montecarlo_kernel.hpp"
