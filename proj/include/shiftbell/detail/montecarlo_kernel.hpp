#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace shiftbell {

template <class TrialProduct>
std::int64_t sum_products(std::uint64_t n, std::uint64_t seed, Parallelism par, const TrialProduct& trial_product) {
#ifdef _OPENMP
  const int threads = par.threads > 0 ? par.threads : omp_get_max_threads();
  const auto count = static_cast<std::int64_t>(n);
  std::int64_t sum = 0;
#pragma omp parallel for num_threads(threads) schedule(static) reduction(+ : sum)
  for (std::int64_t i = 0; i < count; ++i) {
    RngStream rng(seed, static_cast<std::uint64_t>(i));
    sum += trial_product(rng);
  }
  return sum;
#else
  (void)par;
  return sum_products_serial(n, seed, trial_product);
#endif
}

}  // namespace shiftbell
