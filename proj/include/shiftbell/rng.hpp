#pragma once

// Counter-based random numbers for order-independent Monte Carlo.
//
// Every trial owns an RngStream keyed by (seed, trial index). Its draws are
// a pure function of (seed, trial index, draw index), so a trial produces
// the same shares no matter which thread runs it or in what order.

#include <array>
#include <cstdint>

namespace shiftbell {

// Philox4x32 with 10 rounds (Salmon et al., SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key);

// SplitMix64 finalizer; used to derive independent sub-seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Seed for sub-experiment `index` (grid point, CHSH pair, ...) of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t counter);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  // Next uniform double in [0, 1) with 53 random bits.
  double uniform();

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t counter_;
  std::uint32_t block_ = 0;
  PhiloxCounter buffer_{};
  int used_ = 4;
};

}  // namespace shiftbell
