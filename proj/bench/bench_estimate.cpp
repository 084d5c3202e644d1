// Serial reference vs OpenMP kernel for one correlation estimate.
//   ./bench_estimate --benchmark_filter=two-share

#include <benchmark/benchmark.h>

#include "shiftbell/montecarlo.hpp"

using namespace shiftbell;

namespace {

ProtocolSpec protocol_for(int index) {
  switch (index) {
    case 0: return ProtocolSpec::plain();
    case 1: return ProtocolSpec::fixed_shift(kHalfPi);
    case 2: return ProtocolSpec::random_shift();
    case 3: return ProtocolSpec::two_share();
    case 4: return ProtocolSpec::adaptive(3);
    default: return ProtocolSpec::quantum();
  }
}

constexpr std::uint64_t kTrials = 200000;

void BM_Serial(benchmark::State& state) {
  const auto p = protocol_for(static_cast<int>(state.range(0)));
  state.SetLabel(std::string(p.name()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_correlation_serial(p, PolarAngle(0.3), PolarAngle(1.9), kTrials, 1));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTrials));
}

void BM_Parallel(benchmark::State& state) {
  const auto p = protocol_for(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  state.SetLabel(std::string(p.name()) + " threads=" + std::to_string(threads));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_correlation(p, PolarAngle(0.3), PolarAngle(1.9), kTrials, 1, Parallelism{threads}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * kTrials));
}

}  // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
