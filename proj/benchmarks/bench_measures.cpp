#include <benchmark/benchmark.h>

#include "fcoh/measures.hpp"

namespace {

void BM_Cmax(benchmark::State& state) {
  const auto rho = fcoh::random_density(static_cast<std::size_t>(state.range(0)), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::c_max(rho));
}
BENCHMARK(BM_Cmax)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_RelativeEntropyCoherence(benchmark::State& state) {
  const auto rho = fcoh::random_density(static_cast<std::size_t>(state.range(0)), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::relative_entropy_coherence(rho));
}
BENCHMARK(BM_RelativeEntropyCoherence)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

}  // namespace
