#include <benchmark/benchmark.h>

#include "fcoh/faithful.hpp"

namespace {

void BM_IsFaithful(benchmark::State& state) {
  const auto rho = fcoh::random_density(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::is_faithful(rho));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (state.range(0) - 1)));
}
BENCHMARK(BM_IsFaithful)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_ScreenReduced(benchmark::State& state) {
  const auto rho = fcoh::random_density(static_cast<std::size_t>(state.range(0)), 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::screen_reduced(rho));
}
BENCHMARK(BM_ScreenReduced)->DenseRange(4, 20, 4)->Unit(benchmark::kMicrosecond);

void BM_PhaseAscent(benchmark::State& state) {
  const auto rho = fcoh::random_density(static_cast<std::size_t>(state.range(0)), 3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::phase_ascent(rho));
}
BENCHMARK(BM_PhaseAscent)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_DecomposeWitness(benchmark::State& state) {
  const auto psi = fcoh::random_pure(static_cast<std::size_t>(state.range(0)), 3);
  std::vector<fcoh::Complex> amps;
  for (auto z : psi.amplitudes()) amps.push_back(std::abs(z));
  const auto real_psi = fcoh::PureState::normalized(amps);
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::decompose_witness(real_psi));
}
BENCHMARK(BM_DecomposeWitness)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);

}  // namespace
