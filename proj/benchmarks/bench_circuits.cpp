#include <benchmark/benchmark.h>

#include <random>

#include "fcoh/circuits.hpp"

namespace {

fcoh::SignDiagonalUnitary random_unitary(std::size_t k) {
  std::mt19937_64 rng(k);
  std::vector<int> s(std::size_t{1} << k, 1);
  for (std::size_t i = 1; i < s.size(); ++i) s[i] = (rng() & 1u) ? -1 : 1;
  return fcoh::SignDiagonalUnitary::from_signs(s);
}

void BM_Synthesize(benchmark::State& state) {
  const auto u = random_unitary(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::synthesize(u));
}
BENCHMARK(BM_Synthesize)->DenseRange(2, 10, 2);

void BM_ToMatrix(benchmark::State& state) {
  const auto c = fcoh::synthesize(random_unitary(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(fcoh::to_matrix(c));
}
BENCHMARK(BM_ToMatrix)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

}  // namespace
