// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "fqg/engine.hpp"
#include "fqg/group_algebra.hpp"

using namespace fqg;

namespace {

// d1_group(m) has order 2^{m+2}
GroupAlgebra algebra(unsigned m) { return GroupAlgebra(d1_group(m), make_field(5, 1)); }

AlgebraElement random_element(const GroupAlgebra& FG, std::mt19937_64& rng) {
  std::uniform_int_distribution<Coeff> dist(0, 4);
  std::vector<Coeff> c(FG.dimension());
  for (auto& x : c) x = dist(rng);
  return FG.from_coeffs(std::move(c));
}

void BM_ga_mul(benchmark::State& state) {
  const auto FG = algebra(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto x = random_element(FG, rng), y = random_element(FG, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ga_mul(x, y));
  state.SetLabel("|G|=" + std::to_string(FG.dimension()));
}

void BM_ga_mul_serial(benchmark::State& state) {
  const auto FG = algebra(static_cast<unsigned>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto x = random_element(FG, rng), y = random_element(FG, rng);
  for (auto _ : state) benchmark::DoNotOptimize(ga_mul_serial(x, y));
  state.SetLabel("|G|=" + std::to_string(FG.dimension()));
}

// whole decomposition; range(1) = thread count, 0 for the OpenMP default
void BM_decompose(benchmark::State& state) {
  const auto FG = algebra(static_cast<unsigned>(state.range(0)));
  const int saved = omp_get_max_threads();
  if (state.range(1) > 0) omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(FG));
  omp_set_num_threads(saved);
  state.SetLabel("|G|=" + std::to_string(FG.dimension()) + " threads=" +
                 std::to_string(state.range(1) > 0 ? state.range(1) : saved));
}

}  // namespace

BENCHMARK(BM_ga_mul)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ga_mul_serial)->DenseRange(3, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_decompose)->ArgsProduct({{4, 5}, {1, 0}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
