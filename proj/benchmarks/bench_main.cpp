#include <benchmark/benchmark.h>

#include "qnsd/descent.hpp"
#include "qnsd/linalg.hpp"
#include "qnsd/optimizer.hpp"
#include "qnsd/random.hpp"

namespace {

using namespace qnsd;

void BM_Factorize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Matrix a = gen::spd_matrix(rng, n).matrix();
  for (auto _ : state) benchmark::DoNotOptimize(factorize(a));
}
BENCHMARK(BM_Factorize)->RangeMultiplier(2)->Range(2, 64);

void BM_SpectralNorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const Matrix a = gen::uniform_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_norm(a));
}
BENCHMARK(BM_SpectralNorm)->RangeMultiplier(2)->Range(2, 32);

void BM_SteepestDirection(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const SpdMatrix b = gen::spd_matrix(rng, n);
  const Vector g = gen::normal_vector(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(steepest_direction(g, b));
}
BENCHMARK(BM_SteepestDirection)->RangeMultiplier(2)->Range(2, 64);

void BM_BruteForceMin(benchmark::State& state) {
  Rng rng(4);
  const SpdMatrix b = gen::spd_matrix(rng, 3, gen::kOracleSpdShift);
  const Vector g = gen::normal_vector(rng, 3);
  const BruteForceOptions opts{.samples = static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_min(g, b, opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BruteForceMin)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_MinimizeRosenbrock(benchmark::State& state) {
  const Objective rosen = make_rosenbrock();
  const auto method = state.range(0) == 0 ? Method::kQuasiNewton : Method::kSteepestDescent;
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimize(rosen, Vector{-1.2, 1.0}, method, {}));
  }
}
BENCHMARK(BM_MinimizeRosenbrock)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
