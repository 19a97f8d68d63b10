#include <benchmark/benchmark.h>

#include <random>

#include "pencilrank/btd.hpp"
#include "pencilrank/kronecker.hpp"
#include "pencilrank/minimal_ranks.hpp"
#include "pencilrank/numeric_kronecker.hpp"
#include "pencilrank/sequences.hpp"

using namespace pencilrank;

namespace {

Pencil random_pencil(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-3, 3);
  MatrixQ a(n, n), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = Rational(d(rng));
      b(i, j) = Rational(d(rng));
    }
  return Pencil(a, b);
}

Pencil mixed_pencil() {
  return direct_sum(direct_sum(blocks::column_block(1), blocks::jordan(2, Rational(1))),
                    direct_sum(blocks::quadratic(1, Rational(0), Rational(1)), blocks::row_block(1)));
}

void BM_KroneckerStructure(benchmark::State& state) {
  const Pencil p = random_pencil(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(kronecker_structure(p, Field::real));
}
BENCHMARK(BM_KroneckerStructure)->Arg(3)->Arg(4)->Arg(6);

void BM_MinimalRanksMixed(benchmark::State& state) {
  const Pencil p = mixed_pencil();
  for (auto _ : state) benchmark::DoNotOptimize(minimal_ranks(p, Field::real));
}
BENCHMARK(BM_MinimalRanksMixed);

void BM_MinimalRanksOracle(benchmark::State& state) {
  const Pencil p = random_pencil(4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_ranks_oracle(p, Field::real));
}
BENCHMARK(BM_MinimalRanksOracle);

void BM_Staircase(benchmark::State& state) {
  const FloatPencil p = to_float(mixed_pencil(), 1e-8);
  for (auto _ : state) benchmark::DoNotOptimize(staircase_structure(p, Field::real));
}
BENCHMARK(BM_Staircase);

void BM_AlsIterations(benchmark::State& state) {
  const Tensor3 t = pencil_to_tensor(blocks::quadratic(1, Rational(0), Rational(1)));
  AlsConfig config;
  config.max_iters = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(als_approximate(t, 1, 1, 3, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AlsIterations)->Arg(100)->Arg(1000);

void BM_PnDistance(benchmark::State& state) {
  const PnInstance inst = random_pn_instance(6, 6, 4, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pn_distance_squared(inst, 1000));
}
BENCHMARK(BM_PnDistance);

}  // namespace
BENCHMARK_MAIN();
