#include <benchmark/benchmark.h>

#include "lie_euler/adjoint.hpp"
#include "lie_euler/generators.hpp"
#include "lie_euler/optimal.hpp"
#include "lie_euler/residual.hpp"

using namespace lie_euler;

static void BM_BracketTable(benchmark::State& state) {
  const auto& gens = standard_generators();
  for (auto _ : state) {
    StructureConstants sc = structure_constants_from_fields(gens);
    benchmark::DoNotOptimize(sc);
  }
}
BENCHMARK(BM_BracketTable);

static void BM_AdjointClosed(benchmark::State& state) {
  for (auto _ : state) {
    for (int i = 1; i <= 13; ++i) benchmark::DoNotOptimize(adjoint_closed(i, 0.37).m);
  }
}
BENCHMARK(BM_AdjointClosed);

static void BM_Normalize(benchmark::State& state) {
  AlgebraElement a{};
  a[0] = 1.0;
  a[4] = -0.5;
  a[7] = 2.0;
  a[8] = 0.5;
  for (auto _ : state) {
    NormalizationResult r = normalize(a);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Normalize);

static void BM_ResidualSweep(benchmark::State& state) {
  EulerSystem sys;
  Grid grid = Grid::default_grid();
  double n = 1.0 / static_cast<double>(state.range(0) - 1);
  for (auto& h : grid.h) h = n;
  SolutionField f = control_trig();
  for (auto _ : state) {
    ResidualReport r = residual(f, sys, grid);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ResidualSweep)->Arg(9)->Arg(17);

BENCHMARK_MAIN();
