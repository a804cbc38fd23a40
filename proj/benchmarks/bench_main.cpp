#include <benchmark/benchmark.h>

#include "geomcrystal/loop_group.hpp"
#include "geomcrystal/parametrization.hpp"
#include "geomcrystal/tableau.hpp"
#include "geomcrystal/tropical.hpp"

using namespace geomcrystal;

static void BM_PromoteRectangles(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto all = rectangular_tableaux(n, 2, 3);
  for (auto _ : state)
    for (const auto& t : all) benchmark::DoNotOptimize(promote(t));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_PromoteRectangles)->Arg(4)->Arg(5)->Arg(6);

static void BM_AffineRaise(benchmark::State& state) {
  auto all = rectangular_tableaux(5, 2, 3);
  for (auto _ : state)
    for (const auto& t : all) benchmark::DoNotOptimize(affine_op(t, 0, Dir::Raise));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(all.size()));
}
BENCHMARK(BM_AffineRaise);

static void BM_PluckerTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  auto p = random_point(rng, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(GrassmannPoint(p.M.matrix()));
}
BENCHMARK(BM_PluckerTable)->Arg(4)->Arg(6)->Arg(8);

static void BM_ThetaRoundtrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  auto x = random_rectangle(rng, n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(theta_inverse(theta(x)));
}
BENCHMARK(BM_ThetaRoundtrip)->Arg(4)->Arg(6);

static void BM_BuildSymbolicPromotion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    SymbolicContext ctx(n, 2);
    benchmark::DoNotOptimize(ctx.map(MapId::PR).outputs.size());
  }
}
BENCHMARK(BM_BuildSymbolicPromotion)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_TropicalPromotion(benchmark::State& state) {
  TropicalCrystal tc(5, 2);
  std::vector<long> B = {1, 2, 3, 0, 1, 2};
  tc.pr(B, 3);
  for (auto _ : state) benchmark::DoNotOptimize(tc.pr(B, 3));
}
BENCHMARK(BM_TropicalPromotion);

static void BM_ValuationProbe(benchmark::State& state) {
  SymbolicContext ctx(5, 2);
  const auto& m = ctx.map(MapId::Decoration);
  TropicalEnv env;
  long a = -2;
  for (const auto& v : m.inputs) env[v] = (a++ % 5);
  for (auto _ : state) benchmark::DoNotOptimize(valuation_probe(m.outputs[0], env));
}
BENCHMARK(BM_ValuationProbe)->Unit(benchmark::kMicrosecond);

static void BM_GMatrixDeterminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  auto p = random_point(rng, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(g_matrix(p)));
}
BENCHMARK(BM_GMatrixDeterminant)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMicrosecond);

static void BM_TropTheoremSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_trop_theorems(4, 2, 2, 1).passed());
}
BENCHMARK(BM_TropTheoremSweep)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
