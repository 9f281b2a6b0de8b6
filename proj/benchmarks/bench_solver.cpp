#include <benchmark/benchmark.h>

#include "ctx/coupling_lp.hpp"
#include "ctx/criteria.hpp"
#include "ctx/oracle.hpp"
#include "ctx/rational_lp.hpp"
#include "ctx/system.hpp"

namespace {

ctx::System seeded(int rank, bool consistent) { return ctx::random_system(42, ctx::CyclicShape{rank}, consistent); }

void BM_BuildLp(benchmark::State& state) {
  const auto sys = seeded(static_cast<int>(state.range(0)), true);
  for (auto _ : state) benchmark::DoNotOptimize(ctx::build_lp(sys, ctx::Mode::CbD));
}
BENCHMARK(BM_BuildLp)->DenseRange(2, 6);

void BM_ExactSolve(benchmark::State& state) {
  const auto lp = ctx::build_lp(seeded(static_cast<int>(state.range(0)), state.range(1) != 0), ctx::Mode::CbD);
  const auto m = lp.matrix();
  const auto p = lp.rhs();
  for (auto _ : state) benchmark::DoNotOptimize(ctx::solve_feasibility(m, p));
}
BENCHMARK(BM_ExactSolve)->ArgsProduct({{2, 3, 4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_FloatSolve(benchmark::State& state) {
  const auto lp = ctx::build_lp(seeded(static_cast<int>(state.range(0)), true), ctx::Mode::CbD);
  const auto m = lp.matrix();
  const auto p = lp.rhs();
  for (auto _ : state) benchmark::DoNotOptimize(ctx::float_feasibility(m, p));
}
BENCHMARK(BM_FloatSolve)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State& state) {
  const auto sys = seeded(4, true);
  for (auto _ : state) benchmark::DoNotOptimize(ctx::analyze(sys, ctx::Mode::Traditional));
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

void BM_Chsh(benchmark::State& state) {
  const auto sys = seeded(4, true);
  for (auto _ : state) benchmark::DoNotOptimize(ctx::chsh_criterion(sys));
}
BENCHMARK(BM_Chsh);

}  // namespace

BENCHMARK_MAIN();
