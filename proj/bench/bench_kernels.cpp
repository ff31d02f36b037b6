// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "tennis/monte_carlo.hpp"
#include "tennis/sweep.hpp"

using namespace tennis;

namespace {

SimConfig sim_config(benchmark::State& state) {
  SimConfig cfg;
  cfg.n_games = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 1;
  return cfg;
}

void BM_SimulateSerial(benchmark::State& state) {
  const auto cfg = sim_config(state);
  const auto schedule = ServeSchedule::single_serve_after(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_metrics_serial(schedule, {0.666, 0.52}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto cfg = sim_config(state);
  const auto schedule = ServeSchedule::single_serve_after(3);
  omp_set_num_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_metrics(schedule, {0.666, 0.52}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

SweepSpec fine_grid() {
  SweepSpec spec;
  spec.variable = SweepVariable::PF;
  spec.step = 0.0005;
  spec.fixed_ps = 0.5;
  return spec;
}

const std::vector<RuleKind> kAllGames{RuleKind::A, RuleKind::Bj, RuleKind::T, RuleKind::B,
                                      RuleKind::C};

void BM_SweepSerial(benchmark::State& state) {
  const auto spec = fine_grid();
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(kAllGames, spec));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto spec = fine_grid();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(kAllGames, spec));
}

}  // namespace

BENCHMARK(BM_SimulateSerial)->Arg(200'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateParallel)
    ->ArgsProduct({{200'000}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->DenseRange(1, 8, 1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
