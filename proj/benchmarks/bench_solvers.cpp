#include <benchmark/benchmark.h>

#include "minvc/anneal.hpp"
#include "minvc/exact.hpp"
#include "minvc/graph.hpp"
#include "minvc/lp.hpp"
#include "minvc/md.hpp"
#include "minvc/model.hpp"

using namespace minvc;

namespace {

Graph instance(int n, double c) { return generate_er({n, c, 42}); }

void BM_GenerateEr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_er({n, 3.0, seed++}));
  }
}
BENCHMARK(BM_GenerateEr)->Arg(500)->Arg(2000);

void BM_LpRelaxation(benchmark::State& state) {
  Graph g = instance(static_cast<int>(state.range(0)),
                     static_cast<double>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp_relaxation(g));
  }
}
BENCHMARK(BM_LpRelaxation)->Args({500, 3})->Args({2000, 3})->Args({2000, 4});

void BM_SaRead(benchmark::State& state) {
  Graph g = instance(500, 3.0);
  IsingModel m = qubo_to_ising(build_minvc_qubo(g, 1.0));
  SaConfig cfg;
  cfg.num_reads = 1;
  cfg.sweeps = static_cast<int>(state.range(0));
  for (auto _ : state) {
    cfg.seed++;
    benchmark::DoNotOptimize(solve_sa(m, cfg));
  }
}
BENCHMARK(BM_SaRead)->Arg(100)->Arg(1000);

void BM_MdSteps(benchmark::State& state) {
  Graph g = instance(500, 3.0);
  IsingModel m = qubo_to_ising(build_minvc_qubo(g, 2.0));
  MdConfig cfg;
  cfg.total_steps = state.range(0);
  for (auto _ : state) {
    cfg.seed++;
    benchmark::DoNotOptimize(run_md(m, cfg));
  }
}
BENCHMARK(BM_MdSteps)->Unit(benchmark::kMillisecond)->Arg(1000)->Arg(10000);

void BM_ExactSolve(benchmark::State& state) {
  Graph g = instance(static_cast<int>(state.range(0)), 3.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact(g));
  }
}
BENCHMARK(BM_ExactSolve)->Unit(benchmark::kMillisecond)->Arg(60)->Arg(120);

}  // namespace

BENCHMARK_MAIN();
