#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "decomatch/adversary.hpp"
#include "decomatch/analysis.hpp"
#include "decomatch/harness.hpp"
#include "decomatch/online.hpp"

using namespace decomatch;

namespace {

Instance random_instance(std::size_t machines, std::size_t jobs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(1e-3, 10.0);
  std::vector<double> speeds(machines);
  for (double& s : speeds) s = value(rng);
  std::vector<double> sizes(jobs);
  for (double& w : sizes) w = value(rng);
  return validate_instance(std::move(speeds), std::move(sizes));
}

void BM_SortedOpt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Instance inst = random_instance(n, n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(sorted_opt(inst).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SortedOpt)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_IntervalRun(benchmark::State& state) {
  const Instance inst = det_ub_sequence(1e-3).instance();
  std::uint64_t trial = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(run_interval_random(inst, 3.55829, 7, trial++).report.alg_value);
}
BENCHMARK(BM_IntervalRun);

void BM_GreedyRun(benchmark::State& state) {
  const Instance inst = det_ub_sequence(1e-3).instance();
  for (auto _ : state) benchmark::DoNotOptimize(run_greedy(inst).report.alg_value);
}
BENCHMARK(BM_GreedyRun);

void BM_LambertW(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambert_w0(x));
    x = x < 1e6 ? x * 1.37 : 0.1;
  }
}
BENCHMARK(BM_LambertW);

void BM_MonteCarlo1k(benchmark::State& state) {
  const Instance inst = greedy_hard_instance(0.2);
  for (auto _ : state)
    benchmark::DoNotOptimize(monte_carlo(inst, 3.55829, 1000, 5,
                                         static_cast<unsigned>(state.range(0)))
                                 .mean_ratio);
}
BENCHMARK(BM_MonteCarlo1k)->Arg(1)->Arg(4);

void BM_DpBestDet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dp_best_det(60));
}
BENCHMARK(BM_DpBestDet);

}  // namespace

BENCHMARK_MAIN();
