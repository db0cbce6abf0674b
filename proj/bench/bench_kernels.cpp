#include <benchmark/benchmark.h>

#include <map>

#include "spherelevels/arrangement_io.hpp"
#include "spherelevels/kernels.hpp"

using namespace spherelevels;

namespace {

const ArrangementGraph& graph(int n) {
  static std::map<int, ArrangementGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, build_graph(random_arrangement(2, n, RandomSeed{1}))).first;
  }
  return it->second;
}

template <auto Kernel>
void level_profiles(benchmark::State& state) {
  const auto& g = graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

template <auto Kernel>
void distance_table(benchmark::State& state) {
  const auto& g = graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(g));
}

template <auto Kernel>
void mc_qk(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(10, 2, static_cast<std::uint64_t>(state.range(0)),
                                    RandomSeed{2}, 64));
  }
}

template <auto Kernel>
void mc_level(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(12, 3, static_cast<std::uint64_t>(state.range(0)),
                                    RandomSeed{3}, 64));
  }
}

}  // namespace

BENCHMARK(level_profiles<kernels::serial::all_level_profiles>)->Arg(20)->Arg(40);
BENCHMARK(level_profiles<kernels::omp::all_level_profiles>)->Arg(20)->Arg(40);
BENCHMARK(distance_table<kernels::serial::distance_table>)->Arg(20)->Arg(40);
BENCHMARK(distance_table<kernels::omp::distance_table>)->Arg(20)->Arg(40);
BENCHMARK(mc_qk<kernels::serial::mc_qk_histogram>)->Arg(100000);
BENCHMARK(mc_qk<kernels::omp::mc_qk_histogram>)->Arg(100000);
BENCHMARK(mc_level<kernels::serial::mc_level_moments>)->Arg(500);
BENCHMARK(mc_level<kernels::omp::mc_level_moments>)->Arg(500);

BENCHMARK_MAIN();
