// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_solvers --benchmark_filter=Brute
//
// Instances are fixed by seed so the two variants solve identical inputs.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "msvc/cm_fpt.hpp"
#include "msvc/oracle.hpp"
#include "msvc/vc_fpt.hpp"

namespace {

using msvc::Execution;

msvc::Graph dense_graph(int n, std::uint64_t seed) { return msvc::random_graph(n, 0.5, seed); }

// A clique on n - k vertices plus k vertices joined at random, relabeled.
msvc::Graph near_clique(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<msvc::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((u >= k && v >= k) || coin(rng)) edges.emplace_back(u, v);
  std::vector<msvc::Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return msvc::relabel(msvc::Graph(n, edges), perm);
}

Execution exec_of(const benchmark::State& state) {
  return state.range(1) ? Execution::parallel : Execution::serial;
}

void BM_Brute(benchmark::State& state) {
  const auto g = dense_graph(static_cast<int>(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(msvc::brute_force_msvc(g, 10, exec_of(state)).cost);
}
BENCHMARK(BM_Brute)->ArgsProduct({{8, 9, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

// Three hub vertices; every other vertex picks a random nonempty set of hubs,
// so the cover has size at most 3 and there are at most 7 classes.
msvc::Graph hubs(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> mask(1, 7);
  std::vector<msvc::Edge> edges;
  for (int v = 3; v < n; ++v) {
    const int m = mask(rng);
    for (int h = 0; h < 3; ++h)
      if (m >> h & 1) edges.emplace_back(h, v);
  }
  return msvc::Graph(n, edges);
}

void BM_VcFpt(benchmark::State& state) {
  const auto g = hubs(static_cast<int>(state.range(0)), 23);
  msvc::VcOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(msvc::solve_vc_fpt(g, 7, options).cost);
}
BENCHMARK(BM_VcFpt)->ArgsProduct({{12, 40}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_CmFpt(benchmark::State& state) {
  const auto g = near_clique(static_cast<int>(state.range(0)), 3, 29);
  msvc::CmOptions options;
  options.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(msvc::solve_cm_fpt(g, 3, options).cost);
}
BENCHMARK(BM_CmFpt)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
