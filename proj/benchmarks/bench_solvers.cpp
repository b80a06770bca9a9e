#include <benchmark/benchmark.h>

#include <random>

#include "tds/enumerate.hpp"
#include "tds/families.hpp"
#include "tds/hypergraph.hpp"
#include "tds/solver.hpp"

using namespace tds;

namespace {

Graph sparse_connected(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto edges = random_tree(n, rng).edges();
  std::bernoulli_distribution coin(2.0 / n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

}  // namespace

static void BM_GrundyTotal(benchmark::State& state) {
  const Graph g = sparse_connected(static_cast<int>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(grundy_total_domination(g).value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GrundyTotal)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_GrundyTotalParallel(benchmark::State& state) {
  const Graph g = sparse_connected(static_cast<int>(state.range(0)), 42);
  SolverOptions opts;
  opts.parallel_first_move = true;
  for (auto _ : state) benchmark::DoNotOptimize(grundy_total_domination(g, opts).value);
}
BENCHMARK(BM_GrundyTotalParallel)->Arg(18)->Arg(22)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_GameCycle(benchmark::State& state) {
  const Graph g = cycle_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(game_total_domination(g).value);
}
BENCHMARK(BM_GameCycle)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_TotalDomination(benchmark::State& state) {
  const Graph g = sparse_connected(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(total_domination_number(g).value);
}
BENCHMARK(BM_TotalDomination)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_StrongMatching(benchmark::State& state) {
  const Graph g = sparse_connected(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(semistrong_matching_number(g).value);
}
BENCHMARK(BM_StrongMatching)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

static void BM_ConnectedEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(connected_graphs(static_cast<int>(state.range(0))).size());
}
BENCHMARK(BM_ConnectedEnumeration)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_CubicEnumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(connected_regular_graphs(static_cast<int>(state.range(0)), 3).size());
}
BENCHMARK(BM_CubicEnumeration)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_GrundyCovering(benchmark::State& state) {
  const Hypergraph h = open_neighborhood_hypergraph(sparse_connected(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(grundy_covering_number(h).value);
}
BENCHMARK(BM_GrundyCovering)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
