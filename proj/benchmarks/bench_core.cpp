#include <benchmark/benchmark.h>

#include <cmath>

#include "copnum/exact_solver.hpp"
#include "copnum/expansion.hpp"
#include "copnum/matching.hpp"
#include "copnum/random_models.hpp"
#include "copnum/strategies.hpp"

using namespace copnum;

namespace {

Graph sample(std::size_t n, double d, std::uint64_t seed = 1) {
  ModelParams mp;
  mp.n = n;
  mp.p = probability_for_degree(n, d);
  mp.seed = seed;
  return gnp(mp);
}

void BM_Gnp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double d = std::pow(std::log(static_cast<double>(n)), 2);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(n, d, ++seed).edge_count());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gnp)->RangeMultiplier(4)->Range(1 << 10, 1 << 14)->Complexity();

void BM_Sphere(benchmark::State& state) {
  const Graph g = sample(20000, 12.0);
  Vertex v = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sphere(g, v, static_cast<Distance>(state.range(0))).size());
    v = (v + 7919) % 20000;
  }
}
BENCHMARK(BM_Sphere)->DenseRange(1, 4);

void BM_AssignWithinRadius(benchmark::State& state) {
  const Graph g = sample(5000, 10.0);
  CounterRng rng(3);
  VertexSet left;
  for (Vertex v = 0; v < 5000; v += 25) left.push_back(v);
  std::vector<Vertex> right(static_cast<std::size_t>(state.range(0)));
  for (auto& c : right) c = static_cast<Vertex>(rng.uniform_below(5000));
  for (auto _ : state) benchmark::DoNotOptimize(assign_within_radius({&g, left, right, 2}).matched);
}
BENCHMARK(BM_AssignWithinRadius)->Arg(200)->Arg(800)->Arg(3200);

void BM_SolvePetersen(benchmark::State& state) {
  const Graph g = petersen_graph();
  for (auto _ : state) benchmark::DoNotOptimize(solve_k(g, static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_SolvePetersen)->DenseRange(1, 3);

void BM_SolveGrid(benchmark::State& state) {
  const Graph g = grid_graph(6, 6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_k(g, 2).size());
}
BENCHMARK(BM_SolveGrid);

void BM_DenseGame(benchmark::State& state) {
  const std::size_t n = 2000;
  const double d = std::pow(std::log(static_cast<double>(n)), 3);
  const Graph g = sample(n, d);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    DenseStrategy cops(g, {2.0, d, 0.0});
    GreedyRobber robber;
    PlayOptions opt;
    opt.seed = ++seed;
    benchmark::DoNotOptimize(play(g, cops, robber, opt).captured());
  }
}
BENCHMARK(BM_DenseGame)->Unit(benchmark::kMillisecond);

void BM_SparseGame(benchmark::State& state) {
  const std::size_t n = 3000;
  const double d = 1.1 * std::log(static_cast<double>(n));
  const Graph g = sample(n, d);
  SparseStrategyConfig cfg;
  cfg.schedule = radius_schedule(d, n, 1.0, 1.0, 4.0);
  cfg.x_set = low_degree_set(g, 0.6, d);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    SparseStrategy cops(g, cfg);
    GreedyRobber robber;
    PlayOptions opt;
    opt.seed = ++seed;
    benchmark::DoNotOptimize(play(g, cops, robber, opt).captured());
  }
}
BENCHMARK(BM_SparseGame)->Unit(benchmark::kMillisecond);

void BM_SparseReport(benchmark::State& state) {
  const std::size_t n = 5000;
  const double d = 1.1 * std::log(static_cast<double>(n));
  const Graph g = sample(n, d);
  SparseReportParams params;
  params.d = d;
  for (auto _ : state) benchmark::DoNotOptimize(sparse_report(g, params).upper_i.passed);
}
BENCHMARK(BM_SparseReport)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
