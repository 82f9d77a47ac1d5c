#include <benchmark/benchmark.h>

#include "strongdim/exact.hpp"
#include "strongdim/families.hpp"
#include "strongdim/metric.hpp"
#include "strongdim/spectral.hpp"
#include "strongdim/verify.hpp"

using namespace smd;

namespace {

Graph seeded_connected(int n, std::uint64_t seed) {
  return generate({GraphFamily::gnp_random_connected, n, 0.5, seed});
}

void BM_all_pairs_distances(benchmark::State& state) {
  const Graph g = seeded_connected(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}
BENCHMARK(BM_all_pairs_distances)->Arg(16)->Arg(32)->Arg(64);

void BM_dims_exact_cycle(benchmark::State& state) {
  const Graph g = generate({GraphFamily::cycle, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(dims_exact(g));
}
BENCHMARK(BM_dims_exact_cycle)->Arg(8)->Arg(12)->Arg(16);

void BM_dims_exact_petersen(benchmark::State& state) {
  const Graph g = generate({GraphFamily::petersen, 10});
  for (auto _ : state) benchmark::DoNotOptimize(dims_exact(g));
}
BENCHMARK(BM_dims_exact_petersen);

void BM_dims_exact_random(benchmark::State& state) {
  const Graph g = seeded_connected(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dims_exact(g));
}
BENCHMARK(BM_dims_exact_random)->Arg(10)->Arg(14);

void BM_clique_number(benchmark::State& state) {
  const Graph g = seeded_connected(static_cast<int>(state.range(0)), 9);
  for (auto _ : state) benchmark::DoNotOptimize(clique_number(g));
}
BENCHMARK(BM_clique_number)->Arg(16)->Arg(24)->Arg(32);

void BM_mmd_cover_bound(benchmark::State& state) {
  const Graph g = seeded_connected(static_cast<int>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(dims_mmd_lower_bound(g));
}
BENCHMARK(BM_mmd_cover_bound)->Arg(12)->Arg(16);

void BM_algebraic_connectivity(benchmark::State& state) {
  const Graph g = seeded_connected(static_cast<int>(state.range(0)), 13);
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_connectivity(g, 1e-12));
}
BENCHMARK(BM_algebraic_connectivity)->Arg(8)->Arg(16)->Arg(32);

void BM_verify_corona_dims(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_theorem("corona-dims", static_cast<int>(state.range(0)), 42));
}
BENCHMARK(BM_verify_corona_dims)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
