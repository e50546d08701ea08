#include <benchmark/benchmark.h>

#include <vector>

#include "hyperreg/bouquets.hpp"
#include "hyperreg/complex.hpp"
#include "hyperreg/generators.hpp"
#include "hyperreg/homological.hpp"
#include "hyperreg/matchings.hpp"
#include "hyperreg/verification.hpp"

using namespace hyperreg;

namespace {

std::vector<Hypergraph> sample(int n, int max_edges, std::uint64_t count) {
  FamilySpec s;
  s.kind = FamilyKind::RandomHypergraph;
  s.n = n;
  s.n_min = n;
  s.min_edge_size = 2;
  s.max_edge_size = 3;
  s.edge_count = 2;
  s.edge_count_max = max_edges;
  s.count = count;
  s.seed = 2024;
  const InstanceStream stream(s);
  std::vector<Hypergraph> out;
  for (std::uint64_t i = 0; i < stream.size(); ++i) out.push_back(stream.at(i));
  return out;
}

void bm_matching_invariants(benchmark::State& state) {
  const auto hs = sample(static_cast<int>(state.range(0)), 8, 64);
  for (auto _ : state) {
    for (const Hypergraph& h : hs) benchmark::DoNotOptimize(matching_invariants(h));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hs.size()));
}

void bm_bouquet_invariants(benchmark::State& state) {
  const auto hs = sample(static_cast<int>(state.range(0)), 8, 64);
  for (auto _ : state) {
    for (const Hypergraph& h : hs) benchmark::DoNotOptimize(bouquet_invariants(h));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hs.size()));
}

void bm_betti_table(benchmark::State& state) {
  const auto hs = sample(static_cast<int>(state.range(0)), 8, 16);
  for (auto _ : state) {
    for (const Hypergraph& h : hs) benchmark::DoNotOptimize(betti_table(h));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hs.size()));
}

void bm_vertex_decomposable(benchmark::State& state) {
  const auto hs = sample(static_cast<int>(state.range(0)), 8, 64);
  for (auto _ : state) {
    VDMemo memo;
    for (const Hypergraph& h : hs) benchmark::DoNotOptimize(vertex_decomposable(independence_complex(h), memo));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * hs.size()));
}

void bm_suite_all_graphs(benchmark::State& state) {
  FamilySpec f;
  f.n = static_cast<int>(state.range(0));
  SuiteOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite("theorem-final", f, o));
}

}  // namespace

BENCHMARK(bm_matching_invariants)->DenseRange(6, 8);
BENCHMARK(bm_bouquet_invariants)->DenseRange(6, 8);
BENCHMARK(bm_betti_table)->DenseRange(6, 10, 2);
BENCHMARK(bm_vertex_decomposable)->DenseRange(6, 8);
BENCHMARK(bm_suite_all_graphs)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
