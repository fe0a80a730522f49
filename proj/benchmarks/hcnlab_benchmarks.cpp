#include <benchmark/benchmark.h>

#include "hcnlab/bounds.hpp"
#include "hcnlab/connectivity.hpp"
#include "hcnlab/cuts.hpp"
#include "hcnlab/oracle.hpp"
#include "hcnlab/topology.hpp"

namespace {

using namespace hcnlab;

void BM_BuildHcn(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_hcn(n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_BuildHcn)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyVertexCutImplicit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HcnNetwork hcn(n);
  const CutSpec cut = hcn_subcube_vertex_cut(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_h_cut(hcn, cut, n / 2));
}
BENCHMARK(BM_VerifyVertexCutImplicit)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyEdgeCutExplicit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = build_hcn(n);
  const CutSpec cut = hcn_subcube_edge_cut(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(verify_h_cut(g, cut, n));
}
BENCHMARK(BM_VerifyEdgeCutExplicit)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

void BM_VertexOracleHcn2(benchmark::State& state) {
  const Graph g = build_hcn(2);
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_h_vertex_cut_exact(g, h));
}
BENCHMARK(BM_VertexOracleHcn2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VertexOracleHcn3H0(benchmark::State& state) {
  const Graph g = build_hcn(3);
  for (auto _ : state) benchmark::DoNotOptimize(min_h_vertex_cut_exact(g, 0));
}
BENCHMARK(BM_VertexOracleHcn3H0)->Unit(benchmark::kMillisecond);

void BM_EdgeOracleHcn3(benchmark::State& state) {
  const Graph g = build_hcn(3);
  const int h = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_h_edge_cut_exact(g, h));
}
BENCHMARK(BM_EdgeOracleHcn3)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_ClassicalConnectivity(benchmark::State& state) {
  const Graph g = build_hcn(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_connectivity(g));
}
BENCHMARK(BM_ClassicalConnectivity)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_NeighborhoodBoundScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_closed_neighborhood_bound(4, 1));
}
BENCHMARK(BM_NeighborhoodBoundScan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
