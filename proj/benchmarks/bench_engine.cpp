#include <benchmark/benchmark.h>

#include "mapoly/catalog.hpp"
#include "mapoly/classify.hpp"
#include "mapoly/obstruction.hpp"

using namespace mapoly;

namespace {

CatalogEntry entry(const std::string& id) {
  for (auto& e : full_catalog())
    if (e.id == id) return e;
  return {};
}

void BM_VerticesOf(benchmark::State& state) {
  const auto e = builtin_catalog(static_cast<int>(state.range(0))).back();
  const HalfspaceSystem h = HalfspaceSystem::unit_rhs(e.dim, e.a);
  for (auto _ : state) benchmark::DoNotOptimize(vertices_of(h));
}
BENCHMARK(BM_VerticesOf)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_FacetsOf(benchmark::State& state) {
  const Polytope p = builtin_catalog(static_cast<int>(state.range(0))).back().polytope();
  for (auto _ : state) benchmark::DoNotOptimize(facets_of(p.vertices()));
}
BENCHMARK(BM_FacetsOf)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_Barycenter(benchmark::State& state) {
  const Polytope p = builtin_catalog(static_cast<int>(state.range(0))).back().polytope();
  for (auto _ : state) benchmark::DoNotOptimize(barycenter(p));
}
BENCHMARK(BM_Barycenter)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

void BM_KHFeasible(benchmark::State& state) {
  const Polytope p = entry("T6.1").polytope();
  for (auto _ : state) benchmark::DoNotOptimize(kh_feasible(p));
}
BENCHMARK(BM_KHFeasible)->Unit(benchmark::kMicrosecond);

void BM_Obstruct(benchmark::State& state, const char* id) {
  const Polytope p = entry(id).polytope();
  const AnsatzTemplate t = build_template(p, kh_feasible(p).at(0));
  for (auto _ : state) benchmark::DoNotOptimize(obstruct(t, 4));
}
BENCHMARK_CAPTURE(BM_Obstruct, hexagon, "T2.1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Obstruct, t4_1, "T4.1")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Obstruct, t6_1, "T6.1")->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Classify)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
