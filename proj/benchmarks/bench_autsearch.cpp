#include <benchmark/benchmark.h>

#include "tsg/autsearch.hpp"
#include "tsg/petersen.hpp"

namespace {

void BM_AutomorphismGroup(benchmark::State& state) {
  auto g = tsg::PetersenGraph::build(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  tsg::SearchStats stats;
  for (auto _ : state) {
    stats = {};
    auto aut = tsg::automorphism_group(g, {}, &stats);
    benchmark::DoNotOptimize(aut.order());
  }
  state.counters["nodes"] = static_cast<double>(stats.nodes);
  state.counters["leaves"] = static_cast<double>(stats.leaves);
}
BENCHMARK(BM_AutomorphismGroup)
    ->Args({7, 2})
    ->Args({10, 3})
    ->Args({13, 5})
    ->Args({24, 5})
    ->Args({30, 7})
    ->Args({50, 7})
    ->Unit(benchmark::kMicrosecond);

void BM_RefineUnitPartition(benchmark::State& state) {
  auto g = tsg::PetersenGraph::build(static_cast<int>(state.range(0)), 2);
  tsg::OrderedPartition unit{{}};
  for (tsg::Point p = 0; p < g.vertex_count(); ++p) unit[0].push_back(p);
  unit.push_back({unit[0].back()});
  unit[0].pop_back();
  for (auto _ : state) benchmark::DoNotOptimize(tsg::refine_partition(g, unit));
}
BENCHMARK(BM_RefineUnitPartition)->Arg(10)->Arg(30)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
