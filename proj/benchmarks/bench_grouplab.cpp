#include <benchmark/benchmark.h>

#include "tsg/autsearch.hpp"
#include "tsg/group_label.hpp"
#include "tsg/grouplab.hpp"
#include "tsg/petersen.hpp"

namespace {

tsg::PermGroup aut(int n, int k) { return tsg::automorphism_group(tsg::PetersenGraph::build(n, k)); }

void BM_SubgroupLattice(benchmark::State& state) {
  auto g = aut(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t subgroups = 0;
  for (auto _ : state) {
    tsg::SubgroupLattice lattice(g);
    subgroups = lattice.subgroups().size();
    benchmark::DoNotOptimize(subgroups);
  }
  state.counters["subgroups"] = static_cast<double>(subgroups);
}
BENCHMARK(BM_SubgroupLattice)->Args({7, 2})->Args({4, 1})->Args({8, 3})->Args({10, 3})->Unit(benchmark::kMillisecond);

void BM_ClassLabels(benchmark::State& state) {
  auto g = aut(10, 3);
  for (auto _ : state) {
    tsg::SubgroupLattice lattice(g);
    for (std::size_t c = 0; c < lattice.class_count(); ++c) benchmark::DoNotOptimize(lattice.class_label(c));
  }
}
BENCHMARK(BM_ClassLabels)->Unit(benchmark::kMillisecond);

void BM_IdentifyGroup(benchmark::State& state) {
  auto g = aut(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(tsg::identify_group(g));
}
BENCHMARK(BM_IdentifyGroup)->Args({8, 3})->Args({10, 3})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
