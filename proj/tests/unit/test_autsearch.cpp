#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tsg/autsearch.hpp"
#include "tsg/errors.hpp"
#include "tsg/petersen.hpp"

using namespace tsg;

namespace {

bool equitable(const oracle::Graph& g, const OrderedPartition& cells) {
  std::vector<std::size_t> cell_of(g.size());
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (auto v : cells[c]) cell_of[v] = c;
  for (const auto& cell : cells) {
    std::vector<std::size_t> ref;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      std::vector<std::size_t> counts(cells.size(), 0);
      for (int w : g[cell[i]]) ++counts[cell_of[w]];
      if (i == 0) ref = counts;
      else if (counts != ref) return false;
    }
  }
  return true;
}

std::vector<int> distances(const oracle::Graph& g, int s) {
  std::vector<int> d(g.size(), -1);
  std::vector<int> queue{s};
  d[s] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : g[queue[i]])
      if (d[w] < 0) {
        d[w] = d[queue[i]] + 1;
        queue.push_back(w);
      }
  return d;
}

}  // namespace

TEST_CASE("P(7,2) has the 14 automorphisms found by plain backtracking") {
  auto naive = oracle::automorphisms(oracle::petersen(7, 2));
  CHECK(naive.size() == 14);
  CHECK(oracle::elements_of(automorphism_group(PetersenGraph::build(7, 2))) == naive);
}

TEST_CASE("search agrees with plain backtracking on every pair up to n = 12") {
  for (int n = 3; n <= 12; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto naive = oracle::automorphisms(oracle::petersen(n, k));
      auto found = automorphism_group(PetersenGraph::build(n, k));
      CHECK(oracle::elements_of(found) == naive);
    }
}

TEST_CASE("exceptional orders") {
  CHECK(automorphism_group(PetersenGraph::build(4, 1)).order() == 48);
  CHECK(automorphism_group(PetersenGraph::build(5, 2)).order() == 120);
  CHECK(automorphism_group(PetersenGraph::build(8, 3)).order() == 96);
  CHECK(automorphism_group(PetersenGraph::build(10, 2)).order() == 120);
  CHECK(automorphism_group(PetersenGraph::build(10, 3)).order() == 240);
  CHECK(automorphism_group(PetersenGraph::build(12, 5)).order() == 144);
  CHECK(automorphism_group(PetersenGraph::build(24, 5)).order() == 288);
}

TEST_CASE("search on a raw adjacency list") {
  oracle::Graph cycle(6);
  AdjacencyList adj(6);
  for (int i = 0; i < 6; ++i) {
    adj[i] = {static_cast<Point>((i + 1) % 6), static_cast<Point>((i + 5) % 6)};
    cycle[i] = {(i + 1) % 6, (i + 5) % 6};
    std::sort(cycle[i].begin(), cycle[i].end());
  }
  CHECK(oracle::elements_of(automorphism_group(adj)) == oracle::automorphisms(cycle));
}

TEST_CASE("budget and size limits") {
  CHECK_THROWS_AS(automorphism_group(PetersenGraph::build(10, 3), {.max_n = 50, .node_budget = 3}),
                  SearchBudgetError);
  CHECK_THROWS_AS(automorphism_group(PetersenGraph::build(31, 2), {.max_n = 30}), SizeLimitError);
  SearchStats stats;
  automorphism_group(PetersenGraph::build(10, 3), {}, &stats);
  CHECK(stats.nodes > 0);
  CHECK(stats.leaves > 0);
}

TEST_CASE("refinement") {
  auto g = PetersenGraph::build(5, 2);
  OrderedPartition unit{{}};
  for (Point p = 0; p < 10; ++p) unit[0].push_back(p);
  CHECK(refine_partition(g, unit).size() == 1);

  auto g72 = PetersenGraph::build(7, 2);
  auto o72 = oracle::petersen(7, 2);
  Point u1 = to_point(outer(1, 7), 7);
  OrderedPartition fixed{{u1}, {}};
  for (Point p = 0; p < 14; ++p)
    if (p != u1) fixed[1].push_back(p);
  auto refined = refine_partition(g72, fixed);
  CHECK(equitable(o72, refined));
  auto d = distances(o72, u1);
  for (const auto& cell : refined)
    for (auto v : cell) {
      CHECK(d[v] == d[cell.front()]);
      CHECK(to_vertex(v, 7).ring == to_vertex(cell.front(), 7).ring);
    }
  CHECK(refined.size() > static_cast<std::size_t>(*std::max_element(d.begin(), d.end()) + 1));

  OrderedPartition discrete;
  for (Point p = 0; p < 14; ++p) discrete.push_back({p});
  CHECK(refine_partition(g72, discrete) == discrete);
}
