#include "tsg/autsearch.hpp"

#include <algorithm>
#include <map>

#include "tsg/errors.hpp"

namespace tsg {
namespace {

// Refines in place and appends a label-free record of every split to `trace`.
void refine(const AdjacencyList& adj, OrderedPartition& cells, std::vector<int>* trace) {
  std::vector<int> count(adj.size());
restart:
  for (std::size_t s = 0; s < cells.size(); ++s) {
    std::fill(count.begin(), count.end(), 0);
    for (Point w : cells[s]) {
      for (Point x : adj[w]) ++count[x];
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto& cell = cells[c];
      if (cell.size() == 1) continue;
      bool uniform = std::all_of(cell.begin(), cell.end(),
                                 [&](Point v) { return count[v] == count[cell.front()]; });
      if (uniform) continue;

      std::map<int, std::vector<Point>> pieces;
      for (Point v : cell) pieces[count[v]].push_back(v);
      if (trace) {
        trace->push_back(static_cast<int>(s));
        trace->push_back(static_cast<int>(c));
        for (const auto& [cnt, piece] : pieces) {
          trace->push_back(cnt);
          trace->push_back(static_cast<int>(piece.size()));
        }
        trace->push_back(-1);
      }
      std::vector<std::vector<Point>> replacement;
      for (auto& [cnt, piece] : pieces) replacement.push_back(std::move(piece));
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c),
                   std::make_move_iterator(replacement.begin()),
                   std::make_move_iterator(replacement.end()));
      goto restart;
    }
  }
}

bool discrete(const OrderedPartition& p) {
  return std::all_of(p.begin(), p.end(), [](const auto& c) { return c.size() == 1; });
}

std::size_t target_cell(const OrderedPartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].size() > 1) return i;
  }
  return p.size();
}

OrderedPartition individualize(const OrderedPartition& p, std::size_t cell, Point v) {
  OrderedPartition out;
  out.reserve(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != cell) {
      out.push_back(p[i]);
      continue;
    }
    out.push_back({v});
    std::vector<Point> rest;
    for (Point x : p[i]) {
      if (x != v) rest.push_back(x);
    }
    out.push_back(std::move(rest));
  }
  return out;
}

bool same_shape(const OrderedPartition& a, const OrderedPartition& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
  }
  return true;
}

struct Level {
  OrderedPartition partition;  // left partition after refinement
  std::vector<int> trace;      // trace of the refinement that produced it
};

class Search {
 public:
  Search(const AdjacencyList& adj, SearchOptions options, SearchStats& stats)
      : adj_(adj), options_(options), stats_(stats) {}

  std::vector<Permutation> run(OrderedPartition initial) {
    std::vector<int> trace;
    refine(adj_, initial, &trace);
    // The left branch is fixed: always individualize the least vertex of the
    // first non-singleton cell.
    levels_.push_back({initial, trace});
    while (!discrete(levels_.back().partition)) {
      const auto& p = levels_.back().partition;
      std::size_t c = target_cell(p);
      Level next{individualize(p, c, p[c].front()), {}};
      refine(adj_, next.partition, &next.trace);
      levels_.push_back(std::move(next));
    }
    explore(0, initial);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void count_node() {
    if (++stats_.nodes > options_.node_budget) {
      throw SearchBudgetError("automorphism search exceeded the node budget of " +
                              std::to_string(options_.node_budget));
    }
  }

  void explore(std::size_t depth, const OrderedPartition& right) {
    count_node();
    const auto& left = levels_[depth].partition;
    if (depth + 1 == levels_.size()) {
      ++stats_.leaves;
      std::vector<Point> images(adj_.size());
      for (std::size_t i = 0; i < left.size(); ++i) images[left[i].front()] = right[i].front();
      Permutation p(std::move(images));
      if (preserves_edges(p)) found_.push_back(std::move(p));
      return;
    }
    std::size_t c = target_cell(left);
    for (Point w : right[c]) {
      OrderedPartition candidate = individualize(right, c, w);
      std::vector<int> trace;
      refine(adj_, candidate, &trace);
      if (trace != levels_[depth + 1].trace) continue;
      if (!same_shape(candidate, levels_[depth + 1].partition)) continue;
      explore(depth + 1, candidate);
    }
  }

  bool preserves_edges(const Permutation& p) const {
    for (std::size_t a = 0; a < adj_.size(); ++a) {
      for (Point b : adj_[a]) {
        const auto& nb = adj_[p(static_cast<Point>(a))];
        if (!std::binary_search(nb.begin(), nb.end(), p(b))) return false;
      }
    }
    return true;
  }

  const AdjacencyList& adj_;
  SearchOptions options_;
  SearchStats& stats_;
  std::vector<Level> levels_;
  std::vector<Permutation> found_;
};

AdjacencyList sorted_adjacency(const AdjacencyList& adj) {
  AdjacencyList out = adj;
  for (auto& nb : out) std::sort(nb.begin(), nb.end());
  return out;
}

}  // namespace

OrderedPartition refine_partition(const AdjacencyList& adjacency, OrderedPartition partition) {
  std::vector<bool> seen(adjacency.size(), false);
  std::size_t total = 0;
  for (auto& cell : partition) {
    std::sort(cell.begin(), cell.end());
    for (Point v : cell) {
      if (v >= adjacency.size() || seen[v]) throw Error("partition is not a partition of the vertex set");
      seen[v] = true;
      ++total;
    }
  }
  if (total != adjacency.size()) throw Error("partition does not cover the vertex set");
  partition.erase(std::remove_if(partition.begin(), partition.end(),
                                 [](const auto& c) { return c.empty(); }),
                  partition.end());
  refine(adjacency, partition, nullptr);
  return partition;
}

OrderedPartition refine_partition(const PetersenGraph& g, OrderedPartition partition) {
  return refine_partition(g.adjacency(), std::move(partition));
}

PermGroup automorphism_group(const AdjacencyList& adjacency, SearchOptions options,
                             SearchStats* stats) {
  SearchStats local;
  SearchStats& st = stats ? *stats : local;
  AdjacencyList adj = sorted_adjacency(adjacency);
  const std::size_t degree = adj.size();
  if (degree == 0) return PermGroup(0);

  std::map<std::size_t, std::vector<Point>> by_degree;
  for (std::size_t v = 0; v < degree; ++v) by_degree[adj[v].size()].push_back(static_cast<Point>(v));
  OrderedPartition initial;
  for (auto& [d, cell] : by_degree) initial.push_back(std::move(cell));

  std::vector<Permutation> elements = Search(adj, options, st).run(std::move(initial));

  // Generators: prefer high-order elements, ties broken by canonical order.
  std::vector<Permutation> by_order = elements;
  std::stable_sort(by_order.begin(), by_order.end(), [](const auto& a, const auto& b) {
    return element_order(a) > element_order(b);
  });
  auto gens = greedy_generators(by_order, degree);
  return make_group_from_sorted(std::move(elements), std::move(gens));
}

PermGroup automorphism_group(const PetersenGraph& g, SearchOptions options, SearchStats* stats) {
  if (g.n() > options.max_n) {
    throw SizeLimitError("automorphism search on P(" + std::to_string(g.n()) + "," +
                             std::to_string(g.k()) + ") exceeds the n limit",
                         static_cast<std::size_t>(options.max_n));
  }
  return automorphism_group(g.adjacency(), options, stats);
}

}  // namespace tsg
