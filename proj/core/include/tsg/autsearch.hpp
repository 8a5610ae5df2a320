#pragma once

#include <cstdint>
#include <vector>

#include "tsg/perm_group.hpp"
#include "tsg/petersen.hpp"

namespace tsg {

/// Ordered partition of the vertex set; each cell is kept sorted.
using OrderedPartition = std::vector<std::vector<Point>>;
using AdjacencyList = std::vector<std::vector<Point>>;

struct SearchOptions {
  int max_n = 50;
  std::uint64_t node_budget = 10'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Coarsest equitable refinement of `partition`. A cell is split by the
/// number of neighbours its vertices have in some other cell; the pieces
/// replace the cell in place, ordered by ascending count. The result depends
/// only on the partition's structure, never on vertex labels.
OrderedPartition refine_partition(const AdjacencyList& adjacency, OrderedPartition partition);
OrderedPartition refine_partition(const PetersenGraph& g, OrderedPartition partition);

/// Every automorphism of a simple graph, found by individualization and
/// refinement starting from the degree partition. Throws SearchBudgetError
/// when the number of search nodes exceeds `options.node_budget`.
PermGroup automorphism_group(const AdjacencyList& adjacency, SearchOptions options = {},
                             SearchStats* stats = nullptr);

/// As above for P(n,k). Vertex rings do not seed the partition, since
/// automorphisms may exchange them. Throws SizeLimitError when n > max_n.
PermGroup automorphism_group(const PetersenGraph& g, SearchOptions options = {},
                             SearchStats* stats = nullptr);

}  // namespace tsg
