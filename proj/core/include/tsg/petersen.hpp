#pragma once

#include <set>
#include <string>
#include <vector>

#include "tsg/perm_group.hpp"
#include "tsg/vertex.hpp"

namespace tsg {

enum class EdgeClass : std::uint8_t { Outer, Inner, Spoke };

std::string to_string(EdgeClass c);

struct Edge {
  Point a = 0;  // a < b
  Point b = 0;
  EdgeClass cls = EdgeClass::Outer;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Generalized Petersen graph P(n,k): outer cycle u_i u_{i+1}, inner edges
/// v_i v_{i+k}, spokes u_i v_i. Requires n >= 3, k >= 1 and 2k < n.
class PetersenGraph {
 public:
  static PetersenGraph build(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::size_t vertex_count() const noexcept { return static_cast<std::size_t>(2 * n_); }
  /// 3n edges sorted by (a, b).
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbours of each point, ascending.
  const std::vector<std::vector<Point>>& adjacency() const noexcept { return adjacency_; }

  bool adjacent(Point a, Point b) const;
  std::string label(Point p) const { return display(to_vertex(p, n_), n_); }

  /// Number of connected components of the inner edges, gcd(n, k).
  int inner_cycle_count() const;

 private:
  PetersenGraph(int n, int k);

  int n_;
  int k_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Point>> adjacency_;
};

/// True iff p maps every edge onto an edge; edge classes may be permuted.
bool is_automorphism(const PetersenGraph& g, const Permutation& p);

/// True iff p(S) = S.
bool setwise_invariant(const Permutation& p, const std::set<Vertex>& set, int n);

/// True iff some edge {a,b} exists such that no non-identity element of
/// `group` fixes both a and b. Throws NotAutomorphismError if an element is
/// not an automorphism of g.
bool has_free_edge(const PetersenGraph& g, const PermGroup& group);

/// Edges whose endpoints are both fixed by no non-identity element.
std::vector<Edge> free_edges(const PetersenGraph& g, const PermGroup& group);

std::string to_dot(const PetersenGraph& g);
/// {"n":..,"k":..,"vertices":[..],"edges":[{"a":..,"b":..,"class":..}]}
std::string to_json(const PetersenGraph& g);

}  // namespace tsg
