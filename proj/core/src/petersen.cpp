#include "tsg/petersen.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "tsg/errors.hpp"

namespace tsg {

std::string to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Outer:
      return "outer";
    case EdgeClass::Inner:
      return "inner";
    case EdgeClass::Spoke:
      return "spoke";
  }
  return "?";
}

PetersenGraph::PetersenGraph(int n, int k) : n_(n), k_(k), adjacency_(2 * n) {}

PetersenGraph PetersenGraph::build(int n, int k) {
  if (n < 3) throw ConstructionError("P(n,k) requires n >= 3, got n = " + std::to_string(n));
  if (k < 1) throw ConstructionError("P(n,k) requires k >= 1, got k = " + std::to_string(k));
  if (2 * k >= n) {
    throw ConstructionError("P(n,k) requires 2k < n, got n = " + std::to_string(n) +
                            ", k = " + std::to_string(k));
  }
  if (2 * n > 0xFFFF) throw ConstructionError("n too large");

  PetersenGraph g(n, k);
  auto add = [&](Vertex x, Vertex y, EdgeClass cls) {
    Point a = to_point(x, n), b = to_point(y, n);
    if (a > b) std::swap(a, b);
    g.edges_.push_back({a, b, cls});
  };
  for (int i = 0; i < n; ++i) {
    add(outer(i, n), outer(i + 1, n), EdgeClass::Outer);
    add(inner(i, n), inner(i + k, n), EdgeClass::Inner);
    add(outer(i, n), inner(i, n), EdgeClass::Spoke);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  for (const auto& e : g.edges_) {
    g.adjacency_[e.a].push_back(e.b);
    g.adjacency_[e.b].push_back(e.a);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

bool PetersenGraph::adjacent(Point a, Point b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

int PetersenGraph::inner_cycle_count() const {
  std::vector<bool> seen(n_, false);
  int components = 0;
  for (int start = 0; start < n_; ++start) {
    if (seen[start]) continue;
    ++components;
    for (int i = start; !seen[i]; i = (i + k_) % n_) seen[i] = true;
  }
  return components;
}

bool is_automorphism(const PetersenGraph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (const auto& e : g.edges()) {
    if (!g.adjacent(p(e.a), p(e.b))) return false;
  }
  return true;
}

bool setwise_invariant(const Permutation& p, const std::set<Vertex>& set, int n) {
  for (const auto& v : set) {
    if (!set.contains(to_vertex(p(to_point(v, n)), n))) return false;
  }
  return true;
}

std::vector<Edge> free_edges(const PetersenGraph& g, const PermGroup& group) {
  for (const auto& e : group.elements()) {
    if (!is_automorphism(g, e)) {
      throw NotAutomorphismError("group element is not an automorphism of P(" +
                                 std::to_string(g.n()) + "," + std::to_string(g.k()) + ")");
    }
  }
  std::vector<Edge> out;
  for (const auto& edge : g.edges()) {
    bool fixed = false;
    for (std::size_t i = 1; i < group.order() && !fixed; ++i) {
      const auto& p = group.elements()[i];
      fixed = p(edge.a) == edge.a && p(edge.b) == edge.b;
    }
    if (!fixed) out.push_back(edge);
  }
  return out;
}

bool has_free_edge(const PetersenGraph& g, const PermGroup& group) {
  return !free_edges(g, group).empty();
}

namespace {

// Export order follows the displayed labels u1..un, v1..vn rather than the
// internal enumeration (where u_n is point 0).
int display_rank(const PetersenGraph& g, Point p) {
  Vertex v = to_vertex(p, g.n());
  int shown = v.index == 0 ? g.n() : v.index;
  return (v.ring == Ring::Outer ? 0 : g.n()) + shown - 1;
}

std::vector<Point> display_points(const PetersenGraph& g) {
  std::vector<Point> pts(g.vertex_count());
  std::iota(pts.begin(), pts.end(), Point{0});
  std::sort(pts.begin(), pts.end(),
            [&](Point a, Point b) { return display_rank(g, a) < display_rank(g, b); });
  return pts;
}

std::vector<std::pair<Point, Point>> display_edges(const PetersenGraph& g) {
  std::vector<std::tuple<int, int, Point, Point>> keyed;
  for (const auto& e : g.edges()) {
    Point a = e.a, b = e.b;
    if (display_rank(g, a) > display_rank(g, b)) std::swap(a, b);
    keyed.emplace_back(display_rank(g, a), display_rank(g, b), a, b);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::pair<Point, Point>> out;
  for (auto& [ra, rb, a, b] : keyed) out.emplace_back(a, b);
  return out;
}

EdgeClass class_of(const PetersenGraph& g, Point a, Point b) {
  for (const auto& e : g.edges()) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.cls;
  }
  throw Error("not an edge");
}

}  // namespace

std::string to_dot(const PetersenGraph& g) {
  std::ostringstream out;
  out << "graph P_" << g.n() << '_' << g.k() << " {\n";
  for (Point p : display_points(g)) out << "  " << g.label(p) << ";\n";
  for (auto [a, b] : display_edges(g)) {
    out << "  " << g.label(a) << " -- " << g.label(b) << " [class=" << to_string(class_of(g, a, b))
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const PetersenGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["k"] = g.k();
  auto vertices = nlohmann::ordered_json::array();
  for (Point p : display_points(g)) vertices.push_back(g.label(p));
  j["vertices"] = vertices;
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : display_edges(g)) {
    edges.push_back({{"a", g.label(a)}, {"b", g.label(b)}, {"class", to_string(class_of(g, a, b))}});
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

}  // namespace tsg
