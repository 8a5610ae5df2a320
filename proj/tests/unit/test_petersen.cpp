#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "tsg/cycle_notation.hpp"
#include "tsg/errors.hpp"
#include "tsg/paperlib.hpp"
#include "tsg/petersen.hpp"

using namespace tsg;

namespace {

Permutation rotation(int n) {
  std::vector<Point> img(2 * n);
  for (int i = 0; i < n; ++i) {
    img[i] = static_cast<Point>((i + 1) % n);
    img[n + i] = static_cast<Point>(n + (i + 1) % n);
  }
  return Permutation(img);
}

}  // namespace

TEST_CASE("build matches the independent adjacency oracle") {
  for (int n = 3; n <= 30; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      auto g = PetersenGraph::build(n, k);
      auto o = oracle::petersen(n, k);
      REQUIRE(g.vertex_count() == o.size());
      CHECK(g.edges().size() == static_cast<std::size_t>(3 * n));
      for (Point a = 0; a < g.vertex_count(); ++a) {
        CHECK(g.adjacency()[a].size() == 3);
        for (Point b = 0; b < g.vertex_count(); ++b) CHECK(g.adjacent(a, b) == oracle::adjacent(o, a, b));
      }
      CHECK(g.inner_cycle_count() == oracle::gcd(n, k));
    }
}

TEST_CASE("edge classes are consistent with endpoints") {
  auto g = PetersenGraph::build(10, 3);
  int counts[3] = {0, 0, 0};
  for (const auto& e : g.edges()) {
    CHECK(e.a < e.b);
    auto va = to_vertex(e.a, 10);
    auto vb = to_vertex(e.b, 10);
    ++counts[static_cast<int>(e.cls)];
    switch (e.cls) {
      case EdgeClass::Outer:
        CHECK((va.ring == Ring::Outer && vb.ring == Ring::Outer));
        CHECK((mod(va.index - vb.index, 10) == 1 || mod(vb.index - va.index, 10) == 1));
        break;
      case EdgeClass::Inner:
        CHECK((va.ring == Ring::Inner && vb.ring == Ring::Inner));
        CHECK((mod(va.index - vb.index, 10) == 3 || mod(vb.index - va.index, 10) == 3));
        break;
      case EdgeClass::Spoke:
        CHECK(va.ring != vb.ring);
        CHECK(va.index == vb.index);
        break;
    }
  }
  CHECK(counts[0] == 10);
  CHECK(counts[1] == 10);
  CHECK(counts[2] == 10);
}

TEST_CASE("small named graphs") {
  auto p62 = PetersenGraph::build(6, 2);
  CHECK(p62.vertex_count() == 12);
  CHECK(p62.edges().size() == 18);
  CHECK(p62.inner_cycle_count() == 2);

  auto cube = PetersenGraph::build(4, 1);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edges().size() == 12);

  auto petersen = PetersenGraph::build(5, 2);
  std::size_t triangles = 0, squares = 0;
  for (Point a = 0; a < 10; ++a)
    for (Point b = 0; b < 10; ++b)
      for (Point c = 0; c < 10; ++c)
        if (a != b && b != c && a != c && petersen.adjacent(a, b) && petersen.adjacent(b, c) &&
            petersen.adjacent(c, a))
          ++triangles;
  for (Point a = 0; a < 10; ++a)
    for (Point c = 0; c < 10; ++c) {
      if (a == c || petersen.adjacent(a, c)) continue;
      std::size_t common = 0;
      for (Point b = 0; b < 10; ++b) common += petersen.adjacent(a, b) && petersen.adjacent(b, c);
      CHECK(common == 1);
      squares += common > 1;
    }
  CHECK(triangles == 0);
  CHECK(squares == 0);
}

TEST_CASE("build rejects inadmissible parameters") {
  CHECK_THROWS_AS(PetersenGraph::build(2, 1), ConstructionError);
  CHECK_THROWS_AS(PetersenGraph::build(6, 3), ConstructionError);
  CHECK_THROWS_AS(PetersenGraph::build(7, 0), ConstructionError);
  CHECK_THROWS_AS(PetersenGraph::build(7, -1), ConstructionError);
}

TEST_CASE("is_automorphism") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}, {10, 3}, {13, 5}}) {
    auto g = PetersenGraph::build(n, k);
    CHECK(is_automorphism(g, Permutation::identity(2 * n)));
    CHECK(is_automorphism(g, rotation(n)));
  }
  auto g = PetersenGraph::build(6, 2);
  CHECK_FALSE(is_automorphism(g, parse_cycles("(u1 u2)", 6)));
  CHECK_FALSE(is_automorphism(g, Permutation::identity(10)));
}

TEST_CASE("setwise invariance on P(10,2)") {
  auto sets = special_vertex_sets(10, 2);
  std::set<Vertex> both = sets.at("T1");
  both.insert(sets.at("T2").begin(), sets.at("T2").end());
  auto alpha = named_automorphism(10, 2, "alpha").perm;
  CHECK(setwise_invariant(Permutation::identity(20), sets.at("T1"), 10));
  CHECK(setwise_invariant(alpha, both, 10));
  std::set<Vertex> image;
  for (auto v : sets.at("T1")) image.insert(to_vertex(alpha(to_point(v, 10)), 10));
  CHECK(image == sets.at("T2"));
}

TEST_CASE("free edges") {
  auto p72 = PetersenGraph::build(7, 2);
  CHECK(has_free_edge(p72, closure(std::vector<Permutation>{}, 14)));
  CHECK(has_free_edge(p72, closure({rotation(7)}, 14)));
  CHECK(free_edges(p72, closure({rotation(7)}, 14)).size() == 21);

  auto p103 = PetersenGraph::build(10, 3);
  auto beta = parse_cycles("(u_1 v_4)(u_2 u_4)(u_5 v_2)(u_6 v_9)(u_7 u_9)(u_{10} v_7)", 10);
  auto h = closure({beta}, 20);
  std::size_t expected = 0;
  for (const auto& e : p103.edges()) {
    bool free = true;
    for (const auto& p : h.elements())
      if (!p.is_identity() && p(e.a) == e.a && p(e.b) == e.b) free = false;
    expected += free;
  }
  CHECK(free_edges(p103, h).size() == expected);
  CHECK(has_free_edge(p103, h) == (expected > 0));
  CHECK_THROWS_AS(has_free_edge(p72, closure({parse_cycles("(u1 u2)", 7)}, 14)), NotAutomorphismError);
}

TEST_CASE("exports") {
  auto g = PetersenGraph::build(6, 2);
  auto dot = to_dot(g);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 18);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) ++edges;
  CHECK(edges == 18);
  CHECK(to_dot(g) == dot);

  auto j = nlohmann::json::parse(to_json(PetersenGraph::build(10, 3)));
  CHECK(j.at("n") == 10);
  CHECK(j.at("k") == 3);
  CHECK(j.at("vertices").size() == 20);
  CHECK(j.at("edges").size() == 30);
}
