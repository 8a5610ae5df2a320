#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "tsg/autsearch.hpp"
#include "tsg/catalog.hpp"
#include "tsg/cycle_notation.hpp"
#include "tsg/group_table.hpp"
#include "tsg/grouplab.hpp"
#include "tsg/petersen.hpp"

using namespace tsg;

namespace {

constexpr int kCases = 1000;

std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'cafe);
  return engine;
}

Permutation random_perm(std::size_t degree) { return oracle::to(oracle::random_perm(degree, rng())); }

std::size_t random_between(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

}  // namespace

TEST_CASE("compose, inverse and power agree with the oracle") {
  for (int c = 0; c < kCases; ++c) {
    std::size_t degree = random_between(1, 40);
    auto p = random_perm(degree), q = random_perm(degree), r = random_perm(degree);
    auto pq = compose(p, q);
    CHECK(oracle::from(pq) == oracle::compose(oracle::from(p), oracle::from(q)));
    CHECK(compose(compose(p, q), r) == compose(p, compose(q, r)));
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
    auto images = oracle::from(pq);
    std::sort(images.begin(), images.end());
    CHECK(images == oracle::identity(degree));
    CHECK(power(p, static_cast<long long>(element_order(p))).is_identity());
    long long e = static_cast<long long>(random_between(0, 50));
    CHECK(compose(power(p, e), power(p, -e)).is_identity());
  }
}

TEST_CASE("cycle type invariants") {
  for (int c = 0; c < kCases; ++c) {
    std::size_t degree = random_between(1, 40);
    auto p = random_perm(degree), q = random_perm(degree);
    auto ct = cycle_type(p);
    std::size_t sum = 0;
    std::uint64_t lcm = 1;
    for (auto [len, count] : ct.counts()) {
      sum += len * count;
      lcm = std::lcm(lcm, static_cast<std::uint64_t>(len));
    }
    CHECK(sum == degree);
    CHECK(element_order(p) == lcm);
    CHECK(static_cast<int>(element_order(p)) == oracle::order(oracle::from(p)));
    CHECK(cycle_type(conjugate(p, q)) == ct);
    auto oct = oracle::cycle_type(oracle::from(p));
    for (auto [len, count] : oct) CHECK(ct.count(static_cast<std::size_t>(len)) == static_cast<std::size_t>(count));
    CHECK(fixed_points(p).size() == ct.count(1));
  }
}

TEST_CASE("cycle notation round trips") {
  for (int c = 0; c < kCases; ++c) {
    int n = static_cast<int>(random_between(3, 30));
    auto p = random_perm(static_cast<std::size_t>(2 * n));
    CHECK(parse_cycles(format_cycles(p, n), n) == p);
  }
}

TEST_CASE("Lagrange and closure on random subgroups of Aut(P(10,3))") {
  auto aut = automorphism_group(PetersenGraph::build(10, 3));
  const auto& all = aut.elements();
  for (int c = 0; c < kCases; ++c) {
    std::size_t count = random_between(1, 2);
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(all[random_between(0, all.size() - 1)]);
    auto h = closure(gens, 20, {.cap = 1000});
    CHECK(aut.order() % h.order() == 0);
    CHECK(h.is_subgroup_of(aut));
    auto x = h.elements()[random_between(0, h.order() - 1)];
    auto y = h.elements()[random_between(0, h.order() - 1)];
    CHECK(h.contains(compose(x, y)));
    CHECK(h.contains(inverse(x)));
    CHECK(h.order() % element_order(x) == 0);
    auto g = all[random_between(0, all.size() - 1)];
    std::vector<Permutation> conj;
    for (const auto& p : h.generators()) conj.push_back(conjugate(p, g));
    auto hg = closure(conj, 20, {.cap = 1000});
    CHECK(hg.order() == h.order());
    CHECK(identify_group(hg) == identify_group(h));
  }
}

TEST_CASE("group table invariants on random groups") {
  for (int c = 0; c < kCases; ++c) {
    std::size_t degree = random_between(2, 6);
    auto g = closure({random_perm(degree), random_perm(degree)}, degree, {.cap = 1000});
    GroupTable t(g);
    auto a = static_cast<ElementIndex>(random_between(0, t.order() - 1));
    auto b = static_cast<ElementIndex>(random_between(0, t.order() - 1));
    CHECK(t.element(t.mul(a, b)) == compose(t.element(a), t.element(b)));
    CHECK(t.mul(a, t.inv(a)) == 0);
    CHECK(t.element_order(a) == element_order(t.element(a)));
    CHECK(t.cyclic(a).count() == t.element_order(a));
    auto s = t.cyclic(a);
    CHECK(t.conjugate_set(s, b).count() == s.count());
  }
}

TEST_CASE("lattice invariants on random groups") {
  for (int c = 0; c < 60; ++c) {
    std::size_t degree = random_between(3, 5);
    auto g = closure({random_perm(degree), random_perm(degree)}, degree, {.cap = 1000});
    SubgroupLattice lattice(g);
    std::size_t total = 0;
    for (std::size_t k = 0; k < lattice.class_count(); ++k) {
      const auto& members = lattice.class_members(k);
      total += members.size();
      CHECK(g.order() % members.size() == 0);
      for (auto m : members) CHECK(g.order() % lattice.subgroups()[m].count() == 0);
      auto rep = lattice.subgroups()[members.front()];
      for (ElementIndex x = 0; x < lattice.table().order(); ++x) {
        auto image = lattice.table().conjugate_set(rep, x);
        auto where = lattice.find(image);
        REQUIRE(where.has_value());
        CHECK(lattice.class_of()[*where] == k);
      }
    }
    CHECK(total == lattice.subgroups().size());
    std::set<std::set<oracle::Perm>> found;
    for (const auto& s : lattice.subgroups()) {
      auto elems = oracle::elements_of(lattice.table().to_group(s));
      found.insert(std::set<oracle::Perm>(elems.begin(), elems.end()));
    }
    CHECK(found == oracle::two_generated_subgroups(oracle::elements_of(g)));
  }
}

TEST_CASE("automorphism search is invariant under random relabelling") {
  std::vector<std::pair<int, int>> pairs;
  for (int n = 3; n <= 30; ++n)
    for (int k = 1; 2 * k < n; ++k) pairs.emplace_back(n, k);
  std::shuffle(pairs.begin(), pairs.end(), rng());
  pairs.resize(20);
  for (auto [n, k] : pairs) {
    CAPTURE(n);
    CAPTURE(k);
    auto g = PetersenGraph::build(n, k);
    auto base = automorphism_group(g);
    auto pi = oracle::random_perm(g.vertex_count(), rng());
    auto pinv = oracle::inverse(pi);
    AdjacencyList relabelled(g.vertex_count());
    for (Point v = 0; v < g.vertex_count(); ++v)
      for (Point w : g.adjacency()[v]) relabelled[pi[v]].push_back(static_cast<Point>(pi[w]));
    auto moved = automorphism_group(relabelled);
    REQUIRE(moved.order() == base.order());
    std::set<oracle::Perm> expected;
    for (const auto& p : base.elements()) expected.insert(oracle::compose(pi, oracle::compose(oracle::from(p), pinv)));
    auto got = oracle::elements_of(moved);
    CHECK(std::set<oracle::Perm>(got.begin(), got.end()) == expected);
  }
}
