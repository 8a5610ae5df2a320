#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "tsg/autsearch.hpp"
#include "tsg/errors.hpp"
#include "tsg/paperlib.hpp"
#include "tsg/petersen.hpp"

using namespace tsg;

namespace {

PermGroup bnk(int n, int k) {
  std::vector<Permutation> gens;
  for (const auto& a : bnk_generators(n, k)) gens.push_back(a.perm);
  return closure(gens, static_cast<std::size_t>(2 * n), {.cap = 100000});
}

bool spoke_preserving(const oracle::Perm& p, int n) {
  for (int i = 0; i < n; ++i) {
    int a = p[i], b = p[n + i];
    if (std::abs(a - b) != n) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every registry automorphism is an automorphism of its graph") {
  const auto& reg = PaperRegistry::instance();
  CHECK(reg.automorphisms().size() == 40);
  for (const auto& a : reg.automorphisms()) {
    CAPTURE(a.name);
    CHECK(is_automorphism(PetersenGraph::build(a.n, a.k), a.perm));
    CHECK_FALSE(a.citation.quote.empty());
  }
}

TEST_CASE("bnk generators") {
  auto d7 = bnk_generators(7, 2);
  REQUIRE(d7.size() == 2);
  CHECK(d7[0].name == "rho");
  CHECK(d7[1].name == "sigma");
  CHECK(bnk(7, 2).order() == 14);

  auto p83 = bnk_generators(8, 3);
  REQUIRE(p83.size() == 3);
  CHECK(compose(p83[2].perm, p83[2].perm).is_identity());
  CHECK(bnk(8, 3).order() == 32);
  CHECK(identify_group(bnk(8, 3)) == parse_label("D_8 : Z_2"));

  auto p103 = bnk_generators(10, 3);
  REQUIRE(p103.size() == 3);
  CHECK(element_order(p103[2].perm) == 4);
  CHECK(conjugate(p103[0].perm, p103[2].perm) == power(p103[0].perm, 3));
  CHECK(bnk(10, 3).order() == 40);
  CHECK(identify_group(bnk(10, 3)) == parse_label("Z_10 : Z_4"));
  CHECK_THROWS_AS(bnk_generators(6, 3), ConstructionError);
}

TEST_CASE("B(n,k) is the spoke-preserving part of Aut, by plain backtracking") {
  for (int n = 3; n <= 13; ++n)
    for (int k = 1; 2 * k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      std::vector<oracle::Perm> expected;
      for (const auto& p : oracle::automorphisms(oracle::petersen(n, k)))
        if (spoke_preserving(p, n)) expected.push_back(p);
      CHECK(oracle::elements_of(bnk(n, k)) == expected);
    }
}

TEST_CASE("trichotomy and exceptional pairs") {
  CHECK(trichotomy(7, 2) == Trichotomy::Dihedral);
  CHECK(trichotomy(8, 3) == Trichotomy::PlusOne);
  CHECK(trichotomy(13, 5) == Trichotomy::MinusOne);
  CHECK(trichotomy(7, 1) == Trichotomy::PlusOne);
  std::vector<std::pair<int, int>> found;
  for (int n = 3; n <= 30; ++n)
    for (int k = 1; 2 * k < n; ++k)
      if (is_exceptional(n, k)) found.emplace_back(n, k);
  CHECK(found == std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {8, 3}, {10, 2}, {10, 3}, {12, 5}, {24, 5}});
}

TEST_CASE("special vertex sets") {
  auto p102 = special_vertex_sets(10, 2);
  CHECK(p102.at("T1") == std::set<Vertex>{outer(1, 10), outer(4, 10), inner(7, 10), inner(8, 10)});
  CHECK(p102.at("T2") == std::set<Vertex>{outer(6, 10), outer(9, 10), inner(2, 10), inner(3, 10)});
  auto p83 = special_vertex_sets(8, 3);
  std::set<Vertex> a;
  for (int i = 1; i <= 8; ++i) a.insert(i % 2 == 0 ? outer(i, 8) : inner(i, 8));
  CHECK(p83.at("A") == a);
  CHECK_THROWS_AS(special_vertex_sets(7, 2), UnknownPairError);
  CHECK_THROWS_AS(named_automorphisms(7, 2), UnknownPairError);
  CHECK_THROWS_AS(named_automorphism(10, 3, "nope"), UnknownPairError);
}

TEST_CASE("exceptional catalog") {
  std::map<std::pair<int, int>, ExceptionalRecord> by_pair;
  for (const auto& r : exceptional_catalog()) by_pair[{r.n, r.k}] = r;
  CHECK(by_pair.size() == 7);
  CHECK(by_pair.at({10, 2}).aut_label == parse_label("A_5 x Z_2"));
  CHECK(by_pair.at({10, 2}).aut_order == 120);
  CHECK(by_pair.at({5, 2}).aut_label == parse_label("S_5"));
  CHECK(by_pair.at({5, 2}).status == ExceptionalStatus::ExternalReference);
  CHECK(by_pair.at({24, 5}).status == ExceptionalStatus::Deferred);
  CHECK(by_pair.at({12, 5}).status == ExceptionalStatus::Deferred);
  for (const auto& [key, r] : by_pair) {
    CAPTURE(key.first);
    CAPTURE(key.second);
    CHECK(automorphism_group(PetersenGraph::build(key.first, key.second)).order() == r.aut_order);
  }
}

TEST_CASE("registry loading") {
  auto reg = PaperRegistry::load(PaperRegistry::embedded_json());
  CHECK(reg.automorphisms().size() == PaperRegistry::instance().automorphisms().size());
  CHECK(reg.claims().size() == 66);
  CHECK(reg.claim("p83-stabilizer-orders").location == "Section 6");
  CHECK_THROWS_AS(reg.claim("missing"), std::out_of_range);
  CHECK_THROWS_AS(PaperRegistry::load("{"), ParseError);
  CHECK_THROWS_AS(PaperRegistry::load("{}"), ParseError);

  auto doc = nlohmann::json::parse(PaperRegistry::embedded_json());
  for (auto& a : doc.at("automorphisms"))
    if (a.at("name") == "beta" && a.at("graph") == nlohmann::json::array({10, 3})) a["cycles"] = "(u_1 u_2)";
  CHECK_THROWS_AS(PaperRegistry::load(doc.dump()), NotAutomorphismError);
}
