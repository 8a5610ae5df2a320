#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "tsg/classifier.hpp"
#include "tsg/cycle_notation.hpp"
#include "tsg/errors.hpp"

using namespace tsg;

namespace {

PermGroup named(int n, int k, std::initializer_list<const char*> names) {
  std::vector<Permutation> gens;
  for (auto name : names) gens.push_back(named_automorphism(n, k, name).perm);
  return closure(gens, static_cast<std::size_t>(2 * n), {.cap = 100000});
}

bool oracle_property(const oracle::Graph& g, const oracle::Perm& p, ObstructionKind kind) {
  auto ct = oracle::cycle_type(p);
  int ord = oracle::order(p);
  switch (kind) {
    case ObstructionKind::Order2SixTwoCycles:
      return ord == 2 && ct[2] == 6 && ct.size() == 2;
    case ObstructionKind::Order4AdjacentTwoCycle:
      if (ord != 4) return false;
      for (std::size_t x = 0; x < p.size(); ++x)
        if (p[p[x]] == static_cast<int>(x) && p[x] != static_cast<int>(x) && oracle::adjacent(g, x, p[x]))
          return true;
      return false;
    case ObstructionKind::Order6WithThreeCycles:
      return ord == 6 && ct.count(3) && ct[3] > 0;
    default:
      return false;
  }
}

// dihedral subgroup generated by the rotation and the reflection, built independently
std::set<oracle::Perm> dihedral(int n) {
  oracle::Perm r(2 * n), s(2 * n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    r[n + i] = n + (i + 1) % n;
    s[i] = (n - i) % n;
    s[n + i] = n + (n - i) % n;
  }
  return oracle::generate({r, s}, 2 * n);
}

bool conjugate_into(const PermGroup& h, const PermGroup& aut, const std::set<oracle::Perm>& d) {
  auto hs = oracle::elements_of(h);
  for (const auto& g : aut.elements()) {
    auto gp = oracle::from(g);
    auto gi = oracle::inverse(gp);
    bool inside = std::all_of(hs.begin(), hs.end(),
                              [&](const oracle::Perm& x) { return d.count(oracle::compose(gp, oracle::compose(x, gi))); });
    if (inside) return true;
  }
  return false;
}

std::set<std::string> citation_ids(const Verdict& v) {
  std::set<std::string> out;
  for (const auto& c : v.citations) out.insert(c.id);
  return out;
}

}  // namespace

TEST_CASE("dihedral and plus-one pairs are Yes/Yes") {
  Classifier c(7, 2);
  auto v = c.classify(c.automorphisms());
  CHECK(v.realizable == Decision::Yes);
  CHECK(v.positively_realizable == Decision::Yes);
  CHECK_FALSE(v.witness.has_value());
  CHECK_FALSE(v.citations.empty());
  for (const auto& row : classify_all(9, 2)) CHECK(row.verdict.positively_realizable == Decision::Yes);
}

TEST_CASE("minus-one branch against a conjugacy oracle") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{13, 5}, {17, 4}, {26, 5}}) {
    CAPTURE(n);
    Classifier c(n, k);
    auto d = dihedral(n);
    for (const auto& row : c.classify_all()) {
      const auto& h = row.subgroup_class.representative;
      bool expected = conjugate_into(h, c.automorphisms(), d) ||
                      (n % 2 == 0 && row.subgroup_class.iso_label == parse_label("Z_4"));
      CHECK(row.verdict.realizable == Decision::Yes);
      CHECK(row.verdict.positively_realizable == (expected ? Decision::Yes : Decision::No));
      if (!expected) {
        REQUIRE(row.verdict.witness.has_value());
        CHECK(row.verdict.witness->kind == ObstructionKind::Order4FormViolation);
        REQUIRE(row.verdict.witness->witness_element.has_value());
        const auto& w = *row.verdict.witness->witness_element;
        CHECK(element_order(w) == 4);
        CHECK(h.contains(w));
        CHECK_FALSE(d.count(oracle::from(w)));
        CHECK(citation_ids(row.verdict).count("no-order4"));
      }
    }
  }
}

TEST_CASE("Z4 on P(13,5) is realizable but not positively realizable") {
  Classifier c(13, 5);
  auto z4 = conjugacy_classes_of_subgroups(c.automorphisms(), "Z_4");
  REQUIRE(z4.size() == 1);
  auto v = c.classify(z4[0].representative);
  CHECK(v.realizable == Decision::Yes);
  CHECK(v.positively_realizable == Decision::No);
}

TEST_CASE("P(10,3) verdicts") {
  Classifier c(10, 3);
  auto d6 = named(10, 3, {"theta1", "theta2"});
  CHECK(identify_group(d6) == parse_label("D_6"));
  auto v = c.classify(d6);
  CHECK(v.realizable == Decision::Yes);
  CHECK(v.positively_realizable == Decision::Yes);

  for (const auto& sc : conjugacy_classes_of_subgroups(c.automorphisms(), "S_4")) {
    auto s = c.classify(sc.representative);
    CHECK(s.realizable == Decision::Yes);
    CHECK(s.positively_realizable == Decision::No);
    REQUIRE(s.witness.has_value());
  }

  std::set<GroupLabel> some_yes, not_positive;
  std::map<GroupLabel, bool> any_yes;
  for (const auto& row : c.classify_all()) {
    CHECK(row.verdict.realizable == Decision::Yes);
    if (row.subgroup_class.representative.order() == 1) continue;
    auto& flag = any_yes[row.subgroup_class.iso_label];
    flag = flag || row.verdict.positively_realizable == Decision::Yes;
  }
  for (auto& [label, yes] : any_yes) (yes ? some_yes : not_positive).insert(label);
  std::set<GroupLabel> expected_no, expected_yes;
  for (const auto& s : PaperRegistry::instance().p103_not_positive()) expected_no.insert(parse_label(s));
  for (auto s : {"D_10", "Z_10", "D_5", "Z_5", "A_5 x Z_2", "A_5", "A_4 x Z_2", "A_4", "Z_3", "Z_2^3", "D_4", "Z_4",
                 "D_6", "Z_6", "S_3", "Z_2", "Z_2^2"})
    expected_yes.insert(parse_label(s));
  CHECK(expected_no.size() == 10);
  CHECK(not_positive == expected_no);
  CHECK(some_yes == expected_yes);
}

TEST_CASE("obstruction scan") {
  auto g = PetersenGraph::build(10, 3);
  auto og = oracle::petersen(10, 3);
  CHECK(obstruction_scan(g, closure(std::vector<Permutation>{}, 20)).empty());

  auto beta = parse_cycles("(u_1 v_4)(u_2 u_4)(u_5 v_2)(u_6 v_9)(u_7 u_9)(u_{10} v_7)", 10);
  auto found = obstruction_scan(g, closure({beta}, 20));
  REQUIRE(found.size() == 1);
  CHECK(found[0].kind == ObstructionKind::Order2SixTwoCycles);
  CHECK(found[0].witness_element == std::optional<Permutation>(beta));

  auto rho = parse_cycles("(u_1 v_2 u_3)(u_4 u_{10} v_5 v_3 v_1 v_9)(u_5 v_{10} v_8 v_6 v_4 u_9)(u_6 v_7 u_8)", 10);
  std::set<ObstructionKind> kinds;
  for (const auto& o : obstruction_scan(g, closure({rho}, 20))) kinds.insert(o.kind);
  CHECK(kinds.count(ObstructionKind::Order6WithThreeCycles));
  CHECK(kinds.count(ObstructionKind::Order2SixTwoCycles));

  auto aut = automorphism_group(g);
  for (const auto& sc : conjugacy_classes_of_subgroups(aut)) {
    for (const auto& o : obstruction_scan(g, sc.representative)) {
      REQUIRE(o.witness_element.has_value());
      CHECK(has_element_property(g, *o.witness_element, o.kind));
      CHECK(oracle_property(og, oracle::from(*o.witness_element), o.kind));
      for (const auto& p : sc.representative.elements()) {
        if (p == *o.witness_element) break;
        CHECK_FALSE(oracle_property(og, oracle::from(p), o.kind));
      }
    }
  }
  for (const auto& p : aut.elements())
    for (auto kind : {ObstructionKind::Order2SixTwoCycles, ObstructionKind::Order4AdjacentTwoCycle,
                      ObstructionKind::Order6WithThreeCycles})
      CHECK(has_element_property(g, p, kind) == oracle_property(og, oracle::from(p), kind));

  CHECK_THROWS_AS(obstruction_scan(g, closure({parse_cycles("(u1 u2)", 10)}, 20)), NotASubgroupError);
}

TEST_CASE("order-4 form check") {
  CHECK(order4_form_check(5, 2).order4_elements.size() == 10);
  CHECK(order4_form_check(5, 2).all_of_form);
  CHECK(order4_form_check(10, 3).order4_elements.size() == 20);
  CHECK(order4_form_check(10, 3).all_of_form);
  CHECK(order4_form_check(13, 5).order4_elements.size() == 26);
  CHECK(order4_form_check(13, 5).all_of_form);
  CHECK_THROWS_AS(order4_form_check(7, 2), ConstructionError);
}

TEST_CASE("exceptional pairs") {
  for (const auto& row : classify_all(4, 1)) {
    CHECK(row.verdict.realizable == Decision::Yes);
    CHECK(row.verdict.positively_realizable == Decision::Yes);
  }
  for (const auto& row : classify_all(5, 2)) {
    CHECK(row.verdict.realizable == Decision::ExternalReference);
    CHECK(row.verdict.positively_realizable == Decision::ExternalReference);
  }
  for (const auto& row : classify_all(24, 5)) {
    CHECK(row.verdict.realizable == Decision::Unknown);
    CHECK(row.verdict.positively_realizable == Decision::Unknown);
  }
}

TEST_CASE("errors and serialization") {
  CHECK_THROWS_AS(Classifier(6, 3), ConstructionError);
  Classifier c(7, 2);
  CHECK_THROWS_AS(c.classify(closure({parse_cycles("(u1 u2)", 7)}, 14)), NotASubgroupError);
  CHECK(c.class_size(c.automorphisms()) == 1);

  Classifier p(10, 3);
  auto beta = named(10, 3, {"beta"});
  auto v = p.classify(beta);
  auto j = nlohmann::json::parse(verdict_json(10, 3, "Z_2", p.class_size(beta), v));
  CHECK(j.at("n") == 10);
  CHECK(j.at("subgroup_label") == "Z_2");
  CHECK(j.at("realizable") == "Yes");
  CHECK(j.at("positively_realizable") == "No");
  CHECK(j.at("witness").at("kind") == "Order2SixTwoCycles");
  CHECK(parse_cycles(j.at("witness").at("element").get<std::string>(), 10) == named_automorphism(10, 3, "beta").perm);
  CHECK(j.at("class_size") == 10);
}
