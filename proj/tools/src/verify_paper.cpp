#include "verify_paper.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include <json.hpp>

#include "tsg/classifier.hpp"
#include "tsg/errors.hpp"
#include "tsg/grouplab.hpp"

namespace tsg::cli {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "Pass";
    case ClaimStatus::Fail: return "Fail";
    case ClaimStatus::Skipped: return "Skipped";
  }
  return "Skipped";
}

namespace {

using json = nlohmann::json;
using Key = std::pair<int, int>;

struct Outcome {
  json expected;
  json computed;
};

class Context {
 public:
  Context(const PaperRegistry& registry, SearchOptions search) : reg(registry), search_(search) {}

  const PaperRegistry& reg;

  const PetersenGraph& graph(int n, int k) {
    auto it = graphs_.find({n, k});
    if (it == graphs_.end()) it = graphs_.emplace(Key{n, k}, PetersenGraph::build(n, k)).first;
    return it->second;
  }

  const PermGroup& aut(int n, int k) {
    auto it = auts_.find({n, k});
    if (it == auts_.end()) it = auts_.emplace(Key{n, k}, automorphism_group(graph(n, k), search_)).first;
    return it->second;
  }

  const SubgroupLattice& lattice(int n, int k) {
    auto& slot = lattices_[{n, k}];
    if (!slot) slot = std::make_unique<SubgroupLattice>(aut(n, k));
    return *slot;
  }

  const std::vector<ClassifiedClass>& table(int n, int k) {
    auto it = tables_.find({n, k});
    if (it == tables_.end())
      it = tables_.emplace(Key{n, k}, Classifier(n, k, search_, reg).classify_all()).first;
    return it->second;
  }

  const Classifier& classifier(int n, int k) {
    auto& slot = classifiers_[{n, k}];
    if (!slot) slot = std::make_unique<Classifier>(n, k, search_, reg);
    return *slot;
  }

  Permutation perm(int n, int k, std::string_view name) const { return reg.get(n, k, name).perm; }

  PermGroup group(int n, int k, std::initializer_list<std::string_view> names) const {
    std::vector<Permutation> gens;
    for (auto name : names) gens.push_back(perm(n, k, name));
    return closure(gens, static_cast<std::size_t>(2 * n), {.cap = 100000});
  }

 private:
  SearchOptions search_;
  std::map<Key, PetersenGraph> graphs_;
  std::map<Key, PermGroup> auts_;
  std::map<Key, std::unique_ptr<SubgroupLattice>> lattices_;
  std::map<Key, std::vector<ClassifiedClass>> tables_;
  std::map<Key, std::unique_ptr<Classifier>> classifiers_;
};

std::string pair_name(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

std::string label(const PermGroup& g) { return identify_group(g).str(); }

std::string canon(std::string_view expression) { return parse_label(expression).str(); }

json canon_sorted(std::initializer_list<std::string_view> expressions) {
  std::set<std::string> s;
  for (auto e : expressions) s.insert(canon(e));
  return json(s);
}

std::vector<Key> admissible_pairs(int max_n) {
  std::vector<Key> out;
  for (int n = 3; n <= max_n; ++n)
    for (int k = 1; 2 * k < n; ++k) out.emplace_back(n, k);
  return out;
}

std::vector<Key> nonexceptional_pairs(int max_n, std::optional<Trichotomy> branch = std::nullopt) {
  std::vector<Key> out;
  for (auto [n, k] : admissible_pairs(max_n)) {
    if (is_exceptional(n, k)) continue;
    if (branch && trichotomy(n, k) != *branch) continue;
    out.emplace_back(n, k);
  }
  return out;
}

std::vector<Key> minus_one_pairs(int max_n) {
  std::vector<Key> out;
  for (auto [n, k] : admissible_pairs(max_n))
    if (trichotomy(n, k) == Trichotomy::MinusOne) out.emplace_back(n, k);
  return out;
}

PermGroup bnk(int n, int k) {
  std::vector<Permutation> gens;
  for (const auto& a : bnk_generators(n, k)) gens.push_back(a.perm);
  return closure(gens, static_cast<std::size_t>(2 * n), {.cap = 100000});
}

Point point(const PetersenGraph& g, std::string_view vertex) { return to_point(parse_vertex(vertex, g.n()), g.n()); }

bool fixes_edge(const Permutation& p, Point a, Point b) { return p[a] == a && p[b] == b; }

bool edge_free(const PetersenGraph& g, const PermGroup& h, std::string_view a, std::string_view b) {
  Point x = point(g, a);
  Point y = point(g, b);
  if (!g.adjacent(x, y)) throw Error(std::string(a) + std::string(b) + " is not an edge");
  return std::none_of(h.elements().begin(), h.elements().end(),
                      [&](const Permutation& p) { return !p.is_identity() && fixes_edge(p, x, y); });
}

std::string edge_name(const PetersenGraph& g, Point a, Point b) {
  std::string x = g.label(a);
  std::string y = g.label(b);
  return x < y ? x + y : y + x;
}

json pointwise_fixed_edges(const PetersenGraph& g, const PermGroup& h) {
  std::set<std::string> out;
  for (const auto& e : g.edges())
    for (const auto& p : h.elements())
      if (!p.is_identity() && fixes_edge(p, e.a, e.b)) out.insert(edge_name(g, e.a, e.b));
  return json(out);
}

std::set<Vertex> image(const std::set<Vertex>& s, const Permutation& p, int n) {
  std::set<Vertex> out;
  for (auto v : s) out.insert(to_vertex(p[to_point(v, n)], n));
  return out;
}

bool contains_kind(const PetersenGraph& g, const PermGroup& h, ObstructionKind kind) {
  return std::any_of(h.elements().begin(), h.elements().end(),
                     [&](const Permutation& p) { return has_element_property(g, p, kind); });
}

std::vector<PermGroup> class_representatives(const SubgroupLattice& lattice, std::string_view name) {
  std::vector<PermGroup> out;
  std::string want = canon(name);
  for (std::size_t c = 0; c < lattice.class_count(); ++c)
    if (lattice.class_label(c).str() == want) out.push_back(lattice.describe_class(c).representative);
  return out;
}

std::vector<PermGroup> subgroups_labelled(const SubgroupLattice& lattice, std::string_view name) {
  std::vector<PermGroup> out;
  std::string want = canon(name);
  const auto& subs = lattice.subgroups();
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (lattice.class_label(lattice.class_of()[i]).str() == want) out.push_back(lattice.table().to_group(subs[i]));
  return out;
}

std::set<Permutation> conjugacy_class(const Permutation& x, const PermGroup& g) {
  std::set<Permutation> out;
  for (const auto& y : g.elements()) out.insert(conjugate(x, y));
  return out;
}

bool commute(const Permutation& a, const Permutation& b) { return compose(a, b) == compose(b, a); }

Outcome aut_claim(Context& ctx, int n, int k, std::size_t order, std::string_view expected_label) {
  const auto& a = ctx.aut(n, k);
  return {{{"order", order}, {"label", canon(expected_label)}}, {{"order", a.order()}, {"label", label(a)}}};
}

Outcome generators_claim(Context& ctx, int n, int k, std::initializer_list<std::string_view> names,
                         std::size_t order, std::string_view expected_label) {
  const auto& a = ctx.aut(n, k);
  PermGroup g = ctx.group(n, k, names);
  return {{{"order", order}, {"label", canon(expected_label)}, {"equals_closure_of_generators", true}},
          {{"order", a.order()}, {"label", label(a)}, {"equals_closure_of_generators", g == a}}};
}

Outcome label_maximal(const PermGroup& h, const PermGroup& g, std::string_view expected_label) {
  return {{{"label", canon(expected_label)}, {"maximal", true}},
          {{"label", label(h)}, {"maximal", is_maximal_subgroup(h, g)}}};
}

/// Rows of a classify_all table checked against a uniform expectation.
Outcome uniform_table(Context& ctx, const std::vector<Key>& pairs, Decision realizable, Decision positive) {
  json failures = json::array();
  for (auto [n, k] : pairs) {
    for (const auto& row : ctx.table(n, k)) {
      if (row.verdict.realizable != realizable || row.verdict.positively_realizable != positive) {
        failures.push_back(pair_name(n, k));
        break;
      }
    }
  }
  return {json::array(), failures};
}

using ClaimFn = std::function<Outcome(Context&)>;

const std::map<std::string, ClaimFn>& claim_table() {
  static const std::map<std::string, ClaimFn> table = [] {
    std::map<std::string, ClaimFn> t;

    t["trichotomy-orders"] = [](Context& ctx) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : nonexceptional_pairs(30)) {
        const auto& a = ctx.aut(n, k);
        std::size_t want = trichotomy(n, k) == Trichotomy::Dihedral ? 2u * n : 4u * n;
        if (a.order() != want || !(bnk(n, k) == a)) failures.push_back(pair_name(n, k));
      }
      return {json::array(), failures};
    };
    t["bnk-spoke"] = [](Context& ctx) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : admissible_pairs(30)) {
        std::vector<Permutation> keep;
        for (const auto& p : ctx.aut(n, k).elements()) {
          bool spokes = true;
          for (int i = 0; i < n && spokes; ++i) {
            Vertex a = to_vertex(p[to_point(outer(i, n), n)], n);
            Vertex b = to_vertex(p[to_point(inner(i, n), n)], n);
            spokes = a.index == b.index && a.ring != b.ring;
          }
          if (spokes) keep.push_back(p);
        }
        if (keep != bnk(n, k).elements()) failures.push_back(pair_name(n, k));
      }
      return {json::array(), failures};
    };
    t["p52-aut"] = [](Context& ctx) { return aut_claim(ctx, 5, 2, 120, "S_5"); };

    t["presentation-relations"] = [](Context&) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : minus_one_pairs(30)) {
        auto gens = bnk_generators(n, k);
        const auto& rho = gens.at(0).perm;
        const auto& alpha = gens.at(2).perm;
        bool ok = power(rho, n).is_identity() && power(alpha, 4).is_identity() &&
                  compose(compose(alpha, rho), inverse(alpha)) == power(rho, k);
        if (!ok) failures.push_back(pair_name(n, k));
      }
      return {json::array(), failures};
    };
    t["order4-form"] = [](Context&) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : minus_one_pairs(30)) {
        auto r = order4_form_check(n, k);
        if (!r.all_of_form || r.order4_elements.size() != static_cast<std::size_t>(2 * n))
          failures.push_back(pair_name(n, k));
      }
      return {json::array(), failures};
    };
    t["d4-exclusion"] = [](Context&) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : minus_one_pairs(30)) {
        if (!conjugacy_classes_of_subgroups(bnk(n, k), parse_label("D_4")).empty())
          failures.push_back(pair_name(n, k));
      }
      return {json::array(), failures};
    };
    t["divisibility"] = [](Context&) -> Outcome {
      json found = json::array();
      for (long long n = 4; n <= 1000; n += 4)
        for (long long k = 1; k < n; ++k)
          if ((k * k + 1) % n == 0) {
            found.push_back(n);
            break;
          }
      return {json::array(), found};
    };
    t["minus-one-crosscheck"] = [](Context& ctx) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : nonexceptional_pairs(30, Trichotomy::MinusOne)) {
        for (const auto& row : ctx.table(n, k)) {
          const auto& h = row.subgroup_class.representative;
          bool no_order4 = std::none_of(h.elements().begin(), h.elements().end(),
                                        [](const Permutation& p) { return element_order(p) == 4; });
          bool z4 = n % 2 == 0 && row.subgroup_class.iso_label == parse_label("Z_4");
          bool yes = row.verdict.positively_realizable == Decision::Yes;
          if (yes != (no_order4 || z4)) {
            failures.push_back(pair_name(n, k));
            break;
          }
        }
      }
      return {json::array(), failures};
    };

    t["p41-aut"] = [](Context& ctx) { return aut_claim(ctx, 4, 1, 48, "S_4 x Z_2"); };
    t["p41-generators"] = [](Context& ctx) -> Outcome {
      const auto& a = ctx.aut(4, 1);
      PermGroup s4 = ctx.group(4, 1, {"rho@S4", "sigma@S4"});
      return {{{"generates_aut", true}, {"s4_label", canon("S_4")}, {"s4_maximal", true}},
              {{"generates_aut", ctx.group(4, 1, {"rho@S4", "sigma@S4", "delta@S4"}) == a},
               {"s4_label", label(s4)},
               {"s4_maximal", is_maximal_subgroup(s4, a)}}};
    };
    t["p41-s4-no-fixed-edge"] = [](Context& ctx) -> Outcome {
      return {json::array(), pointwise_fixed_edges(ctx.graph(4, 1), ctx.group(4, 1, {"rho@S4", "sigma@S4"}))};
    };
    t["p41-a4z2"] = [](Context& ctx) -> Outcome {
      const auto& a = ctx.aut(4, 1);
      auto alpha = ctx.perm(4, 1, "alpha@A4xZ2");
      auto beta = ctx.perm(4, 1, "beta@A4xZ2");
      auto delta = ctx.perm(4, 1, "delta@A4xZ2");
      PermGroup h = closure(std::vector<Permutation>{alpha, compose(beta, beta), delta}, 8);
      return {{{"generates_aut", true}, {"label", canon("A_4 x Z_2")}, {"maximal", true}},
              {{"generates_aut", closure(std::vector<Permutation>{alpha, beta, delta}, 8) == a},
               {"label", label(h)},
               {"maximal", is_maximal_subgroup(h, a)}}};
    };
    t["p41-d4z2"] = [](Context& ctx) -> Outcome {
      return {{{"label", canon("D_4 x Z_2")}},
              {{"label", label(ctx.group(4, 1, {"rho@D4xZ2", "delta@D4xZ2", "alpha@D4xZ2"}))}}};
    };
    t["p41-d3z2"] = [](Context& ctx) {
      return label_maximal(ctx.group(4, 1, {"alpha@D3xZ2", "beta@D3xZ2", "delta@D3xZ2"}), ctx.aut(4, 1),
                           "D_3 x Z_2");
    };
    t["p41-d3z2-free-edge"] = [](Context& ctx) -> Outcome {
      return {{{"u4v4_free", true}},
              {{"u4v4_free", edge_free(ctx.graph(4, 1),
                                       ctx.group(4, 1, {"alpha@D3xZ2", "beta@D3xZ2", "delta@D3xZ2"}), "u4", "v4")}}};
    };

    t["p83-generators"] = [](Context& ctx) {
      return generators_claim(ctx, 8, 3, {"mu", "beta", "gamma"}, 96, "GL(2,3) : Z_2");
    };
    t["p83-maximal"] = [](Context& ctx) -> Outcome {
      const auto& a = ctx.aut(8, 3);
      const auto& lattice = ctx.lattice(8, 3);
      std::set<std::string> labels;
      for (std::size_t c = 0; c < lattice.class_count(); ++c) {
        auto rep = lattice.describe_class(c).representative;
        if (rep.order() < a.order() && is_maximal_subgroup(rep, a)) labels.insert(lattice.class_label(c).str());
      }
      auto entry = [&](const PermGroup& h) { return json{{"label", label(h)}, {"maximal", is_maximal_subgroup(h, a)}}; };
      auto want = [](std::string_view l) { return json{{"label", canon(l)}, {"maximal", true}}; };
      return {{{"maximal_labels", canon_sorted({"D_12", "D_8 : Z_2", "GL(2,3)", "SL(2,3) : Z_2"})},
               {"<beta1,beta>", want("D_12")},
               {"B(8,3)", want("D_8 : Z_2")},
               {"<delta1,delta2>", want("GL(2,3)")},
               {"<rho1,rho2,rho3>", want("SL(2,3) : Z_2")}},
              {{"maximal_labels", labels},
               {"<beta1,beta>", entry(ctx.group(8, 3, {"beta1", "beta"}))},
               {"B(8,3)", entry(bnk(8, 3))},
               {"<delta1,delta2>", entry(ctx.group(8, 3, {"delta1", "delta2"}))},
               {"<rho1,rho2,rho3>", entry(ctx.group(8, 3, {"rho1", "rho2", "rho3"}))}}};
    };
    t["p83-d12"] = [](Context& ctx) -> Outcome {
      auto u = special_vertex_sets(8, 3).at("U");
      auto leaves = [&](const PermGroup& g) {
        return std::all_of(g.elements().begin(), g.elements().end(),
                           [&](const Permutation& p) { return setwise_invariant(p, u, 8); });
      };
      return {{{"d12_leaves_U", true}, {"aut_leaves_U", false}},
              {{"d12_leaves_U", leaves(ctx.group(8, 3, {"beta1", "beta"}))}, {"aut_leaves_U", leaves(ctx.aut(8, 3))}}};
    };
    t["p83-d12-free-edge"] = [](Context& ctx) -> Outcome {
      return {{{"v5u5_free", true}},
              {{"v5u5_free", edge_free(ctx.graph(8, 3), ctx.group(8, 3, {"beta1", "beta"}), "v5", "u5")}}};
    };
    t["p83-gl"] = [](Context& ctx) -> Outcome {
      auto sets = special_vertex_sets(8, 3);
      PermGroup gl = ctx.group(8, 3, {"delta1", "delta2"});
      auto leaves = [&](const std::set<Vertex>& s) {
        return std::all_of(gl.elements().begin(), gl.elements().end(),
                           [&](const Permutation& p) { return setwise_invariant(p, s, 8); });
      };
      return {{{"A_invariant", true}, {"B_invariant", true}},
              {{"A_invariant", leaves(sets.at("A"))}, {"B_invariant", leaves(sets.at("B"))}}};
    };
    t["p83-gamma-moves-ab"] = [](Context& ctx) -> Outcome {
      auto sets = special_vertex_sets(8, 3);
      auto gamma = ctx.perm(8, 3, "gamma");
      return {{{"gamma_leaves_A", false}, {"gamma_leaves_B", false}},
              {{"gamma_leaves_A", setwise_invariant(gamma, sets.at("A"), 8)},
               {"gamma_leaves_B", setwise_invariant(gamma, sets.at("B"), 8)}}};
    };
    t["p83-stabilizer-orders"] = [](Context& ctx) -> Outcome {
      PermGroup sl = ctx.group(8, 3, {"rho1", "rho2", "rho3"});
      std::set<std::uint64_t> orders;
      for (const auto& p : sl.elements())
        if (!p.is_identity() && !fixed_points(p).empty()) orders.insert(element_order(p));
      return {{{"order", 48}, {"label", canon("SL(2,3) : Z_2")}, {"orders", std::set<std::uint64_t>{3}}},
              {{"order", sl.order()}, {"label", label(sl)}, {"orders", orders}}};
    };
    t["p83-sl-no-fixed-edge"] = [](Context& ctx) -> Outcome {
      return {json::array(), pointwise_fixed_edges(ctx.graph(8, 3), ctx.group(8, 3, {"rho1", "rho2", "rho3"}))};
    };

    auto tetra_stabilizer = [](Context& ctx) {
      auto sets = special_vertex_sets(10, 2);
      std::set<Vertex> both = sets.at("T1");
      both.insert(sets.at("T2").begin(), sets.at("T2").end());
      std::vector<Permutation> keep;
      for (const auto& p : ctx.aut(10, 2).elements())
        if (setwise_invariant(p, both, 10)) keep.push_back(p);
      return make_group_from_sorted(keep, greedy_generators(keep, 20));
    };
    t["p102-aut"] = [](Context& ctx) { return aut_claim(ctx, 10, 2, 120, "A_5 x Z_2"); };
    t["p102-a4z2"] = [tetra_stabilizer](Context& ctx) {
      return label_maximal(tetra_stabilizer(ctx), ctx.aut(10, 2), "A_4 x Z_2");
    };
    t["p102-order5"] = [](Context& ctx) -> Outcome {
      auto sets = special_vertex_sets(10, 2);
      std::set<Vertex> both = sets.at("T1");
      both.insert(sets.at("T2").begin(), sets.at("T2").end());
      std::size_t count = 0;
      for (const auto& p : ctx.aut(10, 2).elements())
        if (element_order(p) == 5 && setwise_invariant(p, both, 10)) ++count;
      return {{{"order5_preserving_T1_T2", 0}}, {{"order5_preserving_T1_T2", count}}};
    };
    t["p102-equator"] = [](Context& ctx) -> Outcome {
      auto sets = special_vertex_sets(10, 2);
      auto alpha = ctx.perm(10, 2, "alpha");
      return {{{"T1_to_T2", true}, {"T2_to_T1", true}},
              {{"T1_to_T2", image(sets.at("T1"), alpha, 10) == sets.at("T2")},
               {"T2_to_T1", image(sets.at("T2"), alpha, 10) == sets.at("T1")}}};
    };
    t["p102-a4z2-free-edge"] = [tetra_stabilizer](Context& ctx) -> Outcome {
      return {{{"v2v4_free", true}}, {{"v2v4_free", edge_free(ctx.graph(10, 2), tetra_stabilizer(ctx), "v2", "v4")}}};
    };
    t["p102-alpha-prime"] = [](Context& ctx) -> Outcome {
      auto product = compose(ctx.perm(10, 2, "alpha2"), ctx.perm(10, 2, "alpha1"));
      return {{{"alpha2_alpha1_is_alpha_prime", true}},
              {{"alpha2_alpha1_is_alpha_prime", product == ctx.perm(10, 2, "alpha'")}}};
    };
    t["p102-pair-fixed"] = [](Context& ctx) -> Outcome {
      std::set<Vertex> pair{outer(1, 10), outer(6, 10)};
      json computed;
      for (const char* name : {"alpha'", "beta", "gamma"})
        computed[name] = setwise_invariant(ctx.perm(10, 2, name), pair, 10);
      return {{{"alpha'", true}, {"beta", true}, {"gamma", true}}, computed};
    };
    t["p102-d6"] = [](Context& ctx) {
      return label_maximal(ctx.group(10, 2, {"alpha'", "beta", "gamma"}), ctx.aut(10, 2), "D_6");
    };

    t["p103-generators"] = [](Context& ctx) {
      return generators_claim(ctx, 10, 3, {"alpha", "beta"}, 240, "S_5 x Z_2");
    };
    t["p103-subgroup-list"] = [](Context& ctx) -> Outcome {
      std::set<std::string> expected;
      for (const auto& e : ctx.reg.p103_subgroups_corrected()) expected.insert(canon(e));
      const auto& lattice = ctx.lattice(10, 3);
      std::size_t top = ctx.aut(10, 3).order();
      std::set<std::string> computed;
      for (std::size_t c = 0; c < lattice.class_count(); ++c) {
        auto order = lattice.subgroups()[lattice.class_members(c).front()].count();
        if (order > 1 && order < top) computed.insert(lattice.class_label(c).str());
      }
      return {{{"count", expected.size()}, {"labels", expected}}, {{"count", computed.size()}, {"labels", computed}}};
    };
    t["p103-f20-involutions"] = [](Context& ctx) -> Outcome {
      bool ok = true;
      auto groups = subgroups_labelled(ctx.lattice(10, 3), "Z_5 : Z_4");
      for (const auto& h : groups)
        for (const auto& p : h.elements())
          if (element_order(p) == 2) {
            auto f = fixed_points(p).size();
            ok = ok && (f == 2 || f == 4);
          }
      return {{{"present", true}, {"involutions_fix_2_or_4", true}},
              {{"present", !groups.empty()}, {"involutions_fix_2_or_4", ok}}};
    };
    t["p103-f20-fixed-free"] = [](Context& ctx) -> Outcome {
      std::size_t bad = 0;
      for (const auto& h : subgroups_labelled(ctx.lattice(10, 3), "Z_5 : Z_4"))
        for (const auto& p : h.elements()) {
          auto o = element_order(p);
          if ((o == 4 || o == 5) && !fixed_points(p).empty()) ++bad;
        }
      return {{{"order4_or_5_fixing_a_vertex", 0}}, {{"order4_or_5_fixing_a_vertex", bad}}};
    };
    auto property_class = [](Context& ctx, const Permutation& x, ObstructionKind kind) -> Outcome {
      const auto& g = ctx.graph(10, 3);
      const auto& a = ctx.aut(10, 3);
      std::set<Permutation> with;
      for (const auto& p : a.elements())
        if (has_element_property(g, p, kind)) with.insert(p);
      return {{{"has_property", true}, {"all_conjugate", true}},
              {{"has_property", has_element_property(g, x, kind)}, {"all_conjugate", with == conjugacy_class(x, a)}}};
    };
    t["p103-lemma-order2-conjugate"] = [property_class](Context& ctx) {
      return property_class(ctx, ctx.perm(10, 3, "beta@Lemma"), ObstructionKind::Order2SixTwoCycles);
    };
    t["p103-lemma-order6-conjugate"] = [property_class](Context& ctx) {
      return property_class(ctx, ctx.perm(10, 3, "rho@Lemma"), ObstructionKind::Order6WithThreeCycles);
    };
    t["p103-lemma-beta-edges"] = [](Context& ctx) -> Outcome {
      const auto& g = ctx.graph(10, 3);
      std::set<std::string> expected;
      for (auto [a, b] : std::initializer_list<std::pair<const char*, const char*>>{
               {"v3", "u3"}, {"v3", "v10"}, {"v3", "v6"}, {"v8", "u8"}, {"v8", "v5"}, {"v8", "v1"}})
        expected.insert(edge_name(g, point(g, a), point(g, b)));
      PermGroup h = closure(std::vector<Permutation>{ctx.perm(10, 3, "beta@Lemma")}, 20);
      return {json(expected), pointwise_fixed_edges(g, h)};
    };
    t["p103-lemma-rho-cubed"] = [](Context& ctx) -> Outcome {
      auto cube = power(ctx.perm(10, 3, "rho@Lemma"), 3);
      return {{{"order", 2}, {"only_six_two_cycles", true}},
              {{"order", element_order(cube)},
               {"only_six_two_cycles",
                has_element_property(ctx.graph(10, 3), cube, ObstructionKind::Order2SixTwoCycles)}}};
    };
    t["p103-s4-classes"] = [](Context& ctx) -> Outcome {
      const auto& g = ctx.graph(10, 3);
      auto reps = class_representatives(ctx.lattice(10, 3), "S_4");
      bool matched = false;
      if (reps.size() == 2) {
        auto a2 = [&](int i) { return contains_kind(g, reps[i], ObstructionKind::Order2SixTwoCycles); };
        auto a4 = [&](int i) { return contains_kind(g, reps[i], ObstructionKind::Order4AdjacentTwoCycle); };
        matched = (a2(0) && a4(1)) || (a2(1) && a4(0));
      }
      return {{{"classes", 2}, {"one_order2_six_two_cycles_other_order4_adjacent", true}},
              {{"classes", reps.size()}, {"one_order2_six_two_cycles_other_order4_adjacent", matched}}};
    };
    auto single_class = [](Context& ctx, std::string_view name, ObstructionKind kind) -> Outcome {
      auto reps = class_representatives(ctx.lattice(10, 3), name);
      bool has = reps.size() == 1 && contains_kind(ctx.graph(10, 3), reps[0], kind);
      return {{{"classes", 1}, {"contains", true}}, {{"classes", reps.size()}, {"contains", has}}};
    };
    t["p103-z6z2-class"] = [single_class](Context& ctx) {
      return single_class(ctx, "Z_6 x Z_2", ObstructionKind::Order6WithThreeCycles);
    };
    t["p103-z4z2-class"] = [single_class](Context& ctx) {
      return single_class(ctx, "Z_4 x Z_2", ObstructionKind::Order4AdjacentTwoCycle);
    };
    t["p103-nu-d4"] = [](Context& ctx) -> Outcome {
      return {{{"label", canon("D_4")}}, {{"label", label(ctx.group(10, 3, {"nu1", "nu2"}))}}};
    };
    t["p103-d4-overgroups"] = [](Context& ctx) -> Outcome {
      const auto& lattice = ctx.lattice(10, 3);
      const auto& subs = lattice.subgroups();
      auto minimal_overgroups = [&](const ElementSet& h) {
        std::vector<std::size_t> above;
        for (std::size_t i = 0; i < subs.size(); ++i)
          if (subs[i].count() > h.count() && h.is_subset_of(subs[i])) above.push_back(i);
        std::set<std::string> labels;
        for (auto i : above) {
          bool minimal = std::none_of(above.begin(), above.end(), [&](std::size_t j) {
            return j != i && subs[j].count() < subs[i].count() && subs[j].is_subset_of(subs[i]);
          });
          if (minimal) labels.insert(lattice.class_label(lattice.class_of()[i]).str());
        }
        return labels;
      };
      std::set<std::string> any;
      for (std::size_t c = 0; c < lattice.class_count(); ++c) {
        if (lattice.class_label(c).str() != canon("D_4")) continue;
        auto labels = minimal_overgroups(subs[lattice.class_members(c)[0]]);
        any.insert(labels.begin(), labels.end());
      }
      auto expected = canon_sorted({"D_4 x Z_2", "S_4"});
      auto nu = minimal_overgroups(lattice.table().set_of(ctx.group(10, 3, {"nu1", "nu2"})));
      bool nu_within = std::all_of(nu.begin(), nu.end(), [&](const std::string& l) {
        return std::find(expected.begin(), expected.end(), l) != expected.end();
      });
      return {{{"any_D_4", expected}, {"nu_D_4_within", true}}, {{"any_D_4", json(any)}, {"nu_D_4_within", nu_within}}};
    };
    t["p103-h-central"] = [](Context& ctx) -> Outcome {
      auto h = ctx.perm(10, 3, "h@A5xZ2");
      const auto& a = ctx.aut(10, 3);
      bool central = std::all_of(a.elements().begin(), a.elements().end(),
                                 [&](const Permutation& p) { return commute(p, h); });
      auto a5 = class_representatives(ctx.lattice(10, 3), "A_5");
      std::string joined;
      if (a5.size() == 1) {
        auto gens = a5[0].generators();
        gens.push_back(h);
        joined = label(closure(gens, 20));
      }
      return {{{"central", true}, {"with_A_5", canon("A_5 x Z_2")}}, {{"central", central}, {"with_A_5", joined}}};
    };
    t["p103-a5z2-maximal"] = [](Context& ctx) -> Outcome {
      auto reps = class_representatives(ctx.lattice(10, 3), "A_5 x Z_2");
      json maximal = json::array();
      for (const auto& r : reps) maximal.push_back(is_maximal_subgroup(r, ctx.aut(10, 3)));
      return {json::array({true}), maximal};
    };
    t["p103-d6"] = [](Context& ctx) -> Outcome {
      return {{{"label", canon("D_6")}}, {{"label", label(ctx.group(10, 3, {"theta1", "theta2"}))}}};
    };
    t["p103-d6-free-edge"] = [](Context& ctx) -> Outcome {
      return {{{"v2v5_free", true}},
              {{"v2v5_free", edge_free(ctx.graph(10, 3), ctx.group(10, 3, {"theta1", "theta2"}), "v2", "v5")}}};
    };
    t["p103-d6-overgroups"] = [](Context& ctx) -> Outcome {
      const auto& lattice = ctx.lattice(10, 3);
      const auto& cls = ctx.classifier(10, 3);
      auto d6 = lattice.table().set_of(ctx.group(10, 3, {"theta1", "theta2"}));
      const auto& subs = lattice.subgroups();
      std::set<std::string> labels;
      for (std::size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].count() <= d6.count() || !d6.is_subset_of(subs[i])) continue;
        PermGroup h = lattice.table().to_group(subs[i]);
        if (cls.classify(h).positively_realizable == Decision::Yes)
          labels.insert(lattice.class_label(lattice.class_of()[i]).str());
      }
      return {canon_sorted({"A_5 x Z_2"}), json(labels)};
    };
    t["p103-theta3"] = [](Context& ctx) -> Outcome {
      auto t1 = ctx.perm(10, 3, "theta1");
      auto t2 = ctx.perm(10, 3, "theta2");
      auto t3 = ctx.perm(10, 3, "theta3");
      return {{{"commutes_theta1", true}, {"commutes_theta2", true}, {"label", canon("D_6 x Z_2")}},
              {{"commutes_theta1", commute(t1, t3)},
               {"commutes_theta2", commute(t2, t3)},
               {"label", label(ctx.group(10, 3, {"theta1", "theta2", "theta3"}))}}};
    };
    t["p103-d6z2-maximal"] = [](Context& ctx) {
      return label_maximal(ctx.group(10, 3, {"theta1", "theta2", "theta3"}), ctx.aut(10, 3), "D_6 x Z_2");
    };
    t["p103-z6z2-maximal"] = [](Context& ctx) {
      return label_maximal(ctx.group(10, 3, {"theta1", "theta3"}), ctx.group(10, 3, {"theta1", "theta2", "theta3"}),
                           "Z_6 x Z_2");
    };
    t["p103-s4z2-maximal"] = [](Context& ctx) -> Outcome {
      auto reps = class_representatives(ctx.lattice(10, 3), "S_4 x Z_2");
      json maximal = json::array();
      for (const auto& r : reps) maximal.push_back(is_maximal_subgroup(r, ctx.aut(10, 3)));
      return {json::array({true}), maximal};
    };
    t["p103-gamma-d4"] = [](Context& ctx) -> Outcome {
      return {{{"label", canon("D_4")}}, {{"label", label(ctx.group(10, 3, {"gamma1", "gamma2"}))}}};
    };
    t["p103-gamma3"] = [](Context& ctx) -> Outcome {
      auto g1 = ctx.perm(10, 3, "gamma1");
      auto g2 = ctx.perm(10, 3, "gamma2");
      auto g3 = ctx.perm(10, 3, "gamma3");
      return {{{"commutes_gamma1", true}, {"commutes_gamma2", true}, {"label", canon("D_4 x Z_2")}},
              {{"commutes_gamma1", commute(g1, g3)},
               {"commutes_gamma2", commute(g2, g3)},
               {"label", label(ctx.group(10, 3, {"gamma1", "gamma2", "gamma3"}))}}};
    };
    t["p103-d4z2-maximal"] = [](Context& ctx) -> Outcome {
      PermGroup d4z2 = ctx.group(10, 3, {"gamma1", "gamma2", "gamma3"});
      bool found = false;
      for (const auto& s : subgroups_labelled(ctx.lattice(10, 3), "S_4 x Z_2"))
        if (d4z2.is_subgroup_of(s) && is_maximal_subgroup(d4z2, s)) found = true;
      return {{{"maximal_in_an_S_4_x_Z_2", true}}, {{"maximal_in_an_S_4_x_Z_2", found}}};
    };
    t["p103-z4z2-maximal"] = [](Context& ctx) {
      return label_maximal(ctx.group(10, 3, {"gamma1", "gamma3"}), ctx.group(10, 3, {"gamma1", "gamma2", "gamma3"}),
                           "Z_4 x Z_2");
    };

    t["table-dihedral"] = [](Context& ctx) {
      return uniform_table(ctx, nonexceptional_pairs(30, Trichotomy::Dihedral), Decision::Yes, Decision::Yes);
    };
    t["table-plus-one"] = [](Context& ctx) {
      return uniform_table(ctx, nonexceptional_pairs(30, Trichotomy::PlusOne), Decision::Yes, Decision::Yes);
    };
    t["table-minus-one"] = [](Context& ctx) -> Outcome {
      json failures = json::array();
      for (auto [n, k] : nonexceptional_pairs(30, Trichotomy::MinusOne)) {
        const auto& rows = ctx.table(n, k);
        bool realizable = std::all_of(rows.begin(), rows.end(),
                                      [](const auto& r) { return r.verdict.realizable == Decision::Yes; });
        bool incomplete = std::any_of(rows.begin(), rows.end(), [](const auto& r) {
          return r.verdict.positively_realizable == Decision::No;
        });
        if (!realizable || !incomplete) failures.push_back(pair_name(n, k));
      }
      return {json::array(), failures};
    };
    t["table-p41"] = [](Context& ctx) { return uniform_table(ctx, {{4, 1}}, Decision::Yes, Decision::Yes); };
    t["table-p83"] = [](Context& ctx) { return uniform_table(ctx, {{8, 3}}, Decision::Yes, Decision::Yes); };
    t["table-p102"] = [](Context& ctx) { return uniform_table(ctx, {{10, 2}}, Decision::Yes, Decision::Yes); };
    t["table-p103"] = [](Context& ctx) -> Outcome {
      std::map<std::string, std::pair<int, int>> tally;
      bool realizable = true;
      for (const auto& row : ctx.table(10, 3)) {
        realizable = realizable && row.verdict.realizable == Decision::Yes;
        if (row.subgroup_class.representative.order() == 1) continue;
        auto& [yes, no] = tally[row.subgroup_class.iso_label.str()];
        (row.verdict.positively_realizable == Decision::Yes ? yes : no) += 1;
      }
      std::set<std::string> all_no, some_yes;
      for (const auto& [name, counts] : tally) (counts.first > 0 ? some_yes : all_no).insert(name);
      return {{{"realizable_complete", true},
               {"not_positive", canon_sorted({"Z_5 : Z_4", "Z_10 : Z_4", "S_5 x Z_2", "Z_6 x Z_2", "D_6 x Z_2", "S_4",
                                              "S_5", "S_4 x Z_2", "Z_4 x Z_2", "D_4 x Z_2"})},
               {"positive", canon_sorted({"D_10", "Z_10", "D_5", "Z_5", "D_2", "Z_2", "A_5 x Z_2", "A_5",
                                          "A_4 x Z_2", "A_4", "Z_3", "Z_2 x Z_2 x Z_2", "D_4", "Z_4", "D_6", "Z_6",
                                          "D_3"})}},
              {{"realizable_complete", realizable}, {"not_positive", all_no}, {"positive", some_yes}}};
    };
    t["table-p52"] = [](Context& ctx) {
      return uniform_table(ctx, {{5, 2}}, Decision::ExternalReference, Decision::ExternalReference);
    };
    t["table-deferred"] = [](Context& ctx) {
      return uniform_table(ctx, {{12, 5}, {24, 5}}, Decision::Unknown, Decision::Unknown);
    };
    return t;
  }();
  return table;
}

bool in_scope(const ClaimCitation& c, const std::string& filter) {
  if (filter == c.scope || filter == c.location) return true;
  std::string digits = filter;
  if (digits.rfind("§", 0) == 0) digits = digits.substr(std::string("§").size());
  if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    return c.location == "Section " + digits;
  return false;
}

}  // namespace

std::vector<ClaimResult> verify_paper(const PaperRegistry& registry, const VerifyOptions& options) {
  Context ctx(registry, options.search);
  const auto& table = claim_table();
  std::vector<ClaimResult> out;
  for (const auto& c : registry.claims()) {
    if (options.scope && !in_scope(c, *options.scope)) continue;
    ClaimResult r{c.id, c.scope, c.location, c.quote, "", "", ClaimStatus::Skipped};
    auto it = table.find(c.id);
    if (it == table.end()) {
      r.computed = json("no computation for this claim").dump();
      out.push_back(std::move(r));
      continue;
    }
    try {
      Outcome o = it->second(ctx);
      r.expected = o.expected.dump();
      r.computed = o.computed.dump();
      r.status = r.expected == r.computed ? ClaimStatus::Pass : ClaimStatus::Fail;
    } catch (const std::exception& e) {
      r.computed = json(std::string("error: ") + e.what()).dump();
      r.status = ClaimStatus::Fail;
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tsg::cli
