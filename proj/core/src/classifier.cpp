#include "tsg/classifier.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include <json.hpp>

#include "tsg/autsearch.hpp"
#include "tsg/cycle_notation.hpp"
#include "tsg/errors.hpp"

namespace tsg {

using json = nlohmann::json;

std::string to_string(Decision d) {
  switch (d) {
    case Decision::Yes: return "Yes";
    case Decision::No: return "No";
    case Decision::Unknown: return "Unknown";
    case Decision::ExternalReference: return "ExternalReference";
  }
  return "Unknown";
}

std::string to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::Order2SixTwoCycles: return "Order2SixTwoCycles";
    case ObstructionKind::Order4AdjacentTwoCycle: return "Order4AdjacentTwoCycle";
    case ObstructionKind::Order6WithThreeCycles: return "Order6WithThreeCycles";
    case ObstructionKind::Order4FormViolation: return "Order4FormViolation";
    case ObstructionKind::GroupFormZrZ4: return "GroupFormZrZ4";
  }
  return "";
}

namespace {

constexpr ObstructionKind kElementKinds[] = {ObstructionKind::Order2SixTwoCycles,
                                             ObstructionKind::Order4AdjacentTwoCycle,
                                             ObstructionKind::Order6WithThreeCycles};

std::string describe(ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::Order2SixTwoCycles:
      return "involution whose only nontrivial cycles are six 2-cycles";
    case ObstructionKind::Order4AdjacentTwoCycle:
      return "order-4 element with a 2-cycle on adjacent vertices";
    case ObstructionKind::Order6WithThreeCycles:
      return "order-6 element with a 3-cycle";
    case ObstructionKind::Order4FormViolation:
      return "order-4 element outside D_n";
    case ObstructionKind::GroupFormZrZ4:
      return "order-4 element acting on an order-5 element as a 4-cycle of powers";
  }
  return "";
}

void require_automorphisms(const PetersenGraph& g, const PermGroup& h) {
  if (h.degree() != g.vertex_count())
    throw NotASubgroupError("group degree " + std::to_string(h.degree()) + " does not match P(" +
                            std::to_string(g.n()) + "," + std::to_string(g.k()) + ")");
  for (const auto& p : h.elements())
    if (!is_automorphism(g, p))
      throw NotASubgroupError("element " + format_cycles(p, g.n()) + " is not an automorphism of P(" +
                              std::to_string(g.n()) + "," + std::to_string(g.k()) + ")");
}

std::optional<Permutation> zr_z4_witness(const PermGroup& h) {
  std::vector<Permutation> fives;
  for (const auto& p : h.elements())
    if (element_order(p) == 5) fives.push_back(p);
  for (const auto& g : h.elements()) {
    if (element_order(g) != 4) continue;
    for (const auto& x : fives) {
      Permutation y = conjugate(x, g);
      if (y != x && y != inverse(x)) return g;
    }
  }
  return std::nullopt;
}

Citation exceptional_citation(const PaperRegistry& reg, int n, int k) {
  for (const auto& e : reg.exceptional_entries())
    if (e.n == n && e.k == k) return e.citation;
  throw UnknownPairError("(" + std::to_string(n) + "," + std::to_string(k) + ") is not exceptional");
}

}  // namespace

bool has_element_property(const PetersenGraph& g, const Permutation& p, ObstructionKind kind) {
  switch (kind) {
    case ObstructionKind::Order2SixTwoCycles: {
      if (element_order(p) != 2) return false;
      const auto& c = cycle_type(p).counts();
      auto it = c.find(2);
      return it != c.end() && it->second == 6 && c.size() <= 2;
    }
    case ObstructionKind::Order4AdjacentTwoCycle: {
      if (element_order(p) != 4) return false;
      for (const auto& cyc : cycles(p))
        if (cyc.size() == 2 && g.adjacent(cyc[0], cyc[1])) return true;
      return false;
    }
    case ObstructionKind::Order6WithThreeCycles: {
      if (element_order(p) != 6) return false;
      return cycle_type(p).counts().contains(3);
    }
    default:
      return false;
  }
}

std::vector<Obstruction> obstruction_scan(const PetersenGraph& g, const PermGroup& h) {
  require_automorphisms(g, h);
  std::vector<Obstruction> out;
  for (auto kind : kElementKinds) {
    for (const auto& p : h.elements()) {
      if (has_element_property(g, p, kind)) {
        out.push_back({kind, p, describe(kind)});
        break;
      }
    }
  }
  return out;
}

Order4FormResult order4_form_check(int n, int k) {
  if (trichotomy(n, k) != Trichotomy::MinusOne)
    throw ConstructionError("order-4 form check needs k^2 = -1 mod n, got (" + std::to_string(n) +
                            "," + std::to_string(k) + ")");
  auto gens = bnk_generators(n, k);
  std::vector<Permutation> perms;
  for (const auto& a : gens) perms.push_back(a.perm);
  const auto& rho = gens.at(0).perm;
  const auto& alpha = gens.at(2).perm;
  PermGroup b = closure(perms, static_cast<std::size_t>(2 * n), {.cap = 100000});

  Order4FormResult r;
  for (const auto& p : b.elements())
    if (element_order(p) == 4) r.order4_elements.push_back(p);
  std::vector<Permutation> expected;
  Permutation alpha_inv = inverse(alpha);
  for (int m = 0; m < n; ++m) {
    Permutation rm = power(rho, m);
    expected.push_back(compose(rm, alpha));
    expected.push_back(compose(rm, alpha_inv));
  }
  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  r.all_of_form = expected == r.order4_elements;
  return r;
}

Classifier::Classifier(int n, int k, SearchOptions search, const PaperRegistry& registry)
    : registry_(&registry),
      graph_(PetersenGraph::build(n, k)),
      aut_(automorphism_group(graph_, search)) {
  auto gens = bnk_generators(n, k);
  std::vector<Permutation> dn{gens.at(0).perm, gens.at(1).perm};
  dihedral_ = closure(dn, graph_.vertex_count(), {.cap = 100000});
  if (n == 10 && k == 3)
    for (const auto& e : registry.p103_not_positive()) not_positive_.insert(parse_label(e));
}

std::size_t Classifier::class_size(const PermGroup& h) const {
  return aut_.order() / normalizer(h, aut_).order();
}

Verdict Classifier::classify(const PermGroup& h) const {
  require_automorphisms(graph_, h);
  return decide(h, identify_group(h));
}

std::vector<ClassifiedClass> Classifier::classify_all(GroupLabOptions options) const {
  SubgroupLattice lattice(aut_, options);
  std::vector<ClassifiedClass> out;
  out.reserve(lattice.class_count());
  for (std::size_t c = 0; c < lattice.class_count(); ++c) {
    SubgroupClass sc = lattice.describe_class(c);
    Verdict v = decide(sc.representative, sc.iso_label);
    out.push_back({std::move(sc), std::move(v)});
  }
  return out;
}

Verdict Classifier::decide(const PermGroup& h, const GroupLabel& label) const {
  const auto& reg = *registry_;
  const int n = graph_.n();
  const int k = graph_.k();
  Verdict v;

  if (is_exceptional(n, k)) {
    Citation cite = exceptional_citation(reg, n, k);
    if (n == 5 && k == 2) {
      v.realizable = v.positively_realizable = Decision::ExternalReference;
      v.citations = {cite};
      return v;
    }
    if ((n == 12 || n == 24) && k == 5) {
      v.realizable = v.positively_realizable = Decision::Unknown;
      v.citations = {cite};
      return v;
    }
    if (n == 10 && k == 3) {
      v.realizable = Decision::Yes;
      v.citations = {cite};
      auto obstructions = obstruction_scan(graph_, h);
      bool listed_no = not_positive_.contains(label);
      if (!obstructions.empty()) {
        v.positively_realizable = Decision::No;
        v.witness = obstructions.front();
        v.citations.push_back(reg.theorem("p103-lemma"));
        if (listed_no) v.citations.push_back(reg.theorem("p103-not-positive"));
      } else if (listed_no) {
        v.positively_realizable = Decision::No;
        v.witness = Obstruction{ObstructionKind::GroupFormZrZ4, zr_z4_witness(h),
                                describe(ObstructionKind::GroupFormZrZ4)};
        v.citations.push_back(reg.theorem("p103-f20"));
        v.citations.push_back(reg.theorem("p103-not-positive"));
      } else {
        v.positively_realizable = Decision::Yes;
        v.citations.push_back(reg.theorem("p103-positive"));
      }
      return v;
    }
    v.realizable = v.positively_realizable = Decision::Yes;
    v.citations = {cite};
    return v;
  }

  switch (trichotomy(n, k)) {
    case Trichotomy::Dihedral:
      v.realizable = v.positively_realizable = Decision::Yes;
      v.citations = {reg.theorem("dn-corollary")};
      return v;
    case Trichotomy::PlusOne:
      v.realizable = v.positively_realizable = Decision::Yes;
      v.citations = {reg.theorem("k2-plus-one")};
      return v;
    case Trichotomy::MinusOne:
      break;
  }

  v.realizable = Decision::Yes;
  v.citations = {reg.theorem("k2-minus-one-realizable"), reg.theorem("k2-minus-one-positive")};
  auto inside = [&](const Permutation& g) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](const Permutation& x) { return dihedral_.contains(conjugate(x, g)); });
  };
  bool in_conjugate = std::any_of(aut_.elements().begin(), aut_.elements().end(), inside);
  bool cyclic_four = n % 2 == 0 && h.order() == 4 &&
                     std::any_of(h.elements().begin(), h.elements().end(),
                                 [](const Permutation& p) { return element_order(p) == 4; });
  if (in_conjugate || cyclic_four) {
    v.positively_realizable = Decision::Yes;
    return v;
  }
  v.positively_realizable = Decision::No;
  v.citations.push_back(reg.theorem("no-order4"));
  std::optional<Permutation> w;
  for (const auto& p : h.elements()) {
    if (element_order(p) == 4 && !dihedral_.contains(p)) {
      w = p;
      break;
    }
  }
  v.witness = Obstruction{ObstructionKind::Order4FormViolation, w,
                          describe(ObstructionKind::Order4FormViolation)};
  return v;
}

Verdict classify(int n, int k, const PermGroup& h) { return Classifier(n, k).classify(h); }

std::vector<ClassifiedClass> classify_all(int n, int k) { return Classifier(n, k).classify_all(); }

std::string verdict_json(int n, int k, const std::string& subgroup_label, std::size_t class_size,
                         const Verdict& v) {
  json j;
  j["n"] = n;
  j["k"] = k;
  j["subgroup_label"] = subgroup_label;
  j["class_size"] = class_size;
  j["realizable"] = to_string(v.realizable);
  j["positively_realizable"] = to_string(v.positively_realizable);
  j["citations"] = json::array();
  for (const auto& c : v.citations) j["citations"].push_back({{"id", c.id}, {"quote", c.quote}});
  if (v.witness) {
    json w;
    w["kind"] = to_string(v.witness->kind);
    w["element"] = v.witness->witness_element ? json(format_cycles(*v.witness->witness_element, n))
                                              : json(nullptr);
    w["description"] = v.witness->description;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j.dump();
}

}  // namespace tsg
