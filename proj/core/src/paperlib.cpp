#include "tsg/paperlib.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include <json.hpp>

#include "tsg/autsearch.hpp"
#include "tsg/cycle_notation.hpp"
#include "tsg/errors.hpp"
#include "tsg/petersen.hpp"

namespace tsg {

namespace detail {
std::string_view registry_json();
}

namespace {

using nlohmann::json;

const std::vector<std::pair<int, int>> kExceptional = {{4, 1},  {5, 2},  {8, 3}, {10, 2},
                                                       {10, 3}, {12, 5}, {24, 5}};

Citation citation_of(const json& j) {
  return {j.at("id").get<std::string>(), j.at("quote").get<std::string>()};
}

ExceptionalStatus status_of(const std::string& s) {
  if (s == "FullyClassified") return ExceptionalStatus::FullyClassified;
  if (s == "ExternalReference") return ExceptionalStatus::ExternalReference;
  if (s == "Deferred") return ExceptionalStatus::Deferred;
  throw ParseError("unknown exceptional status '" + s + "'");
}

std::string unknown_pair(int n, int k) {
  return "no registry data for P(" + std::to_string(n) + "," + std::to_string(k) + ")";
}

}  // namespace

std::string to_string(ExceptionalStatus s) {
  switch (s) {
    case ExceptionalStatus::FullyClassified:
      return "FullyClassified";
    case ExceptionalStatus::ExternalReference:
      return "ExternalReference";
    case ExceptionalStatus::Deferred:
      return "Deferred";
  }
  return "?";
}

Trichotomy trichotomy(int n, int k) {
  long long sq = static_cast<long long>(k) * k % n;
  if (sq == 1 % n) return Trichotomy::PlusOne;
  if (sq == n - 1) return Trichotomy::MinusOne;
  return Trichotomy::Dihedral;
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Dihedral:
      return "k^2 != +-1";
    case Trichotomy::PlusOne:
      return "k^2 = 1";
    case Trichotomy::MinusOne:
      return "k^2 = -1";
  }
  return "?";
}

bool is_exceptional(int n, int k) {
  return std::find(kExceptional.begin(), kExceptional.end(), std::pair{n, k}) != kExceptional.end();
}

std::string_view PaperRegistry::embedded_json() { return detail::registry_json(); }

PaperRegistry PaperRegistry::load(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("registry is not valid JSON: ") + e.what());
  }
  PaperRegistry r;
  try {
    r.version_ = doc.at("version").get<int>();
    for (const auto& e : doc.at("automorphisms")) {
      NamedAutomorphism a;
      a.name = e.at("name").get<std::string>();
      a.n = e.at("graph").at(0).get<int>();
      a.k = e.at("graph").at(1).get<int>();
      a.cycles = e.at("cycles").get<std::string>();
      a.citation = citation_of(e.at("citation"));
      if (e.contains("flags")) a.flags = e.at("flags").get<std::vector<std::string>>();
      CycleParseOptions opts;
      opts.drop_repeated_cycles = e.value("parse", std::string()) == "drop_repeated_cycles";
      auto graph = PetersenGraph::build(a.n, a.k);
      a.perm = parse_cycles(a.cycles, a.n, opts);
      if (!is_automorphism(graph, a.perm)) {
        throw NotAutomorphismError(a.name + " is not an automorphism of P(" + std::to_string(a.n) +
                                   "," + std::to_string(a.k) + ") [" + a.citation.id +
                                   ": " + a.citation.quote + "]");
      }
      r.automorphisms_.push_back(std::move(a));
    }
    for (const auto& e : doc.at("vertex_sets")) {
      NamedVertexSet s;
      s.name = e.at("name").get<std::string>();
      s.n = e.at("graph").at(0).get<int>();
      s.k = e.at("graph").at(1).get<int>();
      for (const auto& v : e.at("vertices")) s.vertices.insert(parse_vertex(v.get<std::string>(), s.n));
      s.citation = citation_of(e.at("citation"));
      r.vertex_sets_.push_back(std::move(s));
    }
    for (const auto& e : doc.at("exceptional")) {
      ExceptionalEntry x{e.at("graph").at(0).get<int>(), e.at("graph").at(1).get<int>(),
                         e.at("aut_label").is_null() ? std::string()
                                                     : e.at("aut_label").get<std::string>(),
                         status_of(e.at("status").get<std::string>()), citation_of(e.at("citation"))};
      r.exceptional_.push_back(std::move(x));
    }
    for (const auto& e : doc.at("theorems")) r.theorems_.push_back(citation_of(e));
    const auto& list = doc.at("subgroup_list_p103");
    r.p103_citation_ = citation_of(list.at("citation"));
    r.p103_printed_ = list.at("printed").get<std::vector<std::string>>();
    r.p103_corrected_ = list.at("corrected").get<std::vector<std::string>>();
    const auto& lists = doc.at("p103_positive_lists");
    r.p103_not_positive_ = lists.at("not_positive").get<std::vector<std::string>>();
    r.p103_positive_ = lists.at("positive").get<std::vector<std::string>>();
    for (const auto& e : doc.at("claims")) {
      r.claims_.push_back({e.at("id").get<std::string>(), e.at("scope").get<std::string>(),
                           e.at("location").get<std::string>(), e.at("quote").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed registry: ") + e.what());
  }
  return r;
}

const PaperRegistry& PaperRegistry::instance() {
  static const PaperRegistry registry = load(embedded_json());
  return registry;
}

const NamedAutomorphism& PaperRegistry::get(int n, int k, std::string_view name) const {
  for (const auto& a : automorphisms_) {
    if (a.n == n && a.k == k && a.name == name) return a;
  }
  throw UnknownPairError(unknown_pair(n, k) + " named '" + std::string(name) + "'");
}

const Citation& PaperRegistry::theorem(std::string_view id) const {
  for (const auto& c : theorems_) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no theorem citation '" + std::string(id) + "'");
}

const ClaimCitation& PaperRegistry::claim(std::string_view id) const {
  for (const auto& c : claims_) {
    if (c.id == id) return c;
  }
  throw std::out_of_range("no claim '" + std::string(id) + "'");
}

std::vector<NamedAutomorphism> bnk_generators(int n, int k) {
  auto graph = PetersenGraph::build(n, k);
  const auto size = graph.vertex_count();
  auto make = [&](auto map) {
    std::vector<Point> images(size);
    for (int i = 0; i < n; ++i) {
      images[to_point(outer(i, n), n)] = to_point(map(outer(i, n)), n);
      images[to_point(inner(i, n), n)] = to_point(map(inner(i, n)), n);
    }
    return Permutation(std::move(images));
  };
  const auto& reg = PaperRegistry::instance();
  auto t = trichotomy(n, k);
  Citation cite = t == Trichotomy::MinusOne ? reg.theorem("no-order4")
                  : t == Trichotomy::PlusOne ? reg.theorem("k2-plus-one")
                                             : reg.theorem("dn-corollary");
  std::vector<NamedAutomorphism> out;
  out.push_back({"rho", n, k, "", make([n](Vertex v) { return Vertex{v.ring, mod(v.index + 1, n)}; }),
                 cite, {}});
  out.push_back({"sigma", n, k, "", make([n](Vertex v) { return Vertex{v.ring, mod(-v.index, n)}; }),
                 cite, {}});
  if (t != Trichotomy::Dihedral) {
    out.push_back({"alpha", n, k, "", make([n, k](Vertex v) {
                     Ring other = v.ring == Ring::Outer ? Ring::Inner : Ring::Outer;
                     return Vertex{other, mod(static_cast<long long>(k) * v.index, n)};
                   }),
                   cite, {}});
  }
  return out;
}

std::vector<NamedAutomorphism> named_automorphisms(int n, int k) {
  std::vector<NamedAutomorphism> out;
  for (const auto& a : PaperRegistry::instance().automorphisms()) {
    if (a.n == n && a.k == k) out.push_back(a);
  }
  if (out.empty()) throw UnknownPairError(unknown_pair(n, k));
  return out;
}

const NamedAutomorphism& named_automorphism(int n, int k, std::string_view name) {
  return PaperRegistry::instance().get(n, k, name);
}

std::map<std::string, std::set<Vertex>> special_vertex_sets(int n, int k) {
  std::map<std::string, std::set<Vertex>> out;
  for (const auto& s : PaperRegistry::instance().vertex_sets()) {
    if (s.n == n && s.k == k) out.emplace(s.name, s.vertices);
  }
  if (out.empty()) throw UnknownPairError(unknown_pair(n, k));
  return out;
}

const std::vector<ExceptionalRecord>& exceptional_catalog() {
  static std::once_flag once;
  static std::vector<ExceptionalRecord> records;
  std::call_once(once, [] {
    for (const auto& e : PaperRegistry::instance().exceptional_entries()) {
      ExceptionalRecord r;
      r.n = e.n;
      r.k = e.k;
      r.status = e.status;
      r.citation = e.citation;
      if (e.aut_label.empty()) {
        auto aut = automorphism_group(PetersenGraph::build(e.n, e.k));
        r.aut_label = identify_group(aut);
        r.aut_order = aut.order();
      } else {
        r.aut_label = parse_label(e.aut_label);
        r.aut_order = label_model(e.aut_label).order();
      }
      records.push_back(std::move(r));
    }
  });
  return records;
}

}  // namespace tsg
