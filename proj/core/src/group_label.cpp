#include "tsg/group_label.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "tsg/catalog.hpp"
#include "tsg/errors.hpp"

namespace tsg {

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "order=" << order << ",abelian=" << (abelian ? 1 : 0) << ",exponent=" << exponent
      << ",center=" << center_order << ",derived=";
  for (std::size_t i = 0; i < derived_series.size(); ++i) out << (i ? "/" : "") << derived_series[i];
  out << ",classes=" << class_count << ",orders=";
  bool first = true;
  for (auto [o, c] : order_histogram) {
    out << (first ? "" : "/") << o << ':' << c;
    first = false;
  }
  return out.str();
}

namespace {

ElementSet derived_subgroup(const GroupTable& g, const ElementSet& h) {
  auto members = h.indices();
  ElementSet comm = g.empty_set();
  for (ElementIndex a : members) {
    for (ElementIndex b : members) {
      comm.set(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    }
  }
  auto gens = comm.indices();
  return g.closure(gens);
}

std::vector<std::size_t> centralizer_sizes(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> out(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto x = static_cast<ElementIndex>(a), y = static_cast<ElementIndex>(b);
      if (g.mul(x, y) == g.mul(y, x)) ++out[a];
    }
  }
  return out;
}

}  // namespace

Fingerprint fingerprint(const GroupTable& g) {
  Fingerprint fp;
  const std::size_t n = g.order();
  fp.order = n;
  auto cent = centralizer_sizes(g);
  fp.abelian = std::all_of(cent.begin(), cent.end(), [n](std::size_t c) { return c == n; });
  fp.center_order = static_cast<std::size_t>(std::count(cent.begin(), cent.end(), n));
  for (std::size_t a = 0; a < n; ++a) {
    auto o = g.element_order(static_cast<ElementIndex>(a));
    fp.exponent = std::lcm(fp.exponent, std::uint64_t{o});
    ++fp.order_histogram[o];
  }
  // Class sizes are |G| / |C(x)|, so the class count is sum of |C(x)| / |G|.
  fp.class_count = std::accumulate(cent.begin(), cent.end(), std::size_t{0}) / n;

  ElementSet current = g.whole();
  fp.derived_series.push_back(current.count());
  while (true) {
    ElementSet next = derived_subgroup(g, current);
    if (next.count() == current.count()) break;
    fp.derived_series.push_back(next.count());
    current = std::move(next);
  }
  return fp;
}

std::optional<std::vector<ElementIndex>> find_isomorphism(const GroupTable& from,
                                                          const GroupTable& to) {
  const std::size_t n = from.order();
  if (n != to.order()) return std::nullopt;
  if (fingerprint(from) != fingerprint(to)) return std::nullopt;

  auto cent_from = centralizer_sizes(from);
  auto cent_to = centralizer_sizes(to);
  auto gens = from.generators_of(from.whole());

  std::vector<std::vector<ElementIndex>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      auto bi = static_cast<ElementIndex>(b);
      if (to.element_order(bi) == from.element_order(gens[i]) && cent_to[b] == cent_from[gens[i]]) {
        candidates[i].push_back(bi);
      }
    }
  }

  constexpr ElementIndex kUnset = 0xFFFF;
  std::vector<ElementIndex> images(gens.size());
  std::vector<ElementIndex> map(n);
  std::vector<bool> used(n);

  auto extend = [&]() -> bool {
    std::fill(map.begin(), map.end(), kUnset);
    std::fill(used.begin(), used.end(), false);
    map[0] = 0;
    used[0] = true;
    std::vector<ElementIndex> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElementIndex x = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        ElementIndex y = from.mul(gens[i], x);
        ElementIndex fy = to.mul(images[i], map[x]);
        if (map[y] == kUnset) {
          if (used[fy]) return false;
          map[y] = fy;
          used[fy] = true;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return queue.size() == n;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == gens.size()) return extend();
    for (ElementIndex c : candidates[i]) {
      bool consistent = true;
      for (std::size_t j = 0; j < i && consistent; ++j) {
        consistent = from.element_order(from.mul(gens[j], gens[i])) ==
                         to.element_order(to.mul(images[j], c)) &&
                     from.element_order(from.mul(gens[i], gens[j])) ==
                         to.element_order(to.mul(c, images[j]));
      }
      if (!consistent) continue;
      images[i] = c;
      if (assign(i + 1)) return true;
    }
    return false;
  };

  if (!assign(0)) return std::nullopt;
  return map;
}

bool is_isomorphic(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  return find_isomorphism(GroupTable(a), GroupTable(b)).has_value();
}

namespace {

struct Model {
  std::string name;
  std::shared_ptr<const GroupTable> table;
  Fingerprint fp;
};

// Models are built once per name and shared; building S_5 x Z_2 or the
// order-96 regular representations is the expensive part of identification.
const Model& model_for(const catalog::Candidate& c) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Model>> cache;
  std::lock_guard lock(mutex);
  auto key = c.name + "#" + c.variant;
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  auto table = std::make_shared<const GroupTable>(c.build());
  auto model = std::make_unique<Model>(Model{c.name, table, fingerprint(*table)});
  return *cache.emplace(key, std::move(model)).first->second;
}

}  // namespace

GroupLabel identify_group(const GroupTable& g) {
  Fingerprint fp = fingerprint(g);
  for (const auto& candidate : catalog::candidates(g.order())) {
    const Model& m = model_for(candidate);
    if (m.fp != fp) continue;
    if (find_isomorphism(g, *m.table)) return GroupLabel::named(m.name);
  }
  return GroupLabel::unrecognized(fp);
}

GroupLabel identify_group(const PermGroup& g) { return identify_group(GroupTable(g)); }

std::vector<std::string> catalog_names(std::size_t order) {
  std::vector<std::string> out;
  for (const auto& c : catalog::candidates(order)) {
    if (std::find(out.begin(), out.end(), c.name) == out.end()) out.push_back(c.name);
  }
  return out;
}

PermGroup label_model(std::string_view expression) { return catalog::parse_expression(expression); }

GroupLabel parse_label(std::string_view expression) {
  GroupLabel label = identify_group(label_model(expression));
  if (!label.recognized()) {
    throw UnknownLabelError("'" + std::string(expression) + "' is not a catalog group");
  }
  return label;
}

}  // namespace tsg
