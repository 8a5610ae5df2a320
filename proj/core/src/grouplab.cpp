#include "tsg/grouplab.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "tsg/errors.hpp"

namespace tsg {

namespace {

bool is_prime_power(std::uint32_t n) {
  if (n < 2) return false;
  std::uint32_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

void check_order(const PermGroup& g, const GroupLabOptions& options) {
  if (g.order() > options.max_order) {
    throw SizeLimitError("group of order " + std::to_string(g.order()) +
                             " exceeds the subgroup-lattice cap",
                         options.max_order);
  }
}

}  // namespace

SubgroupLattice::SubgroupLattice(const PermGroup& g, GroupLabOptions options)
    : table_((check_order(g, options), g), options.max_order) {
  const std::size_t n = table_.order();

  // Every subgroup is generated by its elements of prime-power order, so
  // joining with those cyclic subgroups alone reaches all of them.
  std::vector<ElementIndex> extenders;
  {
    std::vector<ElementSet> seen_cyclic;
    for (std::size_t a = 1; a < n; ++a) {
      auto e = static_cast<ElementIndex>(a);
      if (!is_prime_power(table_.element_order(e))) continue;
      ElementSet c = table_.cyclic(e);
      if (std::find(seen_cyclic.begin(), seen_cyclic.end(), c) != seen_cyclic.end()) continue;
      seen_cyclic.push_back(c);
      extenders.push_back(e);
    }
  }

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;
  std::vector<ElementSet> found;
  std::vector<std::vector<ElementIndex>> gens;
  ElementSet trivial = table_.empty_set();
  trivial.set(0);
  index.emplace(trivial, 0);
  found.push_back(trivial);
  gens.emplace_back();
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (ElementIndex e : extenders) {
      if (found[head].test(e)) continue;
      const ElementIndex extra[] = {e};
      ElementSet next = table_.join(found[head], gens[head], extra);
      if (index.contains(next)) continue;
      index.emplace(next, found.size());
      auto next_gens = gens[head];
      next_gens.push_back(e);
      found.push_back(std::move(next));
      gens.push_back(std::move(next_gens));
    }
  }

  std::vector<std::size_t> counts(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) counts[i] = found[i].count();
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (counts[a] != counts[b]) return counts[a] < counts[b];
    return found[a] < found[b];
  });
  subgroups_.reserve(found.size());
  for (std::size_t i : order) subgroups_.push_back(std::move(found[i]));

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> position;
  for (std::size_t i = 0; i < subgroups_.size(); ++i) position.emplace(subgroups_[i], i);

  const auto g_gens = table_.generators_of(table_.whole());
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  class_of_.assign(subgroups_.size(), kNone);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (class_of_[i] != kNone) continue;
    const std::size_t c = class_members_.size();
    std::vector<std::size_t> members{i};
    class_of_[i] = c;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (ElementIndex x : g_gens) {
        std::size_t j = position.at(table_.conjugate_set(subgroups_[members[head]], x));
        if (class_of_[j] == kNone) {
          class_of_[j] = c;
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    class_members_.push_back(std::move(members));
  }
  labels_.resize(class_members_.size());
}

const GroupLabel& SubgroupLattice::class_label(std::size_t c) const {
  if (!labels_[c]) {
    labels_[c] = identify_group(table_.to_group(subgroups_[class_members_[c].front()]));
  }
  return *labels_[c];
}

SubgroupClass SubgroupLattice::describe_class(std::size_t c) const {
  SubgroupClass out;
  const ElementSet& rep = subgroups_[class_members_[c].front()];
  out.representative = table_.to_group(rep);
  out.class_size = class_members_[c].size();
  out.iso_label = class_label(c);
  for (ElementIndex e : rep.indices()) ++out.element_order_histogram[table_.element_order(e)];
  return out;
}

std::vector<SubgroupClass> SubgroupLattice::classes(const std::optional<GroupLabel>& filter) const {
  std::optional<std::size_t> wanted_order;
  if (filter && filter->recognized()) wanted_order = label_model(filter->str()).order();
  std::vector<SubgroupClass> out;
  for (std::size_t c = 0; c < class_members_.size(); ++c) {
    if (filter) {
      const ElementSet& rep = subgroups_[class_members_[c].front()];
      if (wanted_order && rep.count() != *wanted_order) continue;
      if (class_label(c) != *filter) continue;
    }
    out.push_back(describe_class(c));
  }
  return out;
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& h) const {
  auto it = std::lower_bound(subgroups_.begin(), subgroups_.end(), h,
                             [](const ElementSet& a, const ElementSet& b) {
                               auto ca = a.count(), cb = b.count();
                               if (ca != cb) return ca < cb;
                               return a < b;
                             });
  if (it == subgroups_.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - subgroups_.begin());
}

std::vector<PermGroup> all_subgroups(const PermGroup& g, GroupLabOptions options) {
  SubgroupLattice lattice(g, options);
  std::vector<PermGroup> out;
  out.reserve(lattice.subgroups().size());
  for (const auto& s : lattice.subgroups()) out.push_back(lattice.table().to_group(s));
  return out;
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const PermGroup& g,
                                                          const std::optional<GroupLabel>& filter,
                                                          GroupLabOptions options) {
  return SubgroupLattice(g, options).classes(filter);
}

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const PermGroup& g,
                                                          std::string_view filter,
                                                          GroupLabOptions options) {
  GroupLabel label = parse_label(filter);
  return SubgroupLattice(g, options).classes(label);
}

bool is_maximal_subgroup(const PermGroup& h, const PermGroup& g, GroupLabOptions options) {
  check_order(g, options);
  if (!h.is_subgroup_of(g)) throw NotASubgroupError("H is not contained in G");
  if (h.order() == g.order()) return false;
  GroupTable table(g, options.max_order);
  ElementSet hs = table.set_of(h);
  auto h_gens = table.generators_of(hs);
  ElementSet whole = table.whole();
  for (std::size_t x = 0; x < table.order(); ++x) {
    auto e = static_cast<ElementIndex>(x);
    if (hs.test(e)) continue;
    const ElementIndex extra[] = {e};
    if (table.join(hs, h_gens, extra) != whole) return false;
  }
  return true;
}

std::vector<std::pair<GroupLabel, std::size_t>> isomorphism_classes(const PermGroup& g,
                                                                    GroupLabOptions options) {
  SubgroupLattice lattice(g, options);
  std::vector<std::pair<GroupLabel, std::size_t>> out;
  for (std::size_t c = 0; c < lattice.class_count(); ++c) {
    const GroupLabel& label = lattice.class_label(c);
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == label; });
    if (it == out.end()) {
      out.emplace_back(label, 1);
    } else {
      ++it->second;
    }
  }
  return out;
}

PermGroup normalizer(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) throw NotASubgroupError("H is not contained in G");
  std::vector<Permutation> members;
  for (const auto& x : g.elements()) {
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](const Permutation& y) { return h.contains(conjugate(y, x)); });
    if (normalizes) members.push_back(x);
  }
  auto gens = greedy_generators(members, g.degree());
  return make_group_from_sorted(std::move(members), std::move(gens));
}

std::vector<ElementClass> conjugacy_classes_of_elements(const PermGroup& g,
                                                        GroupLabOptions options) {
  check_order(g, options);
  GroupTable table(g, options.max_order);
  const std::size_t n = table.order();
  std::vector<bool> done(n, false);
  std::vector<ElementClass> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (done[a]) continue;
    std::size_t size = 0;
    for (std::size_t x = 0; x < n; ++x) {
      ElementIndex c = table.conj(static_cast<ElementIndex>(x), static_cast<ElementIndex>(a));
      if (!done[c]) {
        done[c] = true;
        ++size;
      }
    }
    out.push_back({table.element(static_cast<ElementIndex>(a)), size,
                   table.element_order(static_cast<ElementIndex>(a))});
  }
  return out;
}

std::map<std::uint32_t, std::size_t> element_order_histogram(const PermGroup& g) {
  std::map<std::uint32_t, std::size_t> out;
  for (const auto& x : g.elements()) ++out[element_order(x)];
  return out;
}

}  // namespace tsg
