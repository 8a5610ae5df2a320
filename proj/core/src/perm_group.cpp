#include "tsg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "tsg/errors.hpp"

namespace tsg {

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {
  elements_.push_back(Permutation::identity(degree));
}

std::optional<std::size_t> PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

bool PermGroup::contains(const Permutation& p) const { return index_of(p).has_value(); }

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_ || order() > other.order()) return false;
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

PermGroup closure(std::span<const Permutation> generators, std::size_t degree,
                  ClosureOptions options) {
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DomainMismatchError("generator of degree " + std::to_string(g.degree()) +
                                " in a group on " + std::to_string(degree) + " points");
    }
  }
  PermGroup group(degree);
  for (const auto& g : generators) {
    if (!g.is_identity()) group.generators_.push_back(g);
  }

  std::unordered_set<Permutation, PermutationHash> seen;
  std::deque<Permutation> queue;
  auto id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators_) {
      Permutation y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > options.cap) {
          throw SizeLimitError("group closure exceeded the element cap", options.cap);
        }
        queue.push_back(std::move(y));
      }
    }
  }
  group.elements_.assign(seen.begin(), seen.end());
  std::sort(group.elements_.begin(), group.elements_.end());
  return group;
}

PermGroup make_group_from_sorted(std::vector<Permutation> sorted_elements,
                                 std::vector<Permutation> generators) {
  PermGroup group(sorted_elements.empty() ? 0 : sorted_elements.front().degree());
  group.elements_ = std::move(sorted_elements);
  group.generators_ = std::move(generators);
  return group;
}

std::vector<Permutation> greedy_generators(std::span<const Permutation> elements,
                                           std::size_t degree) {
  std::vector<Permutation> gens;
  PermGroup current(degree);
  for (const auto& e : elements) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = closure(gens, degree, {.cap = std::max<std::size_t>(elements.size(), 1)});
  }
  return gens;
}

}  // namespace tsg
