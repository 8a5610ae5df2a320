#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tsg/permutation.hpp"

namespace tsg {

struct ClosureOptions {
  std::size_t cap = 1000;
};

/// A finite permutation group stored with its full element set, sorted
/// lexicographically by image sequence. The identity is always element 0.
class PermGroup {
 public:
  /// The trivial group on `degree` points.
  explicit PermGroup(std::size_t degree = 0);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }

  bool contains(const Permutation& p) const;
  std::optional<std::size_t> index_of(const Permutation& p) const;
  /// Element-set containment.
  bool is_subgroup_of(const PermGroup& other) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  friend PermGroup closure(std::span<const Permutation>, std::size_t, ClosureOptions);
  friend PermGroup make_group_from_sorted(std::vector<Permutation>, std::vector<Permutation>);

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Smallest group containing `generators`, by breadth-first products.
/// Throws SizeLimitError once more than `options.cap` elements appear and
/// DomainMismatchError when a generator is not of the given degree.
PermGroup closure(std::span<const Permutation> generators, std::size_t degree,
                  ClosureOptions options = {});

inline PermGroup closure(const std::vector<Permutation>& generators, std::size_t degree,
                         ClosureOptions options = {}) {
  return closure(std::span<const Permutation>(generators), degree, options);
}

/// Wraps an element set already known to be a group (sorted, identity first).
/// Only used by code that has just computed the set itself.
PermGroup make_group_from_sorted(std::vector<Permutation> sorted_elements,
                                 std::vector<Permutation> generators);

/// Greedy generating set: walk `elements` in order and keep each element not
/// already generated by the ones kept so far.
std::vector<Permutation> greedy_generators(std::span<const Permutation> elements,
                                           std::size_t degree);

}  // namespace tsg
