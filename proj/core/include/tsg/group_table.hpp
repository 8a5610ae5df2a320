#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsg/perm_group.hpp"

namespace tsg {

using ElementIndex = std::uint16_t;

/// Fixed-size bit set over the elements of one GroupTable.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return size_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;
  bool is_subset_of(const ElementSet& other) const;
  std::vector<ElementIndex> indices() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  /// Total order: the set holding the least element of the symmetric
  /// difference sorts first.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

  std::size_t hash() const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// Multiplication table of a PermGroup. Element i is group.elements()[i];
/// index 0 is the identity.
class GroupTable {
 public:
  /// Throws SizeLimitError when the group has more than `max_order` elements.
  explicit GroupTable(PermGroup group, std::size_t max_order = 4096);

  std::size_t order() const noexcept { return n_; }
  const PermGroup& group() const noexcept { return group_; }
  const Permutation& element(ElementIndex i) const { return group_.elements()[i]; }

  /// Index of element(a) composed with element(b) (b applied first).
  ElementIndex mul(ElementIndex a, ElementIndex b) const { return table_[std::size_t{a} * n_ + b]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conj(ElementIndex g, ElementIndex h) const { return mul(mul(g, h), inv(g)); }
  std::uint32_t element_order(ElementIndex a) const { return orders_[a]; }
  std::optional<ElementIndex> index_of(const Permutation& p) const;

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet whole() const;
  /// Subgroup generated by `gens`.
  ElementSet closure(std::span<const ElementIndex> gens) const;
  /// Subgroup generated by `base` (a subgroup generated by `base_gens`) and `extra`.
  ElementSet join(const ElementSet& base, std::span<const ElementIndex> base_gens,
                  std::span<const ElementIndex> extra) const;
  ElementSet cyclic(ElementIndex a) const;
  /// { g h g^-1 : h in s }
  ElementSet conjugate_set(const ElementSet& s, ElementIndex g) const;

  /// Small generating set for a subgroup: higher element orders first.
  std::vector<ElementIndex> generators_of(const ElementSet& subgroup) const;
  /// Converts a subgroup to a PermGroup with the generators above.
  PermGroup to_group(const ElementSet& subgroup) const;
  /// The subgroup given by `h`; throws NotASubgroupError if h is not inside.
  ElementSet set_of(const PermGroup& h) const;

 private:
  PermGroup group_;
  std::size_t n_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  std::vector<std::uint32_t> orders_;
};

}  // namespace tsg
