#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tsg/group_label.hpp"
#include "tsg/group_table.hpp"

namespace tsg {

struct GroupLabOptions {
  std::size_t max_order = 480;
};

struct SubgroupClass {
  PermGroup representative;
  std::size_t class_size = 0;
  GroupLabel iso_label = GroupLabel::named("trivial");
  std::map<std::uint32_t, std::size_t> element_order_histogram;
};

struct ElementClass {
  Permutation representative;
  std::size_t size = 0;
  std::uint32_t order = 1;
};

/// Every subgroup of one group, with its conjugacy classes. Subgroups are
/// ordered by order, then by element set (see ElementSet::operator<).
class SubgroupLattice {
 public:
  /// Throws SizeLimitError when |G| exceeds options.max_order.
  explicit SubgroupLattice(const PermGroup& g, GroupLabOptions options = {});

  const GroupTable& table() const noexcept { return table_; }
  const std::vector<ElementSet>& subgroups() const noexcept { return subgroups_; }
  /// Index of each subgroup's conjugacy class; classes are numbered in order
  /// of their first member.
  const std::vector<std::size_t>& class_of() const noexcept { return class_of_; }
  std::size_t class_count() const noexcept { return class_members_.size(); }
  const std::vector<std::size_t>& class_members(std::size_t c) const { return class_members_[c]; }

  /// Label of class c, identified on first use.
  const GroupLabel& class_label(std::size_t c) const;
  SubgroupClass describe_class(std::size_t c) const;

  std::vector<SubgroupClass> classes(const std::optional<GroupLabel>& filter = std::nullopt) const;
  std::optional<std::size_t> find(const ElementSet& h) const;

 private:
  GroupTable table_;
  std::vector<ElementSet> subgroups_;
  std::vector<std::size_t> class_of_;
  std::vector<std::vector<std::size_t>> class_members_;
  mutable std::vector<std::optional<GroupLabel>> labels_;
};

std::vector<PermGroup> all_subgroups(const PermGroup& g, GroupLabOptions options = {});

std::vector<SubgroupClass> conjugacy_classes_of_subgroups(
    const PermGroup& g, const std::optional<GroupLabel>& filter = std::nullopt,
    GroupLabOptions options = {});
/// As above with the filter given as a label expression; throws UnknownLabelError.
std::vector<SubgroupClass> conjugacy_classes_of_subgroups(const PermGroup& g,
                                                          std::string_view filter,
                                                          GroupLabOptions options = {});

/// True iff H is a proper subgroup of G with nothing strictly between.
/// Throws NotASubgroupError unless H <= G.
bool is_maximal_subgroup(const PermGroup& h, const PermGroup& g, GroupLabOptions options = {});

/// (label, number of conjugacy classes of subgroups with that label), in
/// order of first appearance in the canonical subgroup order.
std::vector<std::pair<GroupLabel, std::size_t>> isomorphism_classes(const PermGroup& g,
                                                                    GroupLabOptions options = {});

/// { g in G : g H g^-1 = H }. Throws NotASubgroupError unless H <= G.
PermGroup normalizer(const PermGroup& h, const PermGroup& g);

std::vector<ElementClass> conjugacy_classes_of_elements(const PermGroup& g,
                                                        GroupLabOptions options = {});

std::map<std::uint32_t, std::size_t> element_order_histogram(const PermGroup& g);

}  // namespace tsg
