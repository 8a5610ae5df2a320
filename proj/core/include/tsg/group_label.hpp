#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/group_table.hpp"

namespace tsg {

/// Isomorphism invariants used to pre-filter catalog candidates.
struct Fingerprint {
  std::size_t order = 0;
  bool abelian = false;
  std::uint64_t exponent = 1;
  std::size_t center_order = 0;
  std::vector<std::size_t> derived_series;  // |G|, |G'|, |G''|, ... until stable
  std::map<std::uint32_t, std::size_t> order_histogram;
  std::size_t class_count = 0;

  std::string to_string() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const GroupTable& g);

/// Name of a group from the catalog ("D_6 x Z_2", "Z_10 : Z_4", ...), or an
/// unrecognized group carrying its fingerprint. Names are stable strings.
class GroupLabel {
 public:
  static GroupLabel named(std::string name) { return GroupLabel(std::move(name), true); }
  static GroupLabel unrecognized(const Fingerprint& fp) {
    return GroupLabel("Unrecognized(" + fp.to_string() + ")", false);
  }

  bool recognized() const noexcept { return recognized_; }
  const std::string& str() const noexcept { return name_; }

  friend bool operator==(const GroupLabel& a, const GroupLabel& b) { return a.name_ == b.name_; }
  friend auto operator<=>(const GroupLabel& a, const GroupLabel& b) { return a.name_ <=> b.name_; }

 private:
  GroupLabel(std::string name, bool recognized) : name_(std::move(name)), recognized_(recognized) {}
  std::string name_;
  bool recognized_;
};

/// An isomorphism from `from` to `to` as an index map, if one exists. The
/// map is checked to be a bijective homomorphism before it is returned.
std::optional<std::vector<ElementIndex>> find_isomorphism(const GroupTable& from,
                                                          const GroupTable& to);

bool is_isomorphic(const PermGroup& a, const PermGroup& b);

/// Catalog label of `g`, proved by an explicit isomorphism to the label's
/// model; Unrecognized when no catalog model of the same order matches.
GroupLabel identify_group(const GroupTable& g);
GroupLabel identify_group(const PermGroup& g);

/// Concrete permutation group for a label expression. Understands catalog
/// names and the usual aliases: "S_3", "D_2", "Z_2 x Z_2", "S_3 x Z_2^2",
/// "(Z_5 : Z_4) x Z_2", "Z_10 ⋊ Z_4", "Z4". Throws UnknownLabelError.
PermGroup label_model(std::string_view expression);

/// Canonical catalog label of the group an expression denotes.
GroupLabel parse_label(std::string_view expression);

/// Every catalog name of the given order, highest priority first.
std::vector<std::string> catalog_names(std::size_t order);

}  // namespace tsg
