#include "tsg/group_table.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "tsg/errors.hpp"

namespace tsg {

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<ElementIndex> ElementSet::indices() const {
  std::vector<ElementIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == b.words_[i]) continue;
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    std::uint64_t low = diff & (~diff + 1);
    return (a.words_[i] & low) != 0;
  }
  return false;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

GroupTable::GroupTable(PermGroup group, std::size_t max_order)
    : group_(std::move(group)), n_(group_.order()) {
  if (n_ > max_order || n_ > 0xFFFF) {
    throw SizeLimitError("group of order " + std::to_string(n_) + " is too large for a table",
                         std::min<std::size_t>(max_order, 0xFFFF));
  }
  const auto& els = group_.elements();
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
  index.reserve(n_ * 2);
  for (std::size_t i = 0; i < n_; ++i) index.emplace(els[i], static_cast<ElementIndex>(i));

  table_.resize(n_ * n_);
  inverse_.resize(n_);
  orders_.resize(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      auto it = index.find(compose(els[a], els[b]));
      if (it == index.end()) throw Error("element set is not closed under composition");
      table_[a * n_ + b] = it->second;
      if (it->second == 0) inverse_[a] = static_cast<ElementIndex>(b);
    }
  }
  for (std::size_t a = 0; a < n_; ++a) {
    std::uint32_t order = 1;
    for (ElementIndex x = static_cast<ElementIndex>(a); x != 0; x = mul(static_cast<ElementIndex>(a), x)) ++order;
    orders_[a] = order;
  }
}

std::optional<ElementIndex> GroupTable::index_of(const Permutation& p) const {
  auto i = group_.index_of(p);
  if (!i) return std::nullopt;
  return static_cast<ElementIndex>(*i);
}

ElementSet GroupTable::whole() const {
  ElementSet s(n_);
  for (std::size_t i = 0; i < n_; ++i) s.set(i);
  return s;
}

ElementSet GroupTable::closure(std::span<const ElementIndex> gens) const {
  ElementSet trivial(n_);
  trivial.set(0);
  return join(trivial, {}, gens);
}

ElementSet GroupTable::join(const ElementSet& base, std::span<const ElementIndex> base_gens,
                            std::span<const ElementIndex> extra) const {
  ElementSet result = base;
  std::vector<ElementIndex> gens(base_gens.begin(), base_gens.end());
  bool grows = false;
  for (ElementIndex e : extra) {
    if (!base.test(e)) {
      gens.push_back(e);
      grows = true;
    }
  }
  if (!grows) return result;
  std::vector<ElementIndex> queue = base.indices();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementIndex x = queue[head];
    for (ElementIndex g : gens) {
      ElementIndex y = mul(g, x);
      if (!result.test(y)) {
        result.set(y);
        queue.push_back(y);
      }
    }
  }
  return result;
}

ElementSet GroupTable::cyclic(ElementIndex a) const {
  ElementSet s(n_);
  s.set(0);
  for (ElementIndex x = a; x != 0; x = mul(a, x)) s.set(x);
  return s;
}

ElementSet GroupTable::conjugate_set(const ElementSet& s, ElementIndex g) const {
  ElementSet out(n_);
  const ElementIndex gi = inv(g);
  for (ElementIndex h : s.indices()) out.set(mul(mul(g, h), gi));
  return out;
}

std::vector<ElementIndex> GroupTable::generators_of(const ElementSet& subgroup) const {
  auto members = subgroup.indices();
  std::stable_sort(members.begin(), members.end(), [&](ElementIndex a, ElementIndex b) {
    return orders_[a] > orders_[b];
  });
  std::vector<ElementIndex> gens;
  ElementSet current(n_);
  current.set(0);
  const std::size_t target = members.size();
  for (ElementIndex m : members) {
    if (current.count() == target) break;
    if (current.test(m)) continue;
    gens.push_back(m);
    // Extend current by m with a plain closure over the chosen generators.
    std::vector<ElementIndex> queue = current.indices();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      ElementIndex x = queue[head];
      for (ElementIndex g : gens) {
        ElementIndex y = mul(g, x);
        if (!current.test(y)) {
          current.set(y);
          queue.push_back(y);
        }
      }
    }
  }
  return gens;
}

PermGroup GroupTable::to_group(const ElementSet& subgroup) const {
  std::vector<Permutation> els;
  for (ElementIndex i : subgroup.indices()) els.push_back(element(i));
  std::vector<Permutation> gens;
  for (ElementIndex i : generators_of(subgroup)) gens.push_back(element(i));
  return make_group_from_sorted(std::move(els), std::move(gens));
}

ElementSet GroupTable::set_of(const PermGroup& h) const {
  ElementSet s(n_);
  for (const auto& p : h.elements()) {
    auto i = index_of(p);
    if (!i) throw NotASubgroupError("group is not contained in the ambient group");
    s.set(*i);
  }
  return s;
}

}  // namespace tsg
