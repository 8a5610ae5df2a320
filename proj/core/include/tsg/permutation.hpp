#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tsg {

using Point = std::uint16_t;

/// A bijection on {0, ..., degree-1}. Values are immutable once built.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws InvalidPermutationError.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image sequence; this is the canonical element order.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Multiset of cycle lengths; fixed points are recorded as 1-cycles.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::map<std::size_t, std::size_t, std::greater<>> counts)
      : counts_(std::move(counts)) {}

  /// Number of cycles of the given length (0 when absent).
  std::size_t count(std::size_t length) const;
  /// Sum of length x count, i.e. the degree.
  std::size_t total() const;
  const auto& counts() const noexcept { return counts_; }

  /// "{2:6, 1:8}" with longest cycles first.
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::map<std::size_t, std::size_t, std::greater<>> counts_;
};

/// result(x) = p(q(x)); q is applied first. Throws DomainMismatchError.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long long exponent);
/// q p q^-1
Permutation conjugate(const Permutation& p, const Permutation& q);

std::uint64_t element_order(const Permutation& p);
CycleType cycle_type(const Permutation& p);

/// Disjoint cycles, each starting at its least point, ordered by that point.
std::vector<std::vector<Point>> cycles(const Permutation& p, bool include_fixed = false);

/// Points x with p(x) == x.
std::vector<Point> fixed_points(const Permutation& p);

}  // namespace tsg
