#include "tsg/permutation.hpp"

#include <numeric>
#include <sstream>

#include "tsg/errors.hpp"

namespace tsg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || seen[y]) {
      throw InvalidPermutationError("image sequence is not a bijection on " +
                                    std::to_string(images_.size()) + " points");
    }
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image sequence.
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

std::size_t CycleType::count(std::size_t length) const {
  auto it = counts_.find(length);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t CycleType::total() const {
  std::size_t sum = 0;
  for (auto [len, cnt] : counts_) sum += len * cnt;
  return sum;
}

std::string CycleType::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto [len, cnt] : counts_) {
    if (!first) out << ", ";
    first = false;
    out << len << ':' << cnt;
  }
  out << '}';
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainMismatchError("cannot compose permutations of degree " +
                              std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
  }
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.images_[q.images_[i]];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> out(p.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation power(const Permutation& p, long long exponent) {
  Permutation base = exponent < 0 ? inverse(p) : p;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = Permutation::identity(p.degree());
  while (e != 0) {
    if (e & 1ull) result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  return compose(q, compose(p, inverse(q)));
}

std::vector<std::vector<Point>> cycles(const Permutation& p, bool include_fixed) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cyc;
    for (Point x = static_cast<Point>(start); !seen[x]; x = p(x)) {
      seen[x] = true;
      cyc.push_back(x);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

CycleType cycle_type(const Permutation& p) {
  std::map<std::size_t, std::size_t, std::greater<>> counts;
  for (const auto& c : cycles(p, true)) ++counts[c.size()];
  return CycleType(std::move(counts));
}

std::uint64_t element_order(const Permutation& p) {
  std::uint64_t order = 1;
  for (const auto& c : cycles(p)) order = std::lcm(order, static_cast<std::uint64_t>(c.size()));
  return order;
}

std::vector<Point> fixed_points(const Permutation& p) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (p(static_cast<Point>(i)) == i) out.push_back(static_cast<Point>(i));
  }
  return out;
}

}  // namespace tsg
