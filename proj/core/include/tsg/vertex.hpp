#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "tsg/permutation.hpp"

namespace tsg {

enum class Ring : std::uint8_t { Outer, Inner };

/// A vertex u_i (Outer) or v_i (Inner) of P(n,k). `index` is the residue
/// mod n, so the label u_n is stored as index 0.
struct Vertex {
  Ring ring = Ring::Outer;
  int index = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Canonical enumeration: all Outer by index, then all Inner by index.
Point to_point(Vertex v, int n);
Vertex to_vertex(Point p, int n);

/// Wraps an arbitrary integer index into [0, n).
inline int mod(long long i, int n) {
  long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

inline Vertex outer(long long i, int n) { return {Ring::Outer, mod(i, n)}; }
inline Vertex inner(long long i, int n) { return {Ring::Inner, mod(i, n)}; }

/// "u1".."un", "v1".."vn" (residue 0 prints as n).
std::string display(Vertex v, int n);

/// Accepts "u3", "u_3", "u_{10}", "v10"; the displayed index must lie in 1..n.
Vertex parse_vertex(std::string_view text, int n);

}  // namespace tsg
