#pragma once

#include <string>
#include <string_view>

#include "tsg/permutation.hpp"
#include "tsg/vertex.hpp"

namespace tsg {

struct CycleParseOptions {
  // A cycle that repeats an earlier cycle verbatim is dropped instead of
  // rejected. Any other overlap between cycles is always an error.
  bool drop_repeated_cycles = false;
};

/// Parses disjoint cycles over the vertices of P(n,k), e.g.
/// "(u1 u7)(u2 u6)(v1 v7)". Whitespace and commas separate labels; vertices
/// that are not listed are fixed. "()" and the empty string are the identity.
Permutation parse_cycles(std::string_view text, int n, CycleParseOptions options = {});

/// Inverse of parse_cycles. Each cycle starts at its least displayed label
/// (u1 < ... < un < v1 < ... < vn) and cycles are ordered by that label.
/// Identity prints "()".
std::string format_cycles(const Permutation& p, int n);

}  // namespace tsg
