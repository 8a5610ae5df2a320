#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tsg/perm_group.hpp"

namespace tsg::catalog {

/// One catalog model: a name and a constructor for a concrete permutation
/// group. Some names have several non-isomorphic variants (Z_m : Z_4 with
/// different multiplier subgroups); `variant` tells them apart.
struct Candidate {
  std::string name;
  std::string variant;
  std::function<PermGroup()> build;
};

/// Catalog models of the given order, in priority order: the first model
/// isomorphic to a group names it.
std::vector<Candidate> candidates(std::size_t order);

PermGroup cyclic(std::size_t m);
PermGroup abelian(const std::vector<std::size_t>& invariant_factors);
PermGroup dihedral(std::size_t m);
PermGroup symmetric(std::size_t d);
PermGroup alternating(std::size_t d);
PermGroup quaternion();
PermGroup special_linear_2_3();
PermGroup general_linear_2_3();
/// { x -> u x + b on Z_m : u in the multiplicative group generated by `multipliers` }.
PermGroup affine(std::size_t m, const std::vector<std::size_t>& multipliers);
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
PermGroup special_linear_2_3_ext();
PermGroup general_linear_2_3_ext();

/// Multiplier subgroups {1, a, a^2, a^3} of units mod m with a of order 4,
/// each as its sorted element list, deduplicated.
std::vector<std::vector<std::size_t>> order_four_multipliers(std::size_t m);
/// Multiplier subgroups {1, -1, k, -k} with k^2 = 1 and k != +-1 mod m.
std::vector<std::vector<std::size_t>> klein_multipliers(std::size_t m);

/// Group denoted by a label expression (see tsg::label_model).
PermGroup parse_expression(std::string_view text);

}  // namespace tsg::catalog
