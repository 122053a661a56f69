#pragma once

#include <vector>

#include "fgraph/group_table.hpp"
#include "fgraph/subgroup.hpp"

namespace fgraph {

// Z/n with element i = a^i.
GroupTable cyclic_group(std::size_t n, const Limits& limits = {});

// Element (a, b) has index a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          const Limits& limits = {});

// action[h] is the image of n-elements under the automorphism attached to h;
// multiplication is (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1 h2), element
// (n, h) has index n * |H| + h. Throws Error(kValidation) with
// "action-not-automorphism" / "action-not-homomorphism".
GroupTable semidirect_product(const GroupTable& normal, const GroupTable& acting,
                              const std::vector<std::vector<Elem>>& action,
                              const Limits& limits = {});

// Extends automorphisms given on the generators of `acting` to the whole
// group along its Cayley graph. Inconsistent input surfaces later as a
// semidirect_product validation failure.
std::vector<std::vector<Elem>> extend_action(
    const GroupTable& acting, const std::vector<Elem>& acting_generators,
    const std::vector<std::vector<Elem>>& generator_images);

struct QuotientGroup {
  GroupTable table;
  std::vector<Elem> projection;  // element of G -> coset index
};

// Cosets are numbered by their smallest member. Throws Error(kNotNormal).
QuotientGroup quotient_group(const GroupTable& group, const Subgroup& normal,
                             const Limits& limits = {});

}  // namespace fgraph
