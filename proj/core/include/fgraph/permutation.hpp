#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fgraph/group_table.hpp"

namespace fgraph {

// 0-based image array: point i maps to perm[i].
using Permutation = std::vector<std::uint32_t>;

struct PermutationGenerators {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
};

// Builds a permutation of {1..degree} from 1-based cycles. Throws
// Error(kMalformedInput) on repeated or out-of-range points.
Permutation permutation_from_cycles(
    const std::vector<std::vector<int>>& cycles, std::size_t degree);

// Parses "(1,2,3)(4,5)" or "(1 2 3)(4 5)"; "()" is the identity.
std::vector<std::vector<int>> parse_cycles(std::string_view text);

// Cycle form with 1-based points, e.g. "(1,2)(3,4)"; identity is "()".
std::string cycle_string(const Permutation& perm);

// Product applying `a` first, then `b`.
Permutation compose(const Permutation& a, const Permutation& b);

bool is_bijection(const Permutation& perm);

// Table of the group generated by `gens`. Elements appear in breadth-first
// discovery order from the identity, applying generators in input order on
// the right.
GroupTable group_from_permutations(const PermutationGenerators& gens,
                                   const Limits& limits = {});

}  // namespace fgraph
