#pragma once

#include <optional>
#include <vector>

#include "fgraph/group_table.hpp"

namespace fgraph {

// Cheap isomorphism invariants.
struct GroupInvariants {
  std::size_t order = 0;
  bool is_abelian = false;
  std::vector<std::size_t> order_histogram;  // index k: elements of order k
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::vector<std::size_t> class_sizes;      // sorted conjugacy class sizes

  bool operator==(const GroupInvariants&) const = default;
};

GroupInvariants group_invariants(const GroupTable& group);

// Element map a -> b that is an isomorphism, or nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a,
                                                  const GroupTable& b);

// Same as above but with precomputed invariants, for repeated comparisons.
std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a,
                                                  const GroupInvariants& ia,
                                                  const GroupTable& b,
                                                  const GroupInvariants& ib);

inline bool are_isomorphic(const GroupTable& a, const GroupTable& b) {
  return find_isomorphism(a, b).has_value();
}

// True when `map` is a bijective homomorphism a -> b.
bool is_isomorphism(const GroupTable& a, const GroupTable& b,
                    const std::vector<Elem>& map);

}  // namespace fgraph
