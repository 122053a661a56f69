#pragma once

#include <vector>

#include "fgraph/group_table.hpp"
#include "fgraph/subgroup.hpp"

namespace fgraph {

struct StructureSummary {
  std::vector<std::size_t> order_factorization;  // primes with multiplicity, ascending
  bool is_abelian = true;
  bool is_nilpotent = true;
  bool is_solvable = true;
  bool is_perfect = true;
  Subgroup center;
  Subgroup derived;
  std::size_t exponent = 1;
  std::size_t min_generators = 0;           // d(G)
  std::vector<Elem> minimal_generating_set;  // a witness of size d(G)
};

std::vector<std::size_t> prime_factors(std::size_t n);
std::vector<std::size_t> distinct_primes(std::size_t n);
bool is_prime(std::size_t n);
// For n = p^k returns p, otherwise 0 (and 0 for n = 1).
std::size_t prime_power_base(std::size_t n);

Subgroup center(const GroupTable& group);
// Subgroup generated by all [a, b] with a in `a_side`, b in `b_side`.
Subgroup commutator_subgroup(const Subgroup& a_side, const Subgroup& b_side);
Subgroup derived_subgroup(const GroupTable& group);
std::vector<Subgroup> derived_series(const GroupTable& group);
std::vector<Subgroup> lower_central_series(const GroupTable& group);
std::size_t exponent(const GroupTable& group);

// Smallest generating tuple. Subgroups reachable with k generators are
// expanded level by level, deduplicated by member set.
std::vector<Elem> minimal_generating_set(const GroupTable& group);

StructureSummary structure_probe(const GroupTable& group);

}  // namespace fgraph
