#pragma once

#include <string>
#include <vector>

#include "fgraph/catalog.hpp"
#include "fgraph/error.hpp"
#include "fgraph/group_table.hpp"
#include "fgraph/permutation.hpp"

namespace fixtures {

using fgraph::Elem;
using fgraph::GroupTable;

inline GroupTable perms(std::size_t degree, const std::vector<std::string>& gens) {
  fgraph::PermutationGenerators pg;
  pg.degree = degree;
  for (const std::string& g : gens) {
    pg.generators.push_back(fgraph::permutation_from_cycles(fgraph::parse_cycles(g), degree));
  }
  return fgraph::group_from_permutations(pg);
}

// Q8 as a regular permutation group on 8 points. The pair was found by the
// search in QuaternionFixture.SearchFindsTheFrozenPair.
inline constexpr const char* kQ8A = "(1,2,4,7)(3,6,8,5)";
inline constexpr const char* kQ8B = "(1,3,4,8)(2,5,7,6)";

inline GroupTable q8_permutations() { return perms(8, {kQ8A, kQ8B}); }
inline GroupTable s4() { return perms(4, {"(1,2)", "(1,2,3,4)"}); }

inline GroupTable cat(fgraph::Family f, std::vector<long long> params = {}) {
  return fgraph::catalog_group({f, std::move(params)});
}

inline Elem element(const GroupTable& g, const std::string& label) {
  for (Elem x = 0; x < g.order(); ++x) {
    if (g.label(x) == label) return x;
  }
  throw fgraph::Error(fgraph::ErrorKind::kPrecondition, "no element labelled " + label);
}

}  // namespace fixtures
