#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fgraph/catalog.hpp"
#include "fgraph/group_table.hpp"
#include "fgraph/permutation.hpp"
#include "fgraph/presentation.hpp"

namespace fgraph::cli {

// A parsed group description. Products hold two or more factors; the other
// kinds are leaves.
struct GroupSpec {
  enum class Kind { kCatalog, kPermutations, kPresentation, kProduct };

  Kind kind = Kind::kCatalog;
  CatalogSpec catalog{Family::kCyclic, {1}};
  PermutationGenerators permutations;
  Presentation presentation;
  std::vector<GroupSpec> factors;
};

// Grammar (whitespace is ignored between tokens):
//   spec    := factor ('x' factor)*
//   factor  := C<n> | D<n> | Q<n> | SD<n> | M<n> | S<n> | A<n> | G1..G4
//            | E(p,k) | Meta(p,m,q,n,lam) | K14(n) | Frob(p,q[,k])
//            | Perm[cycles (';' cycles)*] | Pres[...]
// Throws Error(kMalformedInput) with the failing character position, or
// Error(kInvalidParameter) from family validation.
GroupSpec parse_group_spec(std::string_view text);

// Canonical text; parse_group_spec(format_group_spec(s)) formats identically.
std::string format_group_spec(const GroupSpec& spec);

// A product whose factors are all cyclic is built as the abelian group of
// that type, so "C4xC2" yields the same table as the catalog entry.
GroupTable build_group(const GroupSpec& spec, const Limits& limits = {});

}  // namespace fgraph::cli
