#pragma once

#include <optional>

#include "fgraph/lattice.hpp"

namespace fgraph {

struct FrobeniusStatus {
  bool is_frobenius = false;
  std::optional<SubgroupId> kernel;
  std::optional<SubgroupId> complement;
  bool is_minimal = false;  // Frobenius with no proper Frobenius subgroup
  // A proper Frobenius subgroup when the group is Frobenius but not minimal.
  std::optional<SubgroupId> proper_frobenius_subgroup;
};

// Decides whether the subgroup `id` of the lattice group is a Frobenius
// group: a proper nontrivial normal N and a complement H with N n H = 1,
// NH = K, and every nontrivial element of H moving every nontrivial element
// of N under conjugation. Returns the first (kernel, complement) pair found.
std::optional<std::pair<SubgroupId, SubgroupId>> frobenius_decomposition(
    const SubgroupLattice& lattice, SubgroupId id);

FrobeniusStatus frobenius_status(const SubgroupLattice& lattice);

}  // namespace fgraph
