#include "fgraph/frobenius.hpp"

namespace fgraph {

namespace {

bool normal_in(const SubgroupLattice& lattice, SubgroupId n, SubgroupId k) {
  const GroupTable& group = lattice.group();
  const Bitset& members = lattice[n].members();
  for (Elem g : lattice.generators_of(k)) {
    bool stable = true;
    members.for_each([&](std::size_t x) {
      if (stable && !members.test(group.conjugate(static_cast<Elem>(x), g))) stable = false;
    });
    if (!stable) return false;
  }
  return true;
}

bool acts_fixed_point_freely(const GroupTable& group, const Subgroup& complement,
                             const Subgroup& kernel) {
  std::vector<Elem> h_elems = complement.elements();
  std::vector<Elem> n_elems = kernel.elements();
  for (Elem h : h_elems) {
    if (h == GroupTable::kIdentity) continue;
    for (Elem x : n_elems) {
      if (x == GroupTable::kIdentity) continue;
      if (group.conjugate(x, h) == x) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::pair<SubgroupId, SubgroupId>> frobenius_decomposition(
    const SubgroupLattice& lattice, SubgroupId id) {
  const Subgroup& whole = lattice[id];
  const std::size_t order = whole.order();
  if (order < 6) return std::nullopt;
  const GroupTable& group = lattice.group();
  // Conjugation inside an abelian group fixes everything.
  bool abelian = true;
  const auto& gens = lattice.generators_of(id);
  for (std::size_t i = 0; i < gens.size() && abelian; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j) {
      abelian = group.mul(gens[i], gens[j]) == group.mul(gens[j], gens[i]);
    }
  }
  if (abelian) return std::nullopt;

  std::vector<SubgroupId> inside;
  for (SubgroupId s = 1; s < id; ++s) {
    if (order % lattice[s].order() == 0 && lattice[s].order() < order &&
        lattice[s].is_contained_in(whole)) {
      inside.push_back(s);
    }
  }
  for (SubgroupId n : inside) {
    if (!normal_in(lattice, n, id)) continue;
    std::size_t want = order / lattice[n].order();
    for (SubgroupId h : inside) {
      if (lattice[h].order() != want) continue;
      if (lattice[h].members().intersection_count(lattice[n].members()) != 1) continue;
      if (acts_fixed_point_freely(group, lattice[h], lattice[n])) {
        return std::make_pair(n, h);
      }
    }
  }
  return std::nullopt;
}

FrobeniusStatus frobenius_status(const SubgroupLattice& lattice) {
  FrobeniusStatus status;
  auto whole = frobenius_decomposition(lattice, lattice.whole_id());
  if (!whole) return status;
  status.is_frobenius = true;
  status.kernel = whole->first;
  status.complement = whole->second;
  for (SubgroupId s = 1; s < lattice.whole_id(); ++s) {
    if (frobenius_decomposition(lattice, s)) {
      status.proper_frobenius_subgroup = s;
      return status;
    }
  }
  status.is_minimal = true;
  return status;
}

}  // namespace fgraph
