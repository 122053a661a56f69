#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fgraph/group_table.hpp"
#include "fgraph/subgroup.hpp"

namespace fgraph {

using SubgroupId = std::size_t;

struct LatticeLimits {
  std::size_t order_cap = 200;
  std::size_t two_power_order_cap = 64;  // groups whose order is a power of 2
  std::size_t subgroup_cap = 20000;
};

// Every subgroup of a group, sorted by order and then by member list.
// Id 0 is the trivial subgroup and the last id is the whole group.
class SubgroupLattice {
 public:
  const GroupTable& group() const { return group_; }
  std::size_t size() const { return subgroups_.size(); }
  const Subgroup& operator[](SubgroupId id) const { return subgroups_[id]; }
  const std::vector<Subgroup>& all() const { return subgroups_; }

  SubgroupId trivial_id() const { return 0; }
  SubgroupId whole_id() const { return subgroups_.size() - 1; }
  bool is_proper(SubgroupId id) const { return id != whole_id(); }

  // Generators recorded during enumeration.
  const std::vector<Elem>& generators_of(SubgroupId id) const { return generators_[id]; }

  const std::vector<SubgroupId>& maximal_ids() const { return maximal_ids_; }
  bool is_maximal(SubgroupId id) const { return maximal_[id] != 0; }
  SubgroupId frattini_id() const { return frattini_id_; }
  bool is_normal(SubgroupId id) const { return normal_[id] != 0; }
  // Smallest id in the conjugacy class.
  SubgroupId conjugacy_class(SubgroupId id) const { return class_[id]; }

  std::optional<SubgroupId> find(const Bitset& members) const;
  // Throws Error(kPrecondition) when the set is not in the lattice.
  SubgroupId id_of(const Bitset& members) const;
  SubgroupId intersection(SubgroupId a, SubgroupId b) const;
  SubgroupId join(SubgroupId a, SubgroupId b) const;
  SubgroupId generated_by(std::span<const Elem> elements) const;
  // Conjugate g^-1 H g.
  SubgroupId conjugate(SubgroupId id, Elem g) const;

  // Display form: "<gen, gen>" using element labels, "1" for the trivial group.
  std::string label(SubgroupId id) const;

 private:
  friend SubgroupLattice enumerate_subgroups(const GroupTable&, const LatticeLimits&);

  GroupTable group_;
  std::vector<Subgroup> subgroups_;
  std::vector<std::vector<Elem>> generators_;
  std::vector<SubgroupId> maximal_ids_;
  std::vector<char> maximal_;
  std::vector<char> normal_;
  std::vector<SubgroupId> class_;
  SubgroupId frattini_id_ = 0;
  std::unordered_map<Bitset, SubgroupId, BitsetHash> index_;
};

// Bottom-up closure from the cyclic subgroups. Throws Error(kCapExceeded)
// when the order cap or the subgroup-count cap is exceeded.
SubgroupLattice enumerate_subgroups(const GroupTable& group,
                                    const LatticeLimits& limits = {});

// Intersection of all maximal subgroups (the whole group when there are none).
Subgroup frattini_subgroup(const SubgroupLattice& lattice);

struct ProductProfile {
  std::size_t intersection_order = 0;
  std::size_t product_size = 0;  // |H||K| / |H n K|
  bool permutes = false;         // HK = KH as sets
  bool covers = false;           // |HK| = |G|
};

// The set {hk}.
Bitset product_set(const Subgroup& h, const Subgroup& k);

// Throws Error(kPrecondition) when the parents differ.
ProductProfile product_profile(const Subgroup& h, const Subgroup& k);

// |H||K|/|H n K| == |G| without forming the product set.
inline bool covers_group(const Subgroup& h, const Subgroup& k) {
  std::size_t inter = h.members().intersection_count(k.members());
  return h.order() * k.order() == inter * h.parent().order();
}

struct NormalStructure {
  bool is_normal = false;
  Subgroup normalizer;
  Subgroup core;
  std::vector<Subgroup> conjugates;
};

NormalStructure normal_structure(const Subgroup& h, const SubgroupLattice& lattice);

struct FactorizationWitness {
  bool factorizable = false;
  std::optional<std::pair<SubgroupId, SubgroupId>> pair;
};

// First covering pair of proper subgroups in id order.
FactorizationWitness is_factorizable(const SubgroupLattice& lattice);

}  // namespace fgraph
