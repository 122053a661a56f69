#include "fgraph/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "fgraph/error.hpp"
#include "fgraph/structure.hpp"

namespace fgraph {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Closure of `base` (already a subgroup) with one extra element.
Bitset extend_closure(const GroupTable& group, const Bitset& base,
                      const std::vector<Elem>& base_gens, Elem extra) {
  std::vector<Elem> gens = base_gens;
  gens.push_back(extra);
  Bitset members = base;
  std::vector<Elem> frontier;
  base.for_each([&](std::size_t x) { frontier.push_back(static_cast<Elem>(x)); });
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (Elem g : gens) {
        Elem y = group.mul(x, g);
        if (!members.test(y)) {
          members.set(y);
          next.push_back(y);
        }
      }
    }
    frontier.swap(next);
  }
  return members;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

Bitset conjugate_set(const GroupTable& group, const Bitset& members, Elem g) {
  Bitset out(group.order());
  members.for_each([&](std::size_t x) {
    out.set(group.conjugate(static_cast<Elem>(x), g));
  });
  return out;
}

}  // namespace

std::optional<SubgroupId> SubgroupLattice::find(const Bitset& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupId SubgroupLattice::id_of(const Bitset& members) const {
  auto id = find(members);
  if (!id) throw Error(ErrorKind::kPrecondition, "set is not a subgroup in the lattice");
  return *id;
}

SubgroupId SubgroupLattice::intersection(SubgroupId a, SubgroupId b) const {
  return id_of(subgroups_[a].members() & subgroups_[b].members());
}

SubgroupId SubgroupLattice::join(SubgroupId a, SubgroupId b) const {
  std::vector<Elem> gens = generators_[a];
  gens.insert(gens.end(), generators_[b].begin(), generators_[b].end());
  return generated_by(gens);
}

SubgroupId SubgroupLattice::generated_by(std::span<const Elem> elements) const {
  return id_of(generated_set(group_, elements));
}

SubgroupId SubgroupLattice::conjugate(SubgroupId id, Elem g) const {
  return id_of(conjugate_set(group_, subgroups_[id].members(), g));
}

std::string SubgroupLattice::label(SubgroupId id) const {
  const auto& gens = generators_[id];
  if (gens.empty()) return "1";
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i != 0) out += ", ";
    out += group_.label(gens[i]);
  }
  out += ">";
  return out;
}

SubgroupLattice enumerate_subgroups(const GroupTable& group,
                                    const LatticeLimits& limits) {
  const std::size_t n = group.order();
  const std::size_t cap =
      is_power_of_two(n) && n > 1 ? limits.two_power_order_cap : limits.order_cap;
  if (n > cap) {
    throw Error(ErrorKind::kCapExceeded,
                "group order " + std::to_string(n) + " exceeds lattice order cap " +
                    std::to_string(cap));
  }

  std::vector<Bitset> sets;
  std::vector<std::vector<Elem>> gens;
  std::unordered_map<Bitset, std::size_t, BitsetHash> seen;

  auto add = [&](Bitset members, std::vector<Elem> generators) -> bool {
    if (seen.contains(members)) return false;
    if (sets.size() >= limits.subgroup_cap) {
      throw Error(ErrorKind::kCapExceeded,
                  "subgroup count exceeds cap " + std::to_string(limits.subgroup_cap));
    }
    seen.emplace(members, sets.size());
    sets.push_back(std::move(members));
    gens.push_back(std::move(generators));
    return true;
  };

  add(generated_set(group, {}), {});
  std::vector<Elem> cyclic_gens;
  for (Elem x = 1; x < n; ++x) {
    Elem single[] = {x};
    if (add(generated_set(group, single), {x})) cyclic_gens.push_back(x);
  }

  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (sets[i].test(c)) continue;
      Bitset joined = extend_closure(group, sets[i], gens[i], c);
      if (seen.contains(joined)) continue;
      std::vector<Elem> g = gens[i];
      g.push_back(c);
      add(std::move(joined), std::move(g));
    }
  }

  std::vector<std::size_t> perm(sets.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> orders(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) orders[i] = sets[i].count();
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    return Bitset::member_order_less(sets[a], sets[b]);
  });

  SubgroupLattice lattice;
  lattice.group_ = group;
  const std::size_t count = sets.size();
  lattice.subgroups_.reserve(count);
  lattice.generators_.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t src = perm[k];
    lattice.index_.emplace(sets[src], k);
    lattice.subgroups_.emplace_back(group, sets[src]);
    lattice.generators_.push_back(gens[src]);
  }

  const SubgroupId whole = count - 1;
  lattice.maximal_.assign(count, 0);
  for (SubgroupId h = 0; h < whole; ++h) {
    const Subgroup& sh = lattice.subgroups_[h];
    bool maximal = true;
    for (SubgroupId k = h + 1; k < whole && maximal; ++k) {
      const Subgroup& sk = lattice.subgroups_[k];
      if (sk.order() == sh.order() || sk.order() % sh.order() != 0) continue;
      if (sh.is_contained_in(sk)) maximal = false;
    }
    if (maximal) {
      lattice.maximal_[h] = 1;
      lattice.maximal_ids_.push_back(h);
    }
  }

  Bitset phi = lattice.subgroups_[whole].members();
  for (SubgroupId m : lattice.maximal_ids_) phi &= lattice.subgroups_[m].members();
  lattice.frattini_id_ = lattice.index_.at(phi);

  const std::vector<Elem>& group_gens = group.generators();
  lattice.normal_.assign(count, 1);
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  for (SubgroupId h = 0; h < count; ++h) {
    for (Elem g : group_gens) {
      Bitset image = conjugate_set(group, lattice.subgroups_[h].members(), g);
      SubgroupId other = lattice.index_.at(image);
      if (other != h) {
        lattice.normal_[h] = 0;
        std::size_t a = find_root(parent, h);
        std::size_t b = find_root(parent, other);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  lattice.class_.resize(count);
  for (SubgroupId h = 0; h < count; ++h) lattice.class_[h] = find_root(parent, h);
  return lattice;
}

Subgroup frattini_subgroup(const SubgroupLattice& lattice) {
  return lattice[lattice.frattini_id()];
}

Bitset product_set(const Subgroup& h, const Subgroup& k) {
  const GroupTable& group = h.parent();
  Bitset out(group.order());
  std::vector<Elem> right = k.elements();
  h.members().for_each([&](std::size_t x) {
    for (Elem y : right) out.set(group.mul(static_cast<Elem>(x), y));
  });
  return out;
}

ProductProfile product_profile(const Subgroup& h, const Subgroup& k) {
  if (!h.parent().same_as(k.parent())) {
    throw Error(ErrorKind::kPrecondition, "subgroups have different parent groups");
  }
  ProductProfile profile;
  profile.intersection_order = h.members().intersection_count(k.members());
  profile.product_size = h.order() * k.order() / profile.intersection_order;
  profile.permutes = product_set(h, k) == product_set(k, h);
  profile.covers = profile.product_size == h.parent().order();
  return profile;
}

NormalStructure normal_structure(const Subgroup& h, const SubgroupLattice& lattice) {
  const GroupTable& group = lattice.group();
  Bitset normalizer(group.order());
  std::vector<Subgroup> conjugates;
  std::unordered_map<Bitset, bool, BitsetHash> seen;
  Bitset core = h.members();
  for (Elem g = 0; g < group.order(); ++g) {
    Bitset image = conjugate_set(group, h.members(), g);
    if (image == h.members()) normalizer.set(g);
    if (seen.emplace(image, true).second) {
      core &= image;
      conjugates.emplace_back(group, std::move(image));
    }
  }
  std::sort(conjugates.begin(), conjugates.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return Bitset::member_order_less(a.members(), b.members());
            });
  bool normal = conjugates.size() == 1;
  return NormalStructure{normal, Subgroup(group, std::move(normalizer)),
                         Subgroup(group, std::move(core)), std::move(conjugates)};
}

FactorizationWitness is_factorizable(const SubgroupLattice& lattice) {
  const SubgroupId whole = lattice.whole_id();
  const std::size_t n = lattice.group().order();
  for (SubgroupId i = 0; i < whole; ++i) {
    for (SubgroupId j = i + 1; j < whole; ++j) {
      if (lattice[i].order() * lattice[j].order() < n) continue;
      if (covers_group(lattice[i], lattice[j])) return {true, std::make_pair(i, j)};
    }
  }
  return {false, std::nullopt};
}

}  // namespace fgraph
