#include "fgraph/isomorphism.hpp"

#include <algorithm>
#include <functional>

#include "fgraph/structure.hpp"

namespace fgraph {

GroupInvariants group_invariants(const GroupTable& group) {
  GroupInvariants inv;
  const std::size_t n = group.order();
  inv.order = n;
  inv.is_abelian = group.is_abelian();
  inv.order_histogram.assign(n + 1, 0);
  for (Elem x = 0; x < n; ++x) ++inv.order_histogram[group.element_order(x)];
  inv.center_order = center(group).order();
  inv.derived_order = derived_subgroup(group).order();
  std::vector<char> seen(n, 0);
  for (Elem x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (Elem g = 0; g < n; ++g) {
      Elem y = group.conjugate(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        ++size;
      }
    }
    inv.class_sizes.push_back(size);
  }
  std::sort(inv.class_sizes.begin(), inv.class_sizes.end());
  return inv;
}

bool is_isomorphism(const GroupTable& a, const GroupTable& b,
                    const std::vector<Elem>& map) {
  const std::size_t n = a.order();
  if (b.order() != n || map.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Elem x : map) {
    if (x >= n || hit[x]) return false;
    hit[x] = 1;
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    }
  }
  return true;
}

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

// Extends the partial map along the Cayley graph of <gens> and checks every
// edge. Returns false on a conflict.
bool propagate(const GroupTable& a, const GroupTable& b, const std::vector<Elem>& gens,
               const std::vector<Elem>& images, std::vector<Elem>& map,
               std::vector<Elem>& reached) {
  std::fill(map.begin(), map.end(), kUnset);
  reached.clear();
  map[GroupTable::kIdentity] = GroupTable::kIdentity;
  reached.push_back(GroupTable::kIdentity);
  for (std::size_t head = 0; head < reached.size(); ++head) {
    Elem x = reached[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = a.mul(x, gens[i]);
      Elem image = b.mul(map[x], images[i]);
      if (map[y] == kUnset) {
        map[y] = image;
        reached.push_back(y);
      } else if (map[y] != image) {
        return false;
      }
    }
  }
  std::vector<char> hit(b.order(), 0);
  for (Elem x : reached) {
    if (hit[map[x]]) return false;
    hit[map[x]] = 1;
  }
  return true;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a,
                                                  const GroupInvariants& ia,
                                                  const GroupTable& b,
                                                  const GroupInvariants& ib) {
  if (!(ia == ib)) return std::nullopt;
  const std::size_t n = a.order();
  if (n == 1) return std::vector<Elem>{0};
  std::vector<Elem> gens = minimal_generating_set(a);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t order = a.element_order(gens[i]);
    for (Elem y = 0; y < n; ++y) {
      if (b.element_order(y) == order) candidates[i].push_back(y);
    }
  }
  std::vector<Elem> images;
  std::vector<Elem> map(n, kUnset);
  std::vector<Elem> reached;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == gens.size()) return reached.size() == n;
    std::vector<Elem> prefix(gens.begin(), gens.begin() + static_cast<long>(i) + 1);
    for (Elem y : candidates[i]) {
      images.push_back(y);
      if (propagate(a, b, prefix, images, map, reached) && extend(i + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  if (!is_isomorphism(a, b, map)) return std::nullopt;
  return map;
}

std::optional<std::vector<Elem>> find_isomorphism(const GroupTable& a,
                                                  const GroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  return find_isomorphism(a, group_invariants(a), b, group_invariants(b));
}

}  // namespace fgraph
