#include "fgraph/subgroup.hpp"

#include "fgraph/error.hpp"

namespace fgraph {

Subgroup Subgroup::whole(const GroupTable& parent) {
  Bitset all(parent.order());
  for (std::size_t x = 0; x < parent.order(); ++x) all.set(x);
  return Subgroup(parent, std::move(all));
}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  members_.for_each([&](std::size_t x) { out.push_back(static_cast<Elem>(x)); });
  return out;
}

bool is_closed_subgroup(const GroupTable& group, const Bitset& members) {
  if (members.size() != group.order()) return false;
  if (!members.test(GroupTable::kIdentity)) return false;
  std::size_t count = members.count();
  if (group.order() % count != 0) return false;
  std::vector<std::size_t> list = members.to_vector();
  for (std::size_t a : list) {
    if (!members.test(group.inv(static_cast<Elem>(a)))) return false;
    for (std::size_t b : list) {
      if (!members.test(group.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) {
        return false;
      }
    }
  }
  return true;
}

SubgroupTable subgroup_table(const Subgroup& subgroup) {
  const GroupTable& parent = subgroup.parent();
  std::vector<Elem> embedding = subgroup.elements();
  std::vector<Elem> local(parent.order(), 0);
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    local[embedding[i]] = static_cast<Elem>(i);
  }
  std::size_t n = embedding.size();
  std::vector<Elem> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = parent.label(embedding[i]);
    for (std::size_t j = 0; j < n; ++j) {
      mul[i * n + j] = local[parent.mul(embedding[i], embedding[j])];
    }
  }
  Limits limits;
  limits.table_cap = std::max(limits.table_cap, n);
  GroupTable table = GroupTable::from_cayley(
      std::move(mul), n, std::move(labels),
      {"subgroup", "subgroup of order " + std::to_string(n) + " of " +
                       parent.origin().description},
      {}, limits);
  return {std::move(table), std::move(embedding)};
}

}  // namespace fgraph
