#pragma once

#include <span>
#include <vector>

#include "fgraph/bitset.hpp"
#include "fgraph/group_table.hpp"

namespace fgraph {

// A subgroup of a parent table, stored as a membership bit vector.
class Subgroup {
 public:
  // `members` must be closed; checked with is_closed_subgroup in debug paths
  // by callers that build subgroups from untrusted sets.
  Subgroup(GroupTable parent, Bitset members)
      : parent_(std::move(parent)),
        members_(std::move(members)),
        order_(members_.count()) {}

  static Subgroup generated(const GroupTable& parent,
                            std::span<const Elem> generators) {
    return Subgroup(parent, generated_set(parent, generators));
  }
  static Subgroup trivial(const GroupTable& parent) {
    return generated(parent, {});
  }
  static Subgroup whole(const GroupTable& parent);

  const GroupTable& parent() const { return parent_; }
  const Bitset& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(Elem x) const { return members_.test(x); }
  std::vector<Elem> elements() const;

  bool is_contained_in(const Subgroup& other) const {
    return members_.is_subset_of(other.members_);
  }
  bool operator==(const Subgroup& other) const {
    return parent_.same_as(other.parent_) && members_ == other.members_;
  }

 private:
  GroupTable parent_;
  Bitset members_;
  std::size_t order_;
};

// True iff `members` contains the identity and is closed under products
// and inverses, and its size divides the group order.
bool is_closed_subgroup(const GroupTable& group, const Bitset& members);

// The subgroup as a table of its own, with elements in increasing parent
// index order. `embedding[i]` is the parent index of element i.
struct SubgroupTable {
  GroupTable table;
  std::vector<Elem> embedding;
};
SubgroupTable subgroup_table(const Subgroup& subgroup);

}  // namespace fgraph
