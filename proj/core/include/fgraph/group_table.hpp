#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fgraph/bitset.hpp"

namespace fgraph {

using Elem = std::uint32_t;

// Size limits shared by the constructors.
struct Limits {
  std::size_t closure_cap = 20000;      // permutation closure
  std::size_t table_cap = 2000;         // materialized multiplication tables
  std::size_t associativity_cap = 256;  // exhaustive check up to this order
  std::size_t associativity_samples = 10000;
};

// How a table came to exist.
struct Origin {
  std::string kind;  // permutations | presentation | product | catalog | table | quotient | subgroup
  std::string description;
};

// A finite group as an explicit multiplication table. Element 0 is the
// identity. Instances are immutable and cheap to copy (shared storage).
class GroupTable {
 public:
  static constexpr Elem kIdentity = 0;

  // The trivial group.
  GroupTable();

  // Validates `mul` (row-major n*n) and throws Error(kValidation) naming the
  // first violated invariant. An empty `generators` list is replaced by a
  // greedily chosen generating set.
  static GroupTable from_cayley(std::vector<Elem> mul, std::size_t order,
                                std::vector<std::string> labels, Origin origin,
                                std::vector<Elem> generators = {},
                                const Limits& limits = {});

  std::size_t order() const { return data_->order; }
  Elem mul(Elem a, Elem b) const { return data_->mul[a * data_->order + b]; }
  Elem inv(Elem a) const { return data_->inv[a]; }
  std::span<const Elem> row(Elem a) const {
    return {data_->mul.data() + a * data_->order, data_->order};
  }

  const std::string& label(Elem a) const { return data_->labels[a]; }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const Origin& origin() const { return data_->origin; }
  // A generating set; either the constructor's own or a greedy one.
  const std::vector<Elem>& generators() const { return data_->generators; }

  Elem power(Elem a, long long k) const;
  std::size_t element_order(Elem a) const;
  // g^-1 x g
  Elem conjugate(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }
  // a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  bool is_abelian() const;

  bool same_as(const GroupTable& other) const { return data_ == other.data_; }
  // Entry-wise equality of multiplication tables.
  bool same_table(const GroupTable& other) const;

  // Replaces the origin record; returns a new handle with shared contents.
  GroupTable with_origin(Origin origin) const;

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Elem> mul;
    std::vector<Elem> inv;
    std::vector<std::string> labels;
    Origin origin;
    std::vector<Elem> generators;
  };
  explicit GroupTable(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Returns a description of the first violated group-table invariant, or
// nullopt when `mul` (row-major order*order) is a valid group table with
// identity 0.
std::optional<std::string> find_table_violation(std::span<const Elem> mul,
                                                std::size_t order,
                                                const Limits& limits = {});

// Members of the subgroup generated by `generators`.
Bitset generated_set(const GroupTable& group, std::span<const Elem> generators);

// Smallest generating subset found by scanning elements in index order and
// keeping those not already in the closure.
std::vector<Elem> greedy_generators(const GroupTable& group,
                                    const Bitset& members);

}  // namespace fgraph
