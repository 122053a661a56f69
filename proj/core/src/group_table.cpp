#include "fgraph/group_table.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "fgraph/error.hpp"

namespace fgraph {

GroupTable::GroupTable() {
  auto data = std::make_shared<Data>();
  data->order = 1;
  data->mul = {0};
  data->inv = {0};
  data->labels = {"1"};
  data->origin = {"catalog", "trivial"};
  data_ = std::move(data);
}

std::optional<std::string> find_table_violation(std::span<const Elem> mul,
                                                std::size_t n,
                                                const Limits& limits) {
  if (n == 0) return "empty table";
  if (mul.size() != n * n) return "table is not square";
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      Elem v = mul[r * n + c];
      if (v >= n) {
        std::ostringstream out;
        out << "entry (" << r << "," << c << ") out of range";
        return out.str();
      }
      if (seen[v]) {
        std::ostringstream out;
        out << "non-Latin row " << r << " (repeated entry " << v << ")";
        return out.str();
      }
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      Elem v = mul[r * n + c];
      if (seen[v]) {
        std::ostringstream out;
        out << "non-Latin column " << c << " (repeated entry " << v << ")";
        return out.str();
      }
      seen[v] = 1;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (mul[x] != x || mul[x * n] != x) {
      std::ostringstream out;
      out << "element 0 is not the identity (fails at " << x << ")";
      return out.str();
    }
  }
  auto at = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream out;
    out << "associativity failure at (" << a << "," << b << "," << c << ")";
    return out.str();
  };
  if (n <= limits.associativity_cap) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          if (at(ab, c) != at(a, at(b, c))) return fail(a, b, c);
        }
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < limits.associativity_samples; ++i) {
      std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) return fail(a, b, c);
    }
  }
  return std::nullopt;
}

Bitset generated_set(const GroupTable& group, std::span<const Elem> generators) {
  Bitset members(group.order());
  std::vector<Elem> list{GroupTable::kIdentity};
  members.set(GroupTable::kIdentity);
  for (std::size_t i = 0; i < list.size(); ++i) {
    Elem x = list[i];
    for (Elem g : generators) {
      Elem y = group.mul(x, g);
      if (!members.test(y)) {
        members.set(y);
        list.push_back(y);
      }
    }
  }
  return members;
}

std::vector<Elem> greedy_generators(const GroupTable& group,
                                    const Bitset& members) {
  std::vector<Elem> gens;
  Bitset current(group.order());
  current.set(GroupTable::kIdentity);
  std::size_t target = members.count();
  for (std::size_t x = members.first(); x < members.size() && current.count() < target;
       x = members.next(x + 1)) {
    if (!current.test(x)) {
      gens.push_back(static_cast<Elem>(x));
      current = generated_set(group, gens);
    }
  }
  return gens;
}

GroupTable GroupTable::from_cayley(std::vector<Elem> mul, std::size_t order,
                                   std::vector<std::string> labels,
                                   Origin origin, std::vector<Elem> generators,
                                   const Limits& limits) {
  if (order > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "group order " + std::to_string(order) + " exceeds table cap " +
                    std::to_string(limits.table_cap));
  }
  if (auto violation = find_table_violation(mul, order, limits)) {
    throw Error(ErrorKind::kValidation, *violation);
  }
  auto data = std::make_shared<Data>();
  data->order = order;
  data->mul = std::move(mul);
  data->inv.assign(order, 0);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      if (data->mul[x * order + y] == kIdentity) {
        data->inv[x] = static_cast<Elem>(y);
        break;
      }
    }
  }
  if (labels.size() != order) {
    labels.resize(order);
    for (std::size_t x = 0; x < order; ++x) {
      if (labels[x].empty()) labels[x] = "e" + std::to_string(x);
    }
  }
  data->labels = std::move(labels);
  data->origin = std::move(origin);
  GroupTable table(data);
  if (generators.empty() && order > 1) {
    Bitset all(order);
    for (std::size_t x = 0; x < order; ++x) all.set(x);
    generators = greedy_generators(table, all);
  }
  data->generators = std::move(generators);
  return table;
}

Elem GroupTable::power(Elem a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = kIdentity;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t GroupTable::element_order(Elem a) const {
  std::size_t k = 1;
  Elem x = a;
  while (x != kIdentity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

bool GroupTable::same_table(const GroupTable& other) const {
  return order() == other.order() && data_->mul == other.data_->mul;
}

GroupTable GroupTable::with_origin(Origin origin) const {
  auto data = std::make_shared<Data>(*data_);
  data->origin = std::move(origin);
  return GroupTable(std::move(data));
}

}  // namespace fgraph
