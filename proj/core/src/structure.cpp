#include "fgraph/structure.hpp"

#include <numeric>
#include <unordered_set>

namespace fgraph {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::size_t> distinct_primes(std::size_t n) {
  std::vector<std::size_t> out = prime_factors(n);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

std::size_t prime_power_base(std::size_t n) {
  std::vector<std::size_t> primes = distinct_primes(n);
  return primes.size() == 1 ? primes.front() : 0;
}

Subgroup center(const GroupTable& group) {
  Bitset members(group.order());
  for (Elem x = 0; x < group.order(); ++x) {
    bool central = true;
    for (Elem g : group.generators()) {
      if (group.mul(x, g) != group.mul(g, x)) {
        central = false;
        break;
      }
    }
    if (central) members.set(x);
  }
  return Subgroup(group, std::move(members));
}

Subgroup commutator_subgroup(const Subgroup& a_side, const Subgroup& b_side) {
  const GroupTable& group = a_side.parent();
  Bitset seen(group.order());
  std::vector<Elem> gens;
  for (Elem a : a_side.elements()) {
    for (Elem b : b_side.elements()) {
      Elem c = group.commutator(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        gens.push_back(c);
      }
    }
  }
  std::vector<Elem> reduced = greedy_generators(group, generated_set(group, gens));
  return Subgroup::generated(group, reduced);
}

Subgroup derived_subgroup(const GroupTable& group) {
  Subgroup whole = Subgroup::whole(group);
  return commutator_subgroup(whole, whole);
}

std::vector<Subgroup> derived_series(const GroupTable& group) {
  std::vector<Subgroup> series{Subgroup::whole(group)};
  while (true) {
    const Subgroup& last = series.back();
    Subgroup next = commutator_subgroup(last, last);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(const GroupTable& group) {
  Subgroup whole = Subgroup::whole(group);
  std::vector<Subgroup> series{whole};
  while (true) {
    const Subgroup& last = series.back();
    Subgroup next = commutator_subgroup(last, whole);
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::size_t exponent(const GroupTable& group) {
  std::size_t e = 1;
  for (Elem x = 0; x < group.order(); ++x) e = std::lcm(e, group.element_order(x));
  return e;
}

std::vector<Elem> minimal_generating_set(const GroupTable& group) {
  const std::size_t n = group.order();
  if (n == 1) return {};
  struct Node {
    Bitset members;
    std::vector<Elem> gens;
  };
  std::unordered_set<Bitset, BitsetHash> visited;
  Bitset trivial(n);
  trivial.set(GroupTable::kIdentity);
  visited.insert(trivial);
  std::vector<Node> level{{trivial, {}}};
  while (!level.empty()) {
    std::vector<Node> next;
    for (const Node& node : level) {
      for (Elem g = 1; g < n; ++g) {
        if (node.members.test(g)) continue;
        std::vector<Elem> gens = node.gens;
        gens.push_back(g);
        Bitset members = generated_set(group, gens);
        if (members.count() == n) return gens;
        if (visited.insert(members).second) next.push_back({std::move(members), std::move(gens)});
      }
    }
    level = std::move(next);
  }
  return {};
}

StructureSummary structure_probe(const GroupTable& group) {
  StructureSummary s{
      .order_factorization = prime_factors(group.order()),
      .center = center(group),
      .derived = derived_subgroup(group),
      .minimal_generating_set = {},
  };
  s.is_abelian = s.center.order() == group.order();
  std::vector<Subgroup> derived = derived_series(group);
  s.is_solvable = derived.back().order() == 1;
  std::vector<Subgroup> lower = lower_central_series(group);
  s.is_nilpotent = lower.back().order() == 1;
  s.is_perfect = s.derived.order() == group.order();
  s.exponent = exponent(group);
  s.minimal_generating_set = minimal_generating_set(group);
  s.min_generators = s.minimal_generating_set.size();
  return s;
}

}  // namespace fgraph
