#include "fgraph/permutation.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "fgraph/error.hpp"

namespace fgraph {

Permutation permutation_from_cycles(
    const std::vector<std::vector<int>>& cycles, std::size_t degree) {
  Permutation perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint32_t>(i);
  std::vector<char> used(degree, 0);
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (point < 1 || static_cast<std::size_t>(point) > degree) {
        throw Error(ErrorKind::kMalformedInput,
                    "malformed cycle: point " + std::to_string(point) +
                        " outside 1.." + std::to_string(degree));
      }
      if (used[point - 1]) {
        throw Error(ErrorKind::kMalformedInput,
                    "malformed cycle: point " + std::to_string(point) +
                        " repeated");
      }
      used[point - 1] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      perm[cycle[i] - 1] =
          static_cast<std::uint32_t>(cycle[(i + 1) % cycle.size()] - 1);
    }
  }
  return perm;
}

std::vector<std::vector<int>> parse_cycles(std::string_view text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorKind::kMalformedInput,
                  "malformed cycle at position " + std::to_string(i) +
                      ": expected '('");
    }
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) {
        throw Error(ErrorKind::kMalformedInput, "malformed cycle: missing ')'");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorKind::kMalformedInput,
                    "malformed cycle at position " + std::to_string(i) +
                        ": unexpected '" + std::string(1, text[i]) + "'");
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(value);
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return cycles;
}

std::string cycle_string(const Permutation& perm) {
  std::ostringstream out;
  std::vector<char> seen(perm.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    any = true;
    out << '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = 1;
      if (!first) out << ',';
      out << p + 1;
      first = false;
      p = perm[p];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

bool is_bijection(const Permutation& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (std::uint32_t v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

GroupTable group_from_permutations(const PermutationGenerators& gens,
                                   const Limits& limits) {
  for (const auto& g : gens.generators) {
    if (g.size() != gens.degree || !is_bijection(g)) {
      throw Error(ErrorKind::kMalformedInput,
                  "generator is not a bijection on 1.." +
                      std::to_string(gens.degree));
    }
  }
  Permutation identity(gens.degree);
  for (std::size_t i = 0; i < gens.degree; ++i) identity[i] = static_cast<std::uint32_t>(i);

  // right[x * k + j] = index of x * gens[j]; parent links give each element
  // as (earlier element) * generator.
  const std::size_t k = gens.generators.size();
  std::vector<Permutation> elements{identity};
  std::map<Permutation, Elem> index{{identity, 0}};
  std::vector<Elem> right;
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation y = compose(elements[i], gens.generators[j]);
      auto [it, inserted] = index.emplace(y, static_cast<Elem>(elements.size()));
      if (inserted) {
        elements.push_back(std::move(y));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(j);
        if (elements.size() > limits.closure_cap) {
          throw Error(ErrorKind::kCapExceeded,
                      "closure-cap-exceeded: more than " +
                          std::to_string(limits.closure_cap) + " elements");
        }
      }
      right.push_back(it->second);
    }
  }
  std::size_t n = elements.size();
  if (n > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "permutation group of order " + std::to_string(n) +
                    " exceeds table cap " + std::to_string(limits.table_cap));
  }
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    mul[a * n] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) {
      mul[a * n + b] = right[mul[a * n + parent[b]] * k + via[b]];
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = cycle_string(elements[a]);
  std::vector<Elem> generator_elems;
  std::ostringstream desc;
  desc << "Perm[";
  for (std::size_t k = 0; k < gens.generators.size(); ++k) {
    generator_elems.push_back(index.at(gens.generators[k]));
    if (k) desc << "; ";
    desc << cycle_string(gens.generators[k]);
  }
  desc << "]";
  // Drop identity generators so generators() stays meaningful.
  std::erase(generator_elems, GroupTable::kIdentity);
  return GroupTable::from_cayley(std::move(mul), n, std::move(labels),
                                 {"permutations", desc.str()},
                                 std::move(generator_elems), limits);
}

}  // namespace fgraph
