#pragma once

// Brute-force reference computations for the tests. They read only the
// multiplication table and deliberately avoid the library's lattice, graph
// and search code.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <set>
#include <vector>

#include "fgraph/group_table.hpp"

namespace oracle {

using fgraph::Elem;
using fgraph::GroupTable;
using ElemSet = std::vector<Elem>;  // sorted

inline ElemSet closure(const GroupTable& g, const ElemSet& gens) {
  std::set<Elem> seen{0};
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (Elem s : gens) {
        Elem y = g.mul(x, s);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline ElemSet product(const GroupTable& g, const ElemSet& a, const ElemSet& b) {
  std::set<Elem> out;
  for (Elem x : a) {
    for (Elem y : b) out.insert(g.mul(x, y));
  }
  return {out.begin(), out.end()};
}

inline ElemSet meet(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Every subgroup, reached by adjoining one element at a time from {1}.
inline std::set<ElemSet> all_subgroups(const GroupTable& g) {
  std::set<ElemSet> found{{0}};
  std::vector<ElemSet> queue{{0}};
  while (!queue.empty()) {
    ElemSet h = queue.back();
    queue.pop_back();
    for (Elem x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      ElemSet gens = h;
      gens.push_back(x);
      ElemSet k = closure(g, gens);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  return found;
}

inline ElemSet whole(const GroupTable& g) {
  ElemSet all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

inline std::vector<ElemSet> maximal_subgroups(const GroupTable& g,
                                              const std::set<ElemSet>& subs) {
  std::vector<ElemSet> out;
  for (const ElemSet& h : subs) {
    if (h.size() == g.order()) continue;
    bool maximal = true;
    for (const ElemSet& k : subs) {
      if (k.size() > h.size() && k.size() < g.order() && subset(h, k)) maximal = false;
    }
    if (maximal) out.push_back(h);
  }
  return out;
}

inline ElemSet frattini(const GroupTable& g, const std::set<ElemSet>& subs) {
  ElemSet phi = whole(g);
  for (const ElemSet& m : maximal_subgroups(g, subs)) phi = meet(phi, m);
  return phi;
}

inline ElemSet center(const GroupTable& g) {
  ElemSet out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x = 0; x < g.order() && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

inline ElemSet derived(const GroupTable& g) {
  ElemSet comms;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) comms.push_back(g.commutator(a, b));
  }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure(g, comms);
}

inline std::size_t count_of_order(const GroupTable& g, std::size_t k) {
  std::size_t count = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    std::size_t ord = 1;
    for (Elem y = x; y != 0; y = g.mul(y, x)) ++ord;
    if (ord == k) ++count;
  }
  return count;
}

// The factorization graph from first principles: vertices are proper
// subgroups outside Phi in lattice-independent sorted order, edges are pairs
// whose explicit set product is the whole group.
struct Graph {
  std::vector<ElemSet> vertices;
  std::vector<std::vector<char>> adj;

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (std::size_t j = i + 1; j < adj.size(); ++j) e += adj[i][j];
    }
    return e;
  }
};

inline Graph factorization_graph(const GroupTable& g) {
  std::set<ElemSet> subs = all_subgroups(g);
  ElemSet phi = frattini(g, subs);
  Graph out;
  for (const ElemSet& h : subs) {
    if (h.size() < g.order() && !subset(h, phi)) out.vertices.push_back(h);
  }
  const std::size_t n = out.vertices.size();
  out.adj.assign(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool edge = product(g, out.vertices[i], out.vertices[j]).size() == g.order();
      out.adj[i][j] = out.adj[j][i] = edge;
    }
  }
  return out;
}

// Induced star K_{1,leaves}: returns {center, leaf...} or empty.
inline std::vector<std::size_t> induced_star(const std::vector<std::vector<char>>& adj,
                                             std::size_t leaves) {
  const std::size_t n = adj.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::size_t> nbrs;
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[c][v]) nbrs.push_back(v);
    }
    if (nbrs.size() < leaves) continue;
    std::vector<char> pick(nbrs.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(leaves), 1);
    do {
      std::vector<std::size_t> chosen;
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (pick[i]) chosen.push_back(nbrs[i]);
      }
      bool independent = true;
      for (std::size_t a = 0; a < chosen.size() && independent; ++a) {
        for (std::size_t b = a + 1; b < chosen.size() && independent; ++b) {
          independent = !adj[chosen[a]][chosen[b]];
        }
      }
      if (independent) {
        chosen.insert(chosen.begin(), c);
        return chosen;
      }
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {};
}

// Induced 4-cycle over all 4-subsets and their three cyclic orders.
inline bool has_induced_square(const std::vector<std::vector<char>>& adj) {
  const std::size_t n = adj.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          std::size_t q[4] = {a, b, c, d};
          std::size_t edges = 0;
          std::size_t deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
              if (adj[q[i]][q[j]]) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
            }
          }
          if (edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace oracle
