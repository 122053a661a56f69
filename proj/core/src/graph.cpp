#include "fgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "fgraph/error.hpp"

namespace fgraph {

void SimpleGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) {
    throw Error(ErrorKind::kPrecondition, "edge endpoint out of range");
  }
  if (a == b) throw Error(ErrorKind::kPrecondition, "loops are not allowed");
  rows_[a].set(b);
  rows_[b].set(a);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t total = 0;
  for (const Bitset& row : rows_) total += row.count();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = rows_[i].next(i + 1); j < size(); j = rows_[i].next(j + 1)) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::induced(std::span<const std::size_t> vertices) const {
  SimpleGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (!adjacent(i, j)) out.add_edge(i, j);
    }
  }
  return out;
}

SimpleGraph complete_graph(std::size_t n) { return SimpleGraph(n).complement(); }

SimpleGraph path_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph star_graph(std::size_t leaves) {
  SimpleGraph g(leaves + 1);
  for (std::size_t i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

ComponentInfo components(const SimpleGraph& graph) {
  ComponentInfo info;
  const std::size_t n = graph.size();
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    if (graph.degree(start) == 0) {
      info.isolated.push_back(start);
      continue;
    }
    std::vector<std::size_t> component{start};
    for (std::size_t head = 0; head < component.size(); ++head) {
      graph.neighbors(component[head]).for_each([&](std::size_t w) {
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
      });
    }
    std::sort(component.begin(), component.end());
    info.components.push_back(std::move(component));
  }
  info.is_connected = info.components.size() + info.isolated.size() <= 1;
  return info;
}

BipartiteInfo bipartite_structure(const SimpleGraph& graph) {
  BipartiteInfo info;
  const std::size_t n = graph.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<int> color(n, -1);
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, 0);
  for (std::size_t start = 0; start < n && info.is_bipartite; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty() && info.is_bipartite) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = graph.neighbors(u).first(); v < n;
           v = graph.neighbors(u).next(v + 1)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          info.is_bipartite = false;
          std::vector<std::size_t> left{u};
          std::vector<std::size_t> right{v};
          std::size_t a = u;
          std::size_t b = v;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          info.odd_cycle = std::move(left);
          break;
        }
      }
    }
  }
  if (!info.is_bipartite) return info;
  for (std::size_t v = 0; v < n; ++v) info.parts[color[v]].push_back(v);
  if (info.parts[0].empty() || info.parts[1].empty()) return info;
  info.is_complete_bipartite =
      graph.edge_count() == info.parts[0].size() * info.parts[1].size();
  return info;
}

Pattern Pattern::claw() { return {PatternKind::kClaw, "K_{1,3}", star_graph(3)}; }
Pattern Pattern::k14() { return {PatternKind::kK14, "K_{1,4}", star_graph(4)}; }
Pattern Pattern::triangle() { return {PatternKind::kTriangle, "C3", cycle_graph(3)}; }
Pattern Pattern::square() { return {PatternKind::kSquare, "C4", cycle_graph(4)}; }

Pattern Pattern::custom(SimpleGraph graph, std::string name) {
  if (graph.size() > kMaxPatternSize) {
    throw Error(ErrorKind::kPrecondition, "pattern-too-large");
  }
  return {PatternKind::kCustom, std::move(name), std::move(graph)};
}

bool is_induced_copy(const SimpleGraph& graph, const SimpleGraph& pattern,
                     std::span<const std::size_t> assignment) {
  if (assignment.size() != pattern.size()) return false;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= graph.size()) return false;
    for (std::size_t j = i + 1; j < assignment.size(); ++j) {
      if (assignment[i] == assignment[j]) return false;
      if (graph.adjacent(assignment[i], assignment[j]) != pattern.adjacent(i, j)) {
        return false;
      }
    }
  }
  return true;
}

namespace {

using Occurrence = std::optional<std::vector<std::size_t>>;

Occurrence find_star(const SimpleGraph& graph, std::size_t leaves) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> chosen;
  std::function<bool(const Bitset&)> extend = [&](const Bitset& candidates) {
    if (chosen.size() == leaves) return true;
    if (candidates.count() < leaves - chosen.size()) return false;
    for (std::size_t v = candidates.first(); v < n; v = candidates.next(v + 1)) {
      Bitset rest = candidates;
      rest.subtract(graph.neighbors(v));
      for (std::size_t w = rest.first(); w <= v && w < n; w = rest.next(w + 1)) {
        rest.reset(w);
      }
      chosen.push_back(v);
      if (extend(rest)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (std::size_t c = 0; c < n; ++c) {
    if (graph.degree(c) < leaves) continue;
    chosen.clear();
    if (extend(graph.neighbors(c))) {
      std::vector<std::size_t> out{c};
      out.insert(out.end(), chosen.begin(), chosen.end());
      return out;
    }
  }
  return std::nullopt;
}

Occurrence find_triangle(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Bitset& na = graph.neighbors(a);
    for (std::size_t b = na.next(a + 1); b < n; b = na.next(b + 1)) {
      Bitset common = na & graph.neighbors(b);
      std::size_t c = common.next(b + 1);
      if (c < n) return std::vector<std::size_t>{a, b, c};
    }
  }
  return std::nullopt;
}

// Every induced 4-cycle has a least vertex a; b < d are its neighbours on
// the cycle and c is the vertex opposite a.
Occurrence find_square(const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Bitset& na = graph.neighbors(a);
    for (std::size_t b = na.next(a + 1); b < n; b = na.next(b + 1)) {
      for (std::size_t d = na.next(b + 1); d < n; d = na.next(d + 1)) {
        if (graph.adjacent(b, d)) continue;
        Bitset common = graph.neighbors(b) & graph.neighbors(d);
        common.subtract(na);
        std::size_t c = common.next(a + 1);
        if (c < n) return std::vector<std::size_t>{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

Occurrence find_generic(const SimpleGraph& graph, const SimpleGraph& pattern) {
  const std::size_t n = graph.size();
  const std::size_t k = pattern.size();
  if (k == 0) return std::vector<std::size_t>{};
  std::vector<std::size_t> assignment;
  std::vector<char> used(n, 0);
  std::function<bool()> extend = [&]() {
    std::size_t i = assignment.size();
    if (i == k) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || graph.degree(v) < pattern.degree(i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = graph.adjacent(assignment[j], v) == pattern.adjacent(j, i);
      }
      if (!ok) continue;
      used[v] = 1;
      assignment.push_back(v);
      if (extend()) return true;
      assignment.pop_back();
      used[v] = 0;
    }
    return false;
  };
  if (extend()) return assignment;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_induced(const SimpleGraph& graph,
                                                     const Pattern& pattern) {
  if (pattern.graph.size() > kMaxPatternSize) {
    throw Error(ErrorKind::kPrecondition, "pattern-too-large");
  }
  Occurrence found;
  switch (pattern.kind) {
    case PatternKind::kClaw:
      found = find_star(graph, 3);
      break;
    case PatternKind::kK14:
      found = find_star(graph, 4);
      break;
    case PatternKind::kTriangle:
      found = find_triangle(graph);
      break;
    case PatternKind::kSquare:
      found = find_square(graph);
      break;
    case PatternKind::kCustom:
      found = find_generic(graph, pattern.graph);
      break;
  }
  if (found && !is_induced_copy(graph, pattern.graph, *found)) {
    throw Error(ErrorKind::kCertificate,
                "induced search returned a non-induced copy of " + pattern.name);
  }
  return found;
}

SimpleGraph disjoint_union_of_cliques(std::span<const UnionTerm> terms) {
  std::size_t total = 0;
  for (const UnionTerm& t : terms) total += t.copies * t.clique;
  SimpleGraph g(total);
  std::size_t base = 0;
  for (const UnionTerm& t : terms) {
    for (std::size_t c = 0; c < t.copies; ++c) {
      for (std::size_t i = 0; i < t.clique; ++i) {
        for (std::size_t j = i + 1; j < t.clique; ++j) g.add_edge(base + i, base + j);
      }
      base += t.clique;
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> graph_isomorphism(const SimpleGraph& a,
                                                          const SimpleGraph& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> da(n), db(n);
  for (std::size_t v = 0; v < n; ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::vector<std::size_t> sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;

  std::vector<std::size_t> map;
  std::vector<char> used(n, 0);
  std::function<bool()> extend = [&]() {
    std::size_t v = map.size();
    if (v == n) return true;
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || da[v] != db[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      used[w] = 1;
      map.push_back(w);
      if (extend()) return true;
      map.pop_back();
      used[w] = 0;
    }
    return false;
  };
  if (extend()) return map;
  return std::nullopt;
}

ComplementMatch equals_complement_of(const SimpleGraph& graph,
                                     std::span<const UnionTerm> terms) {
  SimpleGraph target = disjoint_union_of_cliques(terms).complement();
  if (target.size() != graph.size()) {
    throw Error(ErrorKind::kPrecondition,
                "union has " + std::to_string(target.size()) + " vertices, graph has " +
                    std::to_string(graph.size()));
  }
  if (graph.size() > 12) {
    throw Error(ErrorKind::kPrecondition, "complement matching is limited to 12 vertices");
  }
  ComplementMatch match;
  if (auto iso = graph_isomorphism(graph, target)) {
    match.matches = true;
    match.bijection = std::move(*iso);
  }
  return match;
}

std::optional<std::array<std::size_t, 5>> find_k14_degree_multiset(
    const SimpleGraph& graph) {
  const std::size_t n = graph.size();
  std::array<std::size_t, 5> subset{};
  // A subset can still grow into a K_{1,4} only if it is independent (center
  // still to come) or a star around one of its members.
  std::function<bool(std::size_t, std::size_t)> extend = [&](std::size_t size,
                                                             std::size_t from) {
    if (size == 5) {
      std::array<std::size_t, 5> deg{};
      for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
          if (i != j && graph.adjacent(subset[i], subset[j])) ++deg[i];
        }
      }
      bool has1 = false, has4 = false;
      for (std::size_t d : deg) {
        if (d == 1) {
          has1 = true;
        } else if (d == 4) {
          has4 = true;
        } else {
          return false;
        }
      }
      return has1 && has4;
    }
    Bitset candidates(n);
    for (std::size_t v = from; v < n; ++v) candidates.set(v);
    std::array<std::size_t, 5> deg{};
    std::size_t edges = 0;
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i + 1; j < size; ++j) {
        if (graph.adjacent(subset[i], subset[j])) {
          ++deg[i];
          ++deg[j];
          ++edges;
        }
      }
    }
    std::size_t center = n;
    if (edges > 0) {
      if (edges != size - 1) return false;
      // With two members either endpoint may become the center.
      center = n + 1;
      if (size >= 3) {
        for (std::size_t i = 0; i < size; ++i) {
          if (deg[i] == size - 1) center = subset[i];
        }
        if (center == n + 1) return false;
      }
    }
    if (center == n) {
      Bitset common = candidates;
      for (std::size_t i = 0; i < size; ++i) common &= graph.neighbors(subset[i]);
      if (common.none()) return false;
      for (std::size_t i = 0; i < size; ++i) candidates.subtract(graph.neighbors(subset[i]));
      candidates |= common;
    } else if (center < n) {
      candidates &= graph.neighbors(center);
      for (std::size_t i = 0; i < size; ++i) {
        if (subset[i] != center) candidates.subtract(graph.neighbors(subset[i]));
      }
    }
    for (std::size_t v = candidates.first(); v < n; v = candidates.next(v + 1)) {
      subset[size] = v;
      if (extend(size + 1, v + 1)) return true;
    }
    return false;
  };
  if (extend(0, 0)) return subset;
  return std::nullopt;
}

}  // namespace fgraph
