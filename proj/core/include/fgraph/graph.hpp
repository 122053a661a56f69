#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fgraph/bitset.hpp"

namespace fgraph {

// Undirected graph without loops, stored as adjacency bit rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : rows_(n, Bitset(n)) {}

  std::size_t size() const { return rows_.size(); }
  // Throws Error(kPrecondition) for loops or out-of-range vertices.
  void add_edge(std::size_t a, std::size_t b);
  bool adjacent(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
  const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;
  // Pairs (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  SimpleGraph induced(std::span<const std::size_t> vertices) const;
  SimpleGraph complement() const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  std::vector<Bitset> rows_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph path_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
// Vertex 0 is the center.
SimpleGraph star_graph(std::size_t leaves);

struct ComponentInfo {
  std::vector<std::vector<std::size_t>> components;  // components with an edge
  std::vector<std::size_t> isolated;
  bool is_connected = true;
};

// The empty graph is connected and has no isolated vertices.
ComponentInfo components(const SimpleGraph& graph);

struct BipartiteInfo {
  bool is_bipartite = true;
  std::array<std::vector<std::size_t>, 2> parts;  // parts[0] holds vertex 0
  bool is_complete_bipartite = false;
  std::vector<std::size_t> odd_cycle;  // closed walk witness when not bipartite
};

BipartiteInfo bipartite_structure(const SimpleGraph& graph);

enum class PatternKind { kClaw, kK14, kTriangle, kSquare, kCustom };

struct Pattern {
  PatternKind kind = PatternKind::kCustom;
  std::string name;
  SimpleGraph graph;

  static Pattern claw();
  static Pattern k14();
  static Pattern triangle();
  static Pattern square();
  // Throws Error(kPrecondition) with "pattern-too-large" above 6 vertices.
  static Pattern custom(SimpleGraph graph, std::string name = "custom");
};

inline constexpr std::size_t kMaxPatternSize = 6;

// First induced copy in lexicographic order of the vertex assignment
// (pattern vertex i -> result[i]). Stars report the center first, the
// square reports its vertices in cycle order.
std::optional<std::vector<std::size_t>> find_induced(const SimpleGraph& graph,
                                                     const Pattern& pattern);

// True when `assignment` maps the pattern onto an induced copy.
bool is_induced_copy(const SimpleGraph& graph, const SimpleGraph& pattern,
                     std::span<const std::size_t> assignment);

// Term of a disjoint union: `copies` disjoint copies of K_`clique`.
struct UnionTerm {
  std::size_t copies = 1;
  std::size_t clique = 1;
};

struct ComplementMatch {
  bool matches = false;
  // Vertex v of the graph maps to vertex bijection[v] of the union, whose
  // vertices are numbered term by term.
  std::vector<std::size_t> bijection;
};

SimpleGraph disjoint_union_of_cliques(std::span<const UnionTerm> terms);

// Decides graph = complement(union). Throws Error(kPrecondition) on a size
// mismatch or more than 12 vertices.
ComplementMatch equals_complement_of(const SimpleGraph& graph,
                                     std::span<const UnionTerm> terms);

// Backtracking isomorphism test; returns the vertex map when isomorphic.
std::optional<std::vector<std::size_t>> graph_isomorphism(const SimpleGraph& a,
                                                          const SimpleGraph& b);

// Scans 5-subsets the way the GAP reference routine does: a subset counts
// when its in-subset degrees take exactly the values {1, 4}. Returns the
// first such subset in increasing vertex order.
std::optional<std::array<std::size_t, 5>> find_k14_degree_multiset(
    const SimpleGraph& graph);

}  // namespace fgraph
