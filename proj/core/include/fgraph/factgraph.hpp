#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgraph/constructions.hpp"
#include "fgraph/graph.hpp"
#include "fgraph/lattice.hpp"

namespace fgraph {

enum class GraphKind {
  kFull,       // proper subgroups not contained in the Frattini subgroup
  kReduced,    // the full graph without isolated vertices
  kGapParity,  // every proper subgroup, matching the GAP reference routine
};

const char* graph_kind_name(GraphKind kind);  // "full", "reduced", "gap-parity"
std::optional<GraphKind> parse_graph_kind(std::string_view name);

struct FactorizationGraph {
  GroupTable group;
  GraphKind kind = GraphKind::kFull;
  std::vector<SubgroupId> vertices;  // lattice ids, increasing
  std::vector<Subgroup> subgroups;   // subgroups[i] is vertex i
  std::vector<std::string> labels;
  SimpleGraph graph;
  SubgroupId phi_id = 0;
  // For reduced graphs, the vertex index in the full graph; identity otherwise.
  std::vector<std::size_t> source_index;

  std::size_t size() const { return vertices.size(); }
  std::optional<std::size_t> vertex_of(SubgroupId id) const;
};

FactorizationGraph build_graph(const SubgroupLattice& lattice,
                               GraphKind kind = GraphKind::kFull);

// Throws Error(kPrecondition) unless `full` has kind kFull.
FactorizationGraph reduce_graph(const FactorizationGraph& full);

struct QuotientEmbedding {
  QuotientGroup quotient;
  SubgroupLattice quotient_lattice;
  FactorizationGraph quotient_graph;
  FactorizationGraph graph;
  // Quotient vertex i maps to vertex vertex_map[i] of `graph` (its preimage).
  std::vector<std::size_t> vertex_map;
};

// Embeds F(G/Phi(G)) into F(G) by full preimages and checks exhaustively
// that edges and non-edges are preserved. Throws Error(kCertificate).
QuotientEmbedding quotient_graph_embedding(const SubgroupLattice& lattice,
                                           const LatticeLimits& limits = {});

enum class GraphFormat { kDot, kJson };
std::optional<GraphFormat> parse_graph_format(std::string_view name);

std::string export_graph(const FactorizationGraph& graph, GraphFormat format,
                         const std::string& group_name);

}  // namespace fgraph
