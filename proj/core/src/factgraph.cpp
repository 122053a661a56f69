#include "fgraph/factgraph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fgraph/error.hpp"

namespace fgraph {

const char* graph_kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::kFull:
      return "full";
    case GraphKind::kReduced:
      return "reduced";
    case GraphKind::kGapParity:
      return "gap-parity";
  }
  return "full";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "full") return GraphKind::kFull;
  if (name == "reduced") return GraphKind::kReduced;
  if (name == "gap-parity" || name == "gap_parity") return GraphKind::kGapParity;
  return std::nullopt;
}

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::kDot;
  if (name == "json") return GraphFormat::kJson;
  return std::nullopt;
}

std::optional<std::size_t> FactorizationGraph::vertex_of(SubgroupId id) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), id);
  if (it == vertices.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

FactorizationGraph build_graph(const SubgroupLattice& lattice, GraphKind kind) {
  if (kind == GraphKind::kReduced) return reduce_graph(build_graph(lattice));
  FactorizationGraph out;
  out.group = lattice.group();
  out.kind = kind;
  out.phi_id = lattice.frattini_id();
  const Bitset& phi = lattice[out.phi_id].members();
  for (SubgroupId id = 0; id < lattice.whole_id(); ++id) {
    if (kind == GraphKind::kFull && lattice[id].members().is_subset_of(phi)) continue;
    out.vertices.push_back(id);
    out.subgroups.push_back(lattice[id]);
    out.labels.push_back(lattice.label(id));
  }
  const std::size_t v = out.vertices.size();
  out.graph = SimpleGraph(v);
  const std::size_t n = out.group.order();
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = i + 1; j < v; ++j) {
      const Subgroup& a = out.subgroups[i];
      const Subgroup& b = out.subgroups[j];
      if (a.order() * b.order() < n) continue;
      if (covers_group(a, b)) out.graph.add_edge(i, j);
    }
  }
  out.source_index.resize(v);
  for (std::size_t i = 0; i < v; ++i) out.source_index[i] = i;
  return out;
}

FactorizationGraph reduce_graph(const FactorizationGraph& full) {
  if (full.kind != GraphKind::kFull) {
    throw Error(ErrorKind::kPrecondition, "reduce_graph expects a full factorization graph");
  }
  FactorizationGraph out;
  out.group = full.group;
  out.kind = GraphKind::kReduced;
  out.phi_id = full.phi_id;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (full.graph.degree(i) > 0) keep.push_back(i);
  }
  for (std::size_t i : keep) {
    out.vertices.push_back(full.vertices[i]);
    out.subgroups.push_back(full.subgroups[i]);
    out.labels.push_back(full.labels[i]);
  }
  out.graph = full.graph.induced(keep);
  out.source_index = std::move(keep);
  return out;
}

QuotientEmbedding quotient_graph_embedding(const SubgroupLattice& lattice,
                                           const LatticeLimits& limits) {
  const GroupTable& group = lattice.group();
  Limits table_limits;
  table_limits.table_cap = std::max(table_limits.table_cap, group.order());
  QuotientGroup quotient = quotient_group(group, lattice[lattice.frattini_id()], table_limits);
  SubgroupLattice quotient_lattice = enumerate_subgroups(quotient.table, limits);
  FactorizationGraph quotient_graph = build_graph(quotient_lattice);
  FactorizationGraph graph = build_graph(lattice);

  std::vector<std::size_t> vertex_map;
  vertex_map.reserve(quotient_graph.size());
  for (const Subgroup& h : quotient_graph.subgroups) {
    Bitset preimage(group.order());
    for (Elem g = 0; g < group.order(); ++g) {
      if (h.contains(quotient.projection[g])) preimage.set(g);
    }
    auto id = lattice.find(preimage);
    if (!id) throw Error(ErrorKind::kCertificate, "preimage is not a subgroup");
    auto vertex = graph.vertex_of(*id);
    if (!vertex) {
      throw Error(ErrorKind::kCertificate,
                  "preimage " + lattice.label(*id) + " is not a vertex of F(G)");
    }
    vertex_map.push_back(*vertex);
  }
  for (std::size_t i = 0; i < vertex_map.size(); ++i) {
    for (std::size_t j = i + 1; j < vertex_map.size(); ++j) {
      if (vertex_map[i] == vertex_map[j]) {
        throw Error(ErrorKind::kCertificate, "quotient embedding is not injective");
      }
      if (quotient_graph.graph.adjacent(i, j) !=
          graph.graph.adjacent(vertex_map[i], vertex_map[j])) {
        throw Error(ErrorKind::kCertificate,
                    "quotient embedding does not preserve adjacency of " +
                        quotient_graph.labels[i] + " and " + quotient_graph.labels[j]);
      }
    }
  }
  return {std::move(quotient), std::move(quotient_lattice), std::move(quotient_graph),
          std::move(graph), std::move(vertex_map)};
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_graph(const FactorizationGraph& graph, GraphFormat format,
                         const std::string& group_name) {
  if (format == GraphFormat::kJson) {
    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t i = 0; i < graph.size(); ++i) {
      std::vector<Elem> members = graph.subgroups[i].elements();
      vertices.push_back({{"id", i},
                          {"order", graph.subgroups[i].order()},
                          {"members", members},
                          {"label", graph.labels[i]}});
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : graph.graph.edges()) edges.push_back({a, b});
    nlohmann::json doc = {{"group", group_name},
                          {"kind", graph_kind_name(graph.kind)},
                          {"vertices", std::move(vertices)},
                          {"edges", std::move(edges)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "graph \"" << dot_escape(group_name) << "\" {\n";
  out << "  label=\"" << dot_escape(group_name) << " (" << graph_kind_name(graph.kind)
      << ")\";\n";
  for (std::size_t i = 0; i < graph.size(); ++i) {
    out << "  v" << i << " [label=\"" << dot_escape(graph.labels[i]) << " |"
        << graph.subgroups[i].order() << "|\"];\n";
  }
  for (auto [a, b] : graph.graph.edges()) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace fgraph
