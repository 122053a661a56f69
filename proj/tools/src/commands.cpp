#include "fgraph/cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fgraph/catalog.hpp"
#include "fgraph/cli/ingest.hpp"
#include "fgraph/cli/spec_parser.hpp"
#include "fgraph/corpus.hpp"
#include "fgraph/error.hpp"
#include "fgraph/factgraph.hpp"
#include "fgraph/graph.hpp"
#include "fgraph/theorems.hpp"

namespace fgraph::cli {
namespace {

nlohmann::json vertex_labels(const FactorizationGraph& graph, const std::vector<std::size_t>& vs) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v : vs) out.push_back(graph.labels[v]);
  return out;
}

nlohmann::json find_pattern(const FactorizationGraph& graph, const Pattern& pattern) {
  auto hit = find_induced(graph.graph, pattern);
  return hit ? vertex_labels(graph, *hit) : nlohmann::json(nullptr);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_labels(const nlohmann::json& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += "; ";
    out += labels[i].get<std::string>();
  }
  return out;
}

std::string finding(const nlohmann::json& hit, const std::string& absent) {
  return hit.is_null() ? "none (" + absent + ")" : "present: " + join_labels(hit);
}

int exit_for(const Error& e) {
  return e.kind() == ErrorKind::kCapExceeded ? kExitCapExceeded : kExitUsage;
}

GroupTable group_from_text(const std::string& text) {
  return build_group(parse_group_spec(text));
}

void write_output(const std::string& data, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << data;
    if (!data.empty() && data.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kMalformedInput, path + ": cannot open for writing");
  file << data;
  if (!data.empty() && data.back() != '\n') file << '\n';
}

}  // namespace

nlohmann::json analyze_group(const std::string& name, const GroupTable& group,
                             const LatticeLimits& limits) {
  GroupContext ctx = make_context(name, group, limits);
  const FactorizationGraph& graph = ctx.graph;
  ComponentInfo comps = components(graph.graph);
  BipartiteInfo bip = bipartite_structure(graph.graph);

  nlohmann::json a;
  a["group"] = name;
  a["order"] = group.order();
  a["frattini_order"] = ctx.lattice[ctx.lattice.frattini_id()].order();
  a["subgroups"] = ctx.lattice.size();
  a["vertices"] = graph.size();
  a["edges"] = graph.graph.edge_count();
  a["reduced_vertices"] = graph.size() - comps.isolated.size();
  a["isolated"] = vertex_labels(graph, comps.isolated);
  a["connected"] = comps.is_connected;
  a["solvable"] = ctx.is_solvable;
  a["nilpotent"] = ctx.is_nilpotent;
  a["factorizable"] = ctx.factorizable();
  if (ctx.factorization) {
    a["factorization"] = {ctx.lattice.label(ctx.factorization->first),
                          ctx.lattice.label(ctx.factorization->second)};
  }

  nlohmann::json condition;
  auto family = frattini_condition_witness(ctx.lattice);
  condition["holds"] = family.has_value();
  if (family) {
    nlohmann::json labels = nlohmann::json::array();
    std::vector<std::size_t> indexes;
    for (SubgroupId id : *family) {
      labels.push_back(ctx.lattice.label(id));
      indexes.push_back(group.order() / ctx.lattice[id].order());
    }
    condition["maximal_family"] = labels;
    condition["indexes"] = indexes;
  }
  a["frattini_condition"] = condition;

  nlohmann::json b;
  b["is_bipartite"] = bip.is_bipartite;
  b["complete_bipartite"] = bip.is_complete_bipartite;
  if (bip.is_bipartite) {
    b["parts"] = {vertex_labels(graph, bip.parts[0]), vertex_labels(graph, bip.parts[1])};
  }
  a["bipartite"] = b;

  a["triangle"] = find_pattern(graph, Pattern::triangle());
  a["claw"] = find_pattern(graph, Pattern::claw());
  a["k14"] = find_pattern(graph, Pattern::k14());
  a["square"] = find_pattern(graph, Pattern::square());
  return a;
}

std::string analysis_to_text(const nlohmann::json& a) {
  std::ostringstream out;
  out << "group: " << a["group"].get<std::string>() << '\n';
  out << "order: " << a["order"] << '\n';
  out << "frattini order: " << a["frattini_order"] << '\n';
  out << "subgroups: " << a["subgroups"] << '\n';
  out << "vertices: " << a["vertices"] << '\n';
  out << "edges: " << a["edges"] << '\n';
  out << "reduced vertices: " << a["reduced_vertices"] << '\n';
  out << "isolated vertices: " << a["isolated"].size();
  if (!a["isolated"].empty()) out << " (" << join_labels(a["isolated"]) << ')';
  out << '\n';
  out << "connected: " << yes_no(a["connected"].get<bool>()) << '\n';
  out << "solvable: " << yes_no(a["solvable"].get<bool>()) << '\n';
  out << "nilpotent: " << yes_no(a["nilpotent"].get<bool>()) << '\n';
  out << "factorizable: " << yes_no(a["factorizable"].get<bool>());
  if (a.contains("factorization")) out << " (" << join_labels(a["factorization"]) << ')';
  out << '\n';

  const auto& c = a["frattini_condition"];
  out << "frattini condition: ";
  if (c["holds"].get<bool>()) {
    out << "holds";
    if (!c["maximal_family"].empty()) {
      out << " with maximal subgroups " << join_labels(c["maximal_family"]) << " of indexes";
      for (const auto& i : c["indexes"]) out << ' ' << i;
    }
  } else {
    out << "fails";
  }
  out << '\n';

  const auto& b = a["bipartite"];
  out << "bipartite: " << yes_no(b["is_bipartite"].get<bool>());
  if (b["is_bipartite"].get<bool>()) {
    out << ", complete bipartite: " << yes_no(b["complete_bipartite"].get<bool>());
  }
  out << '\n';
  if (b.contains("parts")) {
    out << "parts: {" << join_labels(b["parts"][0]) << "} {" << join_labels(b["parts"][1])
        << "}\n";
  }

  out << "triangle: "
      << (a["triangle"].is_null() ? std::string("none")
                                  : "present (triple factorization): " + join_labels(a["triangle"]))
      << '\n';
  out << "claw: " << finding(a["claw"], "claw-free") << '\n';
  out << "k14: " << finding(a["k14"], "K14-free") << '\n';
  out << "square: " << finding(a["square"], "square-free") << '\n';
  return out.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization graphs of finite groups", "fgraph"};
  app.require_subcommand(1);

  std::string spec;
  std::string kind_name = "full";
  std::string format_name = "dot";
  std::string out_path;
  CLI::App* build = app.add_subcommand("build", "Export the factorization graph of a group");
  build->add_option("spec", spec, "Group description, e.g. C12, S4, Meta(5,1,2,1,4)")->required();
  build->add_option("--kind", kind_name, "full | reduced | gap-parity")
      ->check(CLI::IsMember({"full", "reduced", "gap-parity"}));
  build->add_option("--format", format_name, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  build->add_option("--out", out_path, "Write to FILE instead of standard output");

  bool analyze_json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Summarize the factorization graph of a group");
  analyze->add_option("spec", spec, "Group description")->required();
  analyze->add_flag("--json", analyze_json, "Print the summary as JSON");

  std::string suite_name_opt = "all";
  std::size_t max_order = 64;
  std::string ingest_dir;
  std::string report_path;
  std::size_t jobs = 1;
  CLI::App* verify = app.add_subcommand("verify", "Check the theorem suites over a group corpus");
  verify->add_option("--suite", suite_name_opt, "all | connectivity | bipartite | k14 | claw | square")
      ->check(CLI::IsMember({"all", "connectivity", "bipartite", "k14", "claw", "square"}));
  verify->add_option("--max-order", max_order, "Largest group order in the generated corpus");
  verify->add_option("--ingest", ingest_dir, "Directory of group files to add to the corpus");
  verify->add_option("--report", report_path, "Write the JSON report to FILE");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));

  std::size_t list_max_order = 64;
  CLI::App* catalog = app.add_subcommand("catalog", "Catalog commands");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "Print the built-in corpus groups");
  list->add_option("--max-order", list_max_order, "Largest group order listed");

  std::vector<std::string> storage{"fgraph"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : storage) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) {
      GroupTable group = group_from_text(spec);
      SubgroupLattice lattice = enumerate_subgroups(group);
      FactorizationGraph graph = build_graph(lattice, *parse_graph_kind(kind_name));
      write_output(export_graph(graph, *parse_graph_format(format_name), spec), out_path, out);
      return kExitOk;
    }
    if (analyze->parsed()) {
      nlohmann::json a = analyze_group(spec, group_from_text(spec));
      out << (analyze_json ? a.dump(2) + "\n" : analysis_to_text(a));
      return kExitOk;
    }
    if (verify->parsed()) {
      CorpusConfig config;
      config.max_order = max_order;
      config.suite = *parse_suite(suite_name_opt);
      config.jobs = jobs;
      if (!ingest_dir.empty()) config.extra = ingest_directory(ingest_dir);
      TheoremReport report = run_corpus(config);
      out << report_to_text(report);
      if (!report_path.empty()) write_output(report_to_json(report).dump(2), report_path, out);
      if (report.has_failures()) {
        err << "verify: counterexample reports found\n";
        return kExitVerdictFailure;
      }
      return kExitOk;
    }
    if (list->parsed()) {
      CorpusConfig config;
      config.max_order = list_max_order;
      for (const CorpusEntry& e : generate_corpus(config)) {
        out << e.name << '\t' << e.group.order() << '\n';
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "fgraph: " << error_kind_name(e.kind()) << ": " << e.what() << '\n';
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "fgraph: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fgraph::cli
