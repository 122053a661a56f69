#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgraph/theorems.hpp"

namespace fgraph {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum class Suite { kAll, kConnectivity, kBipartite, kK14, kClaw, kSquare };
const char* suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);

struct CorpusEntry {
  std::string name;
  GroupTable group;
};

struct CorpusConfig {
  std::size_t max_order = 64;
  Suite suite = Suite::kAll;
  std::size_t jobs = 1;
  LatticeLimits limits;
  bool builtin = true;                 // generate the catalog corpus
  std::vector<CorpusEntry> extra;      // ingested groups, appended before deduplication
};

// Catalog families over parameter grids, all abelian groups by type, small
// symmetric and alternating groups, direct products of small members, then
// the extra groups. Deduplicated by isomorphism (first occurrence kept) and
// sorted by order with generation order as the tie-break. Order-1 groups
// are left out.
std::vector<CorpusEntry> generate_corpus(const CorpusConfig& config);

struct GroupRecord {
  std::string name;
  std::size_t order = 0;
  bool analyzed = false;  // false when a cap stopped the analysis
  std::string note;
  bool factorizable = false;
  bool solvable = false;
  std::size_t subgroups = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  double seconds = 0.0;
};

struct Tally {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t skipped = 0;
};

struct TheoremReport {
  CorpusConfig config;
  std::vector<GroupRecord> corpus;
  std::vector<TheoremVerdict> verdicts;
  std::map<std::string, Tally> tallies;
  double seconds = 0.0;

  bool has_failures() const;
};

// Theorems run by a suite; kSquare adds the mutually-permuting-product
// check on abelian groups with at least four primary cyclic factors.
std::vector<TheoremId> suite_theorems(Suite suite);

// Runs every selected checker on one group. Cap errors become skipped
// verdicts.
std::vector<TheoremVerdict> check_group(const CorpusEntry& entry, Suite suite,
                                        const LatticeLimits& limits,
                                        GroupRecord* record = nullptr);

TheoremReport run_entries(const std::vector<CorpusEntry>& entries, const CorpusConfig& config);
TheoremReport run_corpus(const CorpusConfig& config);

nlohmann::json report_to_json(const TheoremReport& report);
std::string report_to_text(const TheoremReport& report);

}  // namespace fgraph
