#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgraph/group_table.hpp"
#include "fgraph/lattice.hpp"

namespace fgraph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerdictFailure = 2,
  kExitCapExceeded = 3,
};

// Structural summary printed by `analyze`.
nlohmann::json analyze_group(const std::string& name, const GroupTable& group,
                             const LatticeLimits& limits = {});
std::string analysis_to_text(const nlohmann::json& analysis);

// Runs one invocation; `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgraph::cli
