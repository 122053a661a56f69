#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgraph/corpus.hpp"
#include "fgraph/group_table.hpp"

namespace fgraph::cli {

// Accepted documents:
//   {"name": ..., "perm_generators": {"degree": d, "cycles": [gen, ...]}}
//   {"name": ..., "cayley_table": [[...], ...]}
// A generator is one cycle ([1,2,3]), a list of cycles ([[1,2],[3,4]]), or
// a cycle string ("(1,2)(3,4)"). Points are 1-based, table entries 0-based.
// Tables whose identity is not element 0 are relabeled.
//
// Schema problems throw Error(kMalformedInput); table invariant violations
// throw Error(kValidation) naming the first one found.
GroupTable ingest_group_json(const nlohmann::json& doc, const std::string& source,
                             const Limits& limits = {});
GroupTable ingest_group_file(const std::filesystem::path& path, const Limits& limits = {});

// Every *.json file in `dir`, in file-name order. Entry names come from the
// document's "name" or the file stem.
std::vector<CorpusEntry> ingest_directory(const std::filesystem::path& dir,
                                          const Limits& limits = {});

}  // namespace fgraph::cli
