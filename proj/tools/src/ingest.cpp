#include "fgraph/cli/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include "fgraph/error.hpp"
#include "fgraph/permutation.hpp"

namespace fgraph::cli {
namespace {

[[noreturn]] void schema_error(const std::string& source, const std::string& message) {
  throw Error(ErrorKind::kMalformedInput, source + ": " + message);
}

std::vector<std::vector<int>> generator_cycles(const nlohmann::json& gen, const std::string& source) {
  if (gen.is_string()) return parse_cycles(gen.get<std::string>());
  if (!gen.is_array()) schema_error(source, "generator must be an array or a cycle string");
  auto as_cycle = [&](const nlohmann::json& c) {
    std::vector<int> cycle;
    for (const auto& p : c) {
      if (!p.is_number_integer()) schema_error(source, "cycle points must be integers");
      cycle.push_back(p.get<int>());
    }
    return cycle;
  };
  if (std::all_of(gen.begin(), gen.end(), [](const nlohmann::json& p) { return p.is_number(); })) {
    return {as_cycle(gen)};
  }
  std::vector<std::vector<int>> cycles;
  for (const auto& c : gen) {
    if (!c.is_array()) schema_error(source, "a generator mixes points and cycles");
    cycles.push_back(as_cycle(c));
  }
  return cycles;
}

GroupTable from_permutations(const nlohmann::json& payload, const std::string& source,
                             const Limits& limits) {
  if (!payload.is_object()) schema_error(source, "perm_generators must be an object");
  if (!payload.contains("degree") || !payload["degree"].is_number_integer() ||
      payload["degree"].get<long long>() < 1) {
    schema_error(source, "perm_generators.degree must be a positive integer");
  }
  if (!payload.contains("cycles") || !payload["cycles"].is_array()) {
    schema_error(source, "perm_generators.cycles must be an array");
  }
  PermutationGenerators gens;
  gens.degree = payload["degree"].get<std::size_t>();
  for (const auto& gen : payload["cycles"]) {
    gens.generators.push_back(permutation_from_cycles(generator_cycles(gen, source), gens.degree));
  }
  return group_from_permutations(gens, limits).with_origin({"permutations", source});
}

GroupTable from_table(const nlohmann::json& payload, const std::string& source,
                      const Limits& limits) {
  if (!payload.is_array() || payload.empty()) {
    schema_error(source, "cayley_table must be a non-empty array of rows");
  }
  const std::size_t n = payload.size();
  if (n > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded,
                source + ": table of order " + std::to_string(n) + " exceeds table cap");
  }
  std::vector<Elem> mul;
  mul.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = payload[r];
    if (!row.is_array() || row.size() != n) {
      schema_error(source, "row " + std::to_string(r) + " does not have " + std::to_string(n) +
                               " entries");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() >= static_cast<long long>(n)) {
        schema_error(source, "row " + std::to_string(r) + " has an entry outside 0.." +
                                 std::to_string(n - 1));
      }
      mul.push_back(v.get<Elem>());
    }
  }

  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = mul[e * n + x] == x && mul[x * n + e] == x;
    if (ok) identity = e;
  }
  if (auto violation = find_table_violation(mul, n, limits)) {
    if (!identity || *identity == 0) throw Error(ErrorKind::kValidation, source + ": " + *violation);
  }
  if (!identity) throw Error(ErrorKind::kValidation, source + ": no identity element");

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "t" + std::to_string(i);
  if (*identity != 0) {
    // Swap the identity into position 0.
    std::vector<Elem> swap(n);
    std::iota(swap.begin(), swap.end(), Elem{0});
    std::swap(swap[0], swap[*identity]);
    std::vector<Elem> relabeled(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) relabeled[swap[a] * n + swap[b]] = swap[mul[a * n + b]];
    }
    mul = std::move(relabeled);
    std::swap(labels[0], labels[*identity]);
  }
  try {
    return GroupTable::from_cayley(std::move(mul), n, std::move(labels), {"table", source}, {},
                                   limits);
  } catch (const Error& e) {
    throw Error(e.kind(), source + ": " + e.what() + " (identity relabeled to 0)");
  }
}

struct Loaded {
  std::string name;
  GroupTable group;
};

Loaded load(const std::filesystem::path& path, const Limits& limits) {
  const std::string source = path.string();
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kMalformedInput, source + ": cannot open file");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(source, std::string("invalid JSON: ") + e.what());
  }
  std::string name = path.stem().string();
  if (doc.is_object() && doc.contains("name")) {
    if (!doc["name"].is_string()) schema_error(source, "name must be a string");
    name = doc["name"].get<std::string>();
  }
  return {name, ingest_group_json(doc, source, limits)};
}

}  // namespace

GroupTable ingest_group_json(const nlohmann::json& doc, const std::string& source,
                             const Limits& limits) {
  if (!doc.is_object()) schema_error(source, "document must be a JSON object");
  const bool perms = doc.contains("perm_generators");
  const bool table = doc.contains("cayley_table");
  if (perms == table) {
    schema_error(source, "exactly one of perm_generators and cayley_table is required");
  }
  return perms ? from_permutations(doc["perm_generators"], source, limits)
               : from_table(doc["cayley_table"], source, limits);
}

GroupTable ingest_group_file(const std::filesystem::path& path, const Limits& limits) {
  return load(path, limits).group;
}

std::vector<CorpusEntry> ingest_directory(const std::filesystem::path& dir, const Limits& limits) {
  if (!std::filesystem::is_directory(dir)) {
    throw Error(ErrorKind::kMalformedInput, dir.string() + ": not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& file : files) {
    Loaded loaded = load(file, limits);
    out.push_back({loaded.name, loaded.group});
  }
  return out;
}

}  // namespace fgraph::cli
