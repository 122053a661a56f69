#include "fgraph/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "fgraph/catalog.hpp"
#include "fgraph/constructions.hpp"
#include "fgraph/error.hpp"

namespace fgraph {

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return "all";
    case Suite::kConnectivity:
      return "connectivity";
    case Suite::kBipartite:
      return "bipartite";
    case Suite::kK14:
      return "k14";
    case Suite::kClaw:
      return "claw";
    case Suite::kSquare:
      return "square";
  }
  return "all";
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::kAll, Suite::kConnectivity, Suite::kBipartite, Suite::kK14,
                  Suite::kClaw, Suite::kSquare}) {
    if (name == suite_name(s)) return s;
  }
  return std::nullopt;
}

std::vector<TheoremId> suite_theorems(Suite suite) {
  switch (suite) {
    case Suite::kAll:
      return {TheoremId::kConnectivity, TheoremId::kBipartite, TheoremId::kK14Free,
              TheoremId::kClawFree,     TheoremId::kSquareLemma, TheoremId::kSquareFree};
    case Suite::kConnectivity:
      return {TheoremId::kConnectivity};
    case Suite::kBipartite:
      return {TheoremId::kBipartite};
    case Suite::kK14:
      return {TheoremId::kK14Free};
    case Suite::kClaw:
      return {TheoremId::kClawFree};
    case Suite::kSquare:
      return {TheoremId::kSquareLemma, TheoremId::kSquareFree};
  }
  return {};
}

bool TheoremReport::has_failures() const {
  for (const auto& [name, tally] : tallies) {
    if (tally.fails > 0) return true;
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

// Partitions of e into non-increasing parts.
void partitions(std::size_t e, std::size_t max_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (e == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(e, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions(e - part, part, current, out);
    current.pop_back();
  }
}

// Invariant factor lists (d1 >= d2 >= ..., d_{i+1} | d_i) of every abelian
// group of order n.
std::vector<std::vector<long long>> abelian_types(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> primes;
  for (std::size_t p : prime_factors(n)) {
    if (!primes.empty() && primes.back().first == p) {
      ++primes.back().second;
    } else {
      primes.emplace_back(p, 1);
    }
  }
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (auto [p, e] : primes) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> current;
    partitions(e, e, current, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<std::vector<long long>> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::size_t length = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      length = std::max(length, choices[i][pick[i]].size());
    }
    std::vector<long long> factors(length, 1);
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& part = choices[i][pick[i]];
      for (std::size_t j = 0; j < part.size(); ++j) {
        for (std::size_t k = 0; k < part[j]; ++k) {
          factors[j] *= static_cast<long long>(primes[i].first);
        }
      }
    }
    out.push_back(std::move(factors));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

class CorpusBuilder {
 public:
  CorpusBuilder(std::size_t max_order, const LatticeLimits& limits)
      : max_order_(max_order), limits_(limits) {}

  bool admits(std::size_t order) const {
    if (order < 2) return false;
    bool two_power = (order & (order - 1)) == 0;
    return order <= (two_power ? limits_.two_power_order_cap : limits_.order_cap);
  }

  void add(const CatalogSpec& spec) {
    std::size_t order = catalog_order(spec);
    if (order > max_order_ || !admits(order)) return;
    entries_.push_back({catalog_name(spec), catalog_group(spec)});
  }
  void add(CorpusEntry entry, bool builtin = true) {
    if (entry.group.order() < 2) return;
    if (builtin && !admits(entry.group.order())) return;
    entries_.push_back(std::move(entry));
  }

  std::vector<CorpusEntry>& entries() { return entries_; }
  std::size_t max_order() const { return max_order_; }

 private:
  std::size_t max_order_;
  LatticeLimits limits_;
  std::vector<CorpusEntry> entries_;
};

void add_catalog_families(CorpusBuilder& b) {
  const std::size_t n_max = b.max_order();
  for (std::size_t n = 2; n <= n_max; ++n) {
    for (auto& type : abelian_types(n)) {
      if (type.size() == 1) {
        b.add({Family::kCyclic, {static_cast<long long>(n)}});
      } else {
        b.add({Family::kAbelianOfType, type});
      }
    }
  }
  for (std::size_t n = 6; n <= n_max; n += 2) b.add({Family::kDihedral, {static_cast<long long>(n)}});
  for (long long n = 8; n <= static_cast<long long>(n_max); n *= 2) {
    b.add({Family::kGeneralizedQuaternion, {n}});
    if (n >= 16) {
      b.add({Family::kSemiDihedral, {n}});
      b.add({Family::kModular, {n}});
    }
  }
  for (long long d = 3; d <= 5; ++d) b.add({Family::kSymmetric, {d}});
  for (long long d = 4; d <= 5; ++d) b.add({Family::kAlternating, {d}});
  if (n_max >= 16) {
    for (Family f : {Family::kG1, Family::kG2, Family::kG3, Family::kG4}) b.add({f, {}});
  }
  for (long long n = 1; 3 * (1LL << n) <= static_cast<long long>(n_max); ++n) {
    b.add({Family::kK14Family, {n}});
  }
  const long long cap = static_cast<long long>(n_max);
  for (long long p = 2; p <= cap; ++p) {
    if (!is_prime(static_cast<std::size_t>(p))) continue;
    for (long long q = 2; q <= cap; ++q) {
      if (q == p || !is_prime(static_cast<std::size_t>(q))) continue;
      for (long long pm = p, m = 1; pm * q <= cap; pm *= p, ++m) {
        for (long long qn = q, n = 1; pm * qn <= cap; qn *= q, ++n) {
          for (long long lam = 2; lam < pm; ++lam) {
            if (multiplicative_order(lam, pm) == static_cast<std::size_t>(q)) {
              b.add({Family::kMetacyclic, {p, m, q, n, lam}});
              break;
            }
          }
        }
      }
    }
  }
  for (long long p = 2; p <= cap; ++p) {
    if (!is_prime(static_cast<std::size_t>(p))) continue;
    for (long long pk = p, k = 1; pk * 2 <= cap; pk *= p, ++k) {
      for (long long q = 2; pk * q <= cap; ++q) {
        if ((pk - 1) % q != 0) continue;
        if (k == 1) {
          b.add({Family::kFrobenius, {p, q}});
        } else {
          b.add({Family::kFrobenius, {p, q, k}});
        }
      }
    }
  }
}

void add_products(CorpusBuilder& b) {
  std::vector<CorpusEntry> base = b.entries();
  std::vector<const CorpusEntry*> nonabelian;
  std::vector<const CorpusEntry*> abelian;
  for (const CorpusEntry& e : base) {
    (e.group.is_abelian() ? abelian : nonabelian).push_back(&e);
  }
  const std::size_t n_max = b.max_order();
  Limits limits;
  limits.table_cap = std::max(limits.table_cap, n_max);
  for (const CorpusEntry* a : nonabelian) {
    for (const CorpusEntry* c : abelian) {
      if (a->group.order() * c->group.order() > n_max) continue;
      if (!b.admits(a->group.order() * c->group.order())) continue;
      b.add({a->name + "x" + c->name, direct_product(a->group, c->group, limits)});
    }
  }
  for (std::size_t i = 0; i < nonabelian.size(); ++i) {
    for (std::size_t j = i; j < nonabelian.size(); ++j) {
      const CorpusEntry* a = nonabelian[i];
      const CorpusEntry* c = nonabelian[j];
      if (a->group.order() * c->group.order() > n_max) continue;
      if (!b.admits(a->group.order() * c->group.order())) continue;
      b.add({a->name + "x" + c->name, direct_product(a->group, c->group, limits)});
    }
  }
}

std::vector<std::size_t> invariant_key(const GroupInvariants& inv) {
  std::vector<std::size_t> key{inv.order, inv.is_abelian ? 1u : 0u, inv.center_order,
                               inv.derived_order};
  key.insert(key.end(), inv.order_histogram.begin(), inv.order_histogram.end());
  key.push_back(0);
  key.insert(key.end(), inv.class_sizes.begin(), inv.class_sizes.end());
  return key;
}

}  // namespace

std::vector<CorpusEntry> generate_corpus(const CorpusConfig& config) {
  CorpusBuilder builder(config.max_order, config.limits);
  if (config.builtin && config.max_order >= 2) {
    add_catalog_families(builder);
    add_products(builder);
  }
  for (const CorpusEntry& e : config.extra) builder.add(e, false);

  std::vector<CorpusEntry>& all = builder.entries();
  std::vector<GroupInvariants> invariants;
  invariants.reserve(all.size());
  for (const CorpusEntry& e : all) invariants.push_back(group_invariants(e.group));

  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto& bucket = buckets[invariant_key(invariants[i])];
    bool duplicate = false;
    for (std::size_t j : bucket) {
      if (find_isomorphism(all[i].group, invariants[i], all[j].group, invariants[j])) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      bucket.push_back(i);
      kept.push_back(i);
    }
  }
  std::stable_sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    return all[a].group.order() < all[b].group.order();
  });
  std::vector<CorpusEntry> out;
  out.reserve(kept.size());
  for (std::size_t i : kept) out.push_back(all[i]);
  return out;
}

namespace {

TheoremVerdict skipped_verdict(TheoremId id, const std::string& group, std::string reason) {
  TheoremVerdict v;
  v.theorem = id;
  v.group = group;
  v.status = VerdictStatus::kSkipped;
  v.reason = std::move(reason);
  return v;
}

}  // namespace

std::vector<TheoremVerdict> check_group(const CorpusEntry& entry, Suite suite,
                                        const LatticeLimits& limits, GroupRecord* record) {
  auto start = Clock::now();
  std::vector<TheoremVerdict> verdicts;
  std::vector<TheoremId> theorems = suite_theorems(suite);
  GroupRecord local;
  GroupRecord& rec = record ? *record : local;
  rec.name = entry.name;
  rec.order = entry.group.order();
  std::optional<GroupContext> ctx;
  try {
    ctx.emplace(make_context(entry.name, entry.group, limits));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCapExceeded) throw;
    rec.note = e.what();
    for (TheoremId id : theorems) {
      if (id != TheoremId::kSquareLemma) verdicts.push_back(skipped_verdict(id, entry.name, e.what()));
    }
    rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return verdicts;
  }
  rec.analyzed = true;
  rec.factorizable = ctx->factorizable();
  rec.solvable = ctx->is_solvable;
  rec.subgroups = ctx->lattice.size();
  rec.vertices = ctx->graph.size();
  rec.edges = ctx->graph.graph.edge_count();
  for (TheoremId id : theorems) {
    try {
      switch (id) {
        case TheoremId::kConnectivity:
          verdicts.push_back(check_connectivity_theorem(*ctx));
          break;
        case TheoremId::kBipartite:
          verdicts.push_back(check_bipartite_theorem(*ctx));
          break;
        case TheoremId::kK14Free:
          verdicts.push_back(check_k14_theorem(*ctx));
          break;
        case TheoremId::kClawFree:
          verdicts.push_back(check_claw_corollary(*ctx));
          break;
        case TheoremId::kSquareLemma: {
          std::vector<SubgroupId> decomposition = abelian_primary_decomposition(*ctx);
          if (decomposition.size() >= 4) {
            verdicts.push_back(check_square_lemma(*ctx, decomposition));
          }
          break;
        }
        case TheoremId::kSquareFree:
          verdicts.push_back(check_squarefree_theorem(*ctx, limits));
          break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kCapExceeded) throw;
      verdicts.push_back(skipped_verdict(id, entry.name, e.what()));
    }
  }
  rec.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return verdicts;
}

TheoremReport run_entries(const std::vector<CorpusEntry>& entries, const CorpusConfig& config) {
  auto start = Clock::now();
  TheoremReport report;
  report.config = config;
  report.config.extra.clear();
  const std::size_t count = entries.size();
  std::vector<std::vector<TheoremVerdict>> results(count);
  std::vector<GroupRecord> records(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = check_group(entries[i], config.suite, config.limits, &records[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, std::max<std::size_t>(count, 1)));
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }

  for (TheoremId id : suite_theorems(config.suite)) report.tallies[theorem_name(id)];
  for (std::size_t i = 0; i < count; ++i) {
    report.corpus.push_back(std::move(records[i]));
    for (TheoremVerdict& v : results[i]) {
      Tally& t = report.tallies[theorem_name(v.theorem)];
      switch (v.status) {
        case VerdictStatus::kHolds:
          ++t.holds;
          break;
        case VerdictStatus::kFails:
          ++t.fails;
          break;
        case VerdictStatus::kSkipped:
          ++t.skipped;
          break;
      }
      report.verdicts.push_back(std::move(v));
    }
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

TheoremReport run_corpus(const CorpusConfig& config) {
  return run_entries(generate_corpus(config), config);
}

nlohmann::json report_to_json(const TheoremReport& report) {
  const CorpusConfig& c = report.config;
  nlohmann::json config = {
      {"max_order", c.max_order},
      {"suite", suite_name(c.suite)},
      {"jobs", c.jobs},
      {"builtin_corpus", c.builtin},
      {"caps",
       {{"lattice_order", c.limits.order_cap},
        {"lattice_order_two_power", c.limits.two_power_order_cap},
        {"subgroups", c.limits.subgroup_cap}}},
      {"version", kToolkitVersion},
      {"scope",
       "classification checks quantify over the generated corpus only, not over all groups "
       "of bounded order"},
  };
  nlohmann::json corpus = nlohmann::json::array();
  for (const GroupRecord& r : report.corpus) {
    nlohmann::json entry = {{"name", r.name},         {"order", r.order},
                            {"analyzed", r.analyzed}, {"factorizable", r.factorizable},
                            {"solvable", r.solvable}, {"subgroups", r.subgroups},
                            {"vertices", r.vertices}, {"edges", r.edges},
                            {"seconds", r.seconds}};
    if (!r.note.empty()) entry["note"] = r.note;
    corpus.push_back(std::move(entry));
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const TheoremVerdict& v : report.verdicts) verdicts.push_back(verdict_to_json(v));
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [name, t] : report.tallies) {
    tallies[name] = {{"holds", t.holds}, {"fails", t.fails}, {"skipped", t.skipped}};
  }
  return {{"config", std::move(config)},
          {"corpus", std::move(corpus)},
          {"verdicts", std::move(verdicts)},
          {"tallies", std::move(tallies)},
          {"seconds", report.seconds}};
}

std::string report_to_text(const TheoremReport& report) {
  std::ostringstream out;
  out << "corpus: " << report.corpus.size() << " groups, max order "
      << report.config.max_order << ", suite " << suite_name(report.config.suite) << "\n";
  out << std::left << std::setw(16) << "theorem" << std::right << std::setw(8) << "holds"
      << std::setw(8) << "fails" << std::setw(9) << "skipped" << "\n";
  for (const auto& [name, t] : report.tallies) {
    out << std::left << std::setw(16) << name << std::right << std::setw(8) << t.holds
        << std::setw(8) << t.fails << std::setw(9) << t.skipped << "\n";
  }
  bool header = false;
  for (const TheoremVerdict& v : report.verdicts) {
    if (v.status != VerdictStatus::kFails) continue;
    if (!header) {
      out << "failures:\n";
      header = true;
    }
    out << "  " << theorem_name(v.theorem) << " on " << v.group << ": " << v.reason << "\n"
        << "    " << v.witness.dump() << "\n";
  }
  out << std::fixed << std::setprecision(2) << "elapsed: " << report.seconds << " s\n";
  return out.str();
}

}  // namespace fgraph
