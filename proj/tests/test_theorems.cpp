#include <gtest/gtest.h>

#include "fgraph/catalog.hpp"
#include "fgraph/constructions.hpp"
#include "fgraph/corpus.hpp"
#include "fgraph/theorems.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fgraph;
using fixtures::cat;

namespace {

GroupContext ctx_of(const std::string& name, const GroupTable& g) { return make_context(name, g); }

GroupContext abelian(std::vector<long long> type) {
  LatticeLimits wide;
  wide.order_cap = 256;
  return make_context("abelian", cat(Family::kAbelianOfType, std::move(type)), wide);
}

bool oracle_connected(const oracle::Graph& g) {
  const std::size_t n = g.vertices.size();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (g.adj[v][w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<CorpusEntry> corpus_up_to(std::size_t n) {
  CorpusConfig c;
  c.max_order = n;
  return generate_corpus(c);
}

}  // namespace

TEST(Connectivity, Examples) {
  TheoremVerdict c12 = check_connectivity_theorem(ctx_of("C12", cyclic_group(12)));
  EXPECT_EQ(c12.status, VerdictStatus::kHolds);
  EXPECT_TRUE(c12.witness["connected"].get<bool>());
  auto idx = c12.witness["indexes"].get<std::vector<std::size_t>>();
  std::sort(idx.begin(), idx.end());
  EXPECT_EQ(idx, (std::vector<std::size_t>{2, 3}));

  TheoremVerdict q8 = check_connectivity_theorem(ctx_of("Q8", cat(Family::kGeneralizedQuaternion, {8})));
  EXPECT_EQ(q8.status, VerdictStatus::kHolds);
  EXPECT_EQ(q8.witness["indexes"].get<std::vector<std::size_t>>(), (std::vector<std::size_t>{2, 2}));

  TheoremVerdict s4 = check_connectivity_theorem(ctx_of("S4", fixtures::s4()));
  EXPECT_EQ(s4.status, VerdictStatus::kHolds);
  EXPECT_FALSE(s4.witness["no_isolated"].get<bool>());
  EXPECT_FALSE(s4.witness["connected"].get<bool>());
  EXPECT_FALSE(s4.witness["frattini_condition"].get<bool>());
  EXPECT_TRUE(s4.witness.contains("isolated_example"));
}

TEST(Connectivity, FrattiniConditionFamilyIntersectsInPhi) {
  for (const CorpusEntry& e : corpus_up_to(48)) {
    SubgroupLattice l = enumerate_subgroups(e.group);
    auto family = frattini_condition_witness(l);
    if (!family) continue;
    Bitset meet = l[l.whole_id()].members();
    for (SubgroupId id : *family) {
      EXPECT_TRUE(l.is_maximal(id)) << e.name;
      meet &= l[id].members();
    }
    EXPECT_EQ(meet, l[l.frattini_id()].members()) << e.name;
  }
}

TEST(Connectivity, AgreesWithFirstPrinciplesConnectivity) {
  for (const CorpusEntry& e : corpus_up_to(32)) {
    TheoremVerdict v = check_connectivity_theorem(ctx_of(e.name, e.group));
    EXPECT_EQ(v.status, VerdictStatus::kHolds) << e.name << ": " << v.reason;
    EXPECT_EQ(v.witness["connected"].get<bool>(), oracle_connected(oracle::factorization_graph(e.group)))
        << e.name;
  }
}

TEST(Bipartite, Examples) {
  TheoremVerdict c6 = check_bipartite_theorem(ctx_of("C6", cyclic_group(6)));
  EXPECT_EQ(c6.status, VerdictStatus::kHolds);
  EXPECT_TRUE(c6.witness["complete_bipartite"].get<bool>());
  EXPECT_FALSE(c6.witness["families"].empty());

  TheoremVerdict d10 = check_bipartite_theorem(ctx_of("D10", cat(Family::kDihedral, {10})));
  EXPECT_EQ(d10.status, VerdictStatus::kHolds);
  EXPECT_TRUE(d10.witness["complete_bipartite"].get<bool>());
  auto parts = d10.witness["parts"];
  std::vector<std::size_t> sizes{parts[0].size(), parts[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 5}));

  TheoremVerdict q8 = check_bipartite_theorem(ctx_of("Q8", cat(Family::kGeneralizedQuaternion, {8})));
  EXPECT_EQ(q8.status, VerdictStatus::kHolds);
  EXPECT_FALSE(q8.witness["bipartite"].get<bool>());
  EXPECT_EQ(q8.witness["odd_cycle"].size(), 3u);
  EXPECT_TRUE(q8.witness["families"].empty());

  TheoremVerdict c8 = check_bipartite_theorem(ctx_of("C8", cyclic_group(8)));
  EXPECT_TRUE(c8.witness.contains("note"));
}

TEST(K14, Examples) {
  TheoremVerdict c44 = check_k14_theorem(abelian({4, 4}));
  EXPECT_EQ(c44.status, VerdictStatus::kHolds);
  EXPECT_TRUE(c44.witness["free"].get<bool>());

  TheoremVerdict g1 = check_k14_theorem(ctx_of("G1", cat(Family::kG1)));
  EXPECT_EQ(g1.status, VerdictStatus::kHolds);
  EXPECT_FALSE(g1.witness["free"].get<bool>());
  EXPECT_EQ(g1.witness["induced"].size(), 5u);

  TheoremVerdict k3 = check_k14_theorem(ctx_of("K14(3)", cat(Family::kK14Family, {3})));
  EXPECT_EQ(k3.status, VerdictStatus::kHolds);
  EXPECT_TRUE(k3.witness["free"].get<bool>());
  EXPECT_EQ(k3.witness["case"], "non-nilpotent");

  TheoremVerdict c8 = check_k14_theorem(ctx_of("C8", cyclic_group(8)));
  EXPECT_EQ(c8.status, VerdictStatus::kSkipped);
  EXPECT_EQ(c8.reason, "not factorizable");
}

TEST(K14, InducedStarAgreesWithTheOracle) {
  for (const CorpusEntry& e : corpus_up_to(32)) {
    GroupContext ctx = ctx_of(e.name, e.group);
    TheoremVerdict v = check_k14_theorem(ctx);
    if (v.status == VerdictStatus::kSkipped) continue;
    oracle::Graph o = oracle::factorization_graph(e.group);
    EXPECT_EQ(v.witness["free"].get<bool>(), oracle::induced_star(o.adj, 4).empty()) << e.name;
  }
}

TEST(Claw, Examples) {
  TheoremVerdict q8 = check_claw_corollary(ctx_of("Q8", cat(Family::kGeneralizedQuaternion, {8})));
  EXPECT_EQ(q8.status, VerdictStatus::kHolds);
  EXPECT_TRUE(q8.witness["free"].get<bool>());

  GroupTable c24 = cyclic_group(24);
  TheoremVerdict v24 = check_claw_corollary(ctx_of("C24", c24));
  EXPECT_EQ(v24.status, VerdictStatus::kHolds);
  EXPECT_FALSE(v24.witness["free"].get<bool>());
  EXPECT_FALSE(oracle::induced_star(oracle::factorization_graph(c24).adj, 3).empty());

  TheoremVerdict c30 = check_claw_corollary(ctx_of("C30", cyclic_group(30)));
  EXPECT_EQ(c30.status, VerdictStatus::kHolds);
  EXPECT_TRUE(c30.witness["free"].get<bool>());
}

// The listed family C_p x C2 x C2 contains groups whose graphs do have an
// induced claw. The checker reports a failure, and the oracle confirms it.
TEST(Claw, CpTimesKleinHasAnInducedClaw) {
  for (long long p : {3, 5, 7}) {
    GroupTable g = cat(Family::kAbelianOfType, {p, 2, 2});
    GroupContext ctx = ctx_of("CpxC2xC2", g);
    EXPECT_TRUE(match_cp_times_klein(ctx).has_value()) << p;
    TheoremVerdict v = check_claw_corollary(ctx);
    EXPECT_EQ(v.status, VerdictStatus::kFails) << p;
    EXPECT_EQ(v.reason, "listed family with an induced " + Pattern::claw().name);

    oracle::Graph o = oracle::factorization_graph(g);
    std::vector<std::size_t> star = oracle::induced_star(o.adj, 3);
    ASSERT_EQ(star.size(), 4u) << p;
    for (std::size_t leaf = 1; leaf < 4; ++leaf) {
      EXPECT_EQ(oracle::product(g, o.vertices[star[0]], o.vertices[star[leaf]]).size(), g.order());
    }
  }
}

TEST(Claw, InducedClawAgreesWithTheOracle) {
  for (const CorpusEntry& e : corpus_up_to(32)) {
    TheoremVerdict v = check_claw_corollary(ctx_of(e.name, e.group));
    if (v.status == VerdictStatus::kSkipped) continue;
    oracle::Graph o = oracle::factorization_graph(e.group);
    EXPECT_EQ(v.witness["free"].get<bool>(), oracle::induced_star(o.adj, 3).empty()) << e.name;
  }
}

TEST(SquareLemma, FourPrimeCyclicAndMixedAbelian) {
  for (std::vector<long long> type : {std::vector<long long>{210}, std::vector<long long>{2, 2, 3, 5}}) {
    GroupContext ctx = abelian(type);
    std::vector<SubgroupId> decomposition = abelian_primary_decomposition(ctx);
    EXPECT_EQ(decomposition.size(), 4u);
    TheoremVerdict v = check_square_lemma(ctx, decomposition);
    EXPECT_EQ(v.status, VerdictStatus::kHolds) << v.reason;
    EXPECT_TRUE(v.witness["explicit_square_induced"].get<bool>());
    EXPECT_TRUE(oracle::has_induced_square(oracle::factorization_graph(ctx.group).adj));
  }
}

TEST(SquareLemma, SkipsWhenHypothesesFail) {
  GroupContext s4 = ctx_of("S4", fixtures::s4());
  EXPECT_TRUE(abelian_primary_decomposition(s4).empty());
  EXPECT_EQ(check_square_lemma(s4, {}).status, VerdictStatus::kSkipped);

  GroupContext c30 = abelian({30});
  TheoremVerdict short_family = check_square_lemma(c30, abelian_primary_decomposition(c30));
  EXPECT_EQ(short_family.status, VerdictStatus::kSkipped);
  EXPECT_EQ(short_family.reason, "fewer than four factors");
}

TEST(SquareFree, ListedInstances) {
  std::vector<std::pair<std::string, GroupTable>> cases = {
      {"C30", cyclic_group(30)},
      {"C24", cyclic_group(24)},
      {"Q8xC3", direct_product(cat(Family::kGeneralizedQuaternion, {8}), cyclic_group(3))},
      {"C3xC3xC5", cat(Family::kAbelianOfType, {3, 3, 5})},
      {"S3", cat(Family::kSymmetric, {3})},
      {"A4", cat(Family::kAlternating, {4})},
      {"C2^3", cat(Family::kAbelianOfType, {2, 2, 2})},
      {"D8", cat(Family::kDihedral, {8})},
      {"Q16", cat(Family::kGeneralizedQuaternion, {16})},
      {"M16", cat(Family::kModular, {16})},
      {"Frob21", cat(Family::kFrobenius, {7, 3})},
  };
  for (const auto& [name, g] : cases) {
    GroupContext ctx = ctx_of(name, g);
    TheoremVerdict v = check_squarefree_theorem(ctx);
    EXPECT_EQ(v.status, VerdictStatus::kHolds) << name << ": " << v.reason;
    EXPECT_TRUE(v.witness["square_free"].get<bool>()) << name;
    EXPECT_FALSE(square_free_families(ctx).empty()) << name;
    EXPECT_FALSE(oracle::has_induced_square(oracle::factorization_graph(g).adj)) << name;
  }
}

TEST(SquareFree, SearchAgreesWithTheOracle) {
  for (const CorpusEntry& e : corpus_up_to(32)) {
    TheoremVerdict v = check_squarefree_theorem(ctx_of(e.name, e.group));
    if (v.status == VerdictStatus::kSkipped) continue;
    EXPECT_EQ(v.witness["square_free"].get<bool>(),
              !oracle::has_induced_square(oracle::factorization_graph(e.group).adj))
        << e.name;
  }
}

TEST(SquareFree, ForwardDirectionHasNoFailuresUpToFortyEight) {
  for (const CorpusEntry& e : corpus_up_to(48)) {
    TheoremVerdict v = check_squarefree_theorem(ctx_of(e.name, e.group));
    if (v.witness.value("direction", "") == "forward") ADD_FAILURE() << e.name << ": " << v.reason;
  }
}

// G/Phi minimal Frobenius with a complement of composite order: the family
// matcher accepts it, yet the graph has an induced square. Dic12 is the
// smallest case.
TEST(SquareFree, ConverseFailsForCompositeComplements) {
  GroupTable dic12 = cat(Family::kK14Family, {2});
  GroupContext ctx = ctx_of("K14(2)", dic12);
  auto tag = match_frattini_by_minimal_frobenius(ctx);
  ASSERT_TRUE(tag.has_value());
  TheoremVerdict v = check_squarefree_theorem(ctx);
  EXPECT_EQ(v.status, VerdictStatus::kFails);
  EXPECT_EQ(v.witness["direction"], "converse");
  EXPECT_TRUE(oracle::has_induced_square(oracle::factorization_graph(dic12).adj));
}

TEST(PerfectBranch, DetectedOnA5TimesC2) {
  GroupContext ctx = ctx_of("A5xC2", direct_product(cat(Family::kAlternating, {5}), cyclic_group(2)));
  PerfectBranch b = perfect_branch(ctx);
  EXPECT_TRUE(b.detected);
  ASSERT_TRUE(b.subgroup.has_value());
  EXPECT_EQ(ctx.lattice[*b.subgroup].order(), 60u);

  EXPECT_FALSE(perfect_branch(ctx_of("S4", fixtures::s4())).detected);
}

TEST(Verdicts, JsonCarriesStatusAndWitness) {
  TheoremVerdict v = check_claw_corollary(abelian({3, 2, 2}));
  nlohmann::json j = verdict_to_json(v);
  EXPECT_EQ(j["status"], "fails");
  EXPECT_FALSE(j["witness"].empty());
  EXPECT_EQ(j["theorem"], theorem_name(TheoremId::kClawFree));
}

// Across the corpus, the converse failures of the Frattini/minimal-Frobenius
// family are exactly the matches whose Sylow subgroup for the complement
// prime q is larger than C_q.
TEST(SquareFree, ConverseFailuresAreTheNonPrimeSylowComplements) {
  std::size_t matches = 0, squares = 0;
  for (const CorpusEntry& e : corpus_up_to(64)) {
    GroupContext ctx = ctx_of(e.name, e.group);
    if (!ctx.factorizable()) continue;
    auto tag = match_frattini_by_minimal_frobenius(ctx);
    if (!tag) continue;
    ++matches;
    const long long q = tag->params[2];
    long long q_part = 1;
    for (std::size_t n = e.group.order(); n % q == 0; n /= q) q_part *= q;
    bool square = oracle::has_induced_square(oracle::factorization_graph(e.group).adj);
    squares += square;
    EXPECT_EQ(square, q_part > q) << e.name << " q=" << q << " |Sylow|=" << q_part;
  }
  EXPECT_GT(squares, 0u);
  EXPECT_GT(matches, squares);
}
