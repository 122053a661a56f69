#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgraph/factgraph.hpp"
#include "fgraph/isomorphism.hpp"
#include "fgraph/lattice.hpp"
#include "fgraph/structure.hpp"

namespace fgraph {

// Everything the theorem checkers need about one group, computed once.
struct GroupContext {
  std::string name;
  GroupTable group;
  SubgroupLattice lattice;
  FactorizationGraph graph;  // full kind
  GroupInvariants invariants;
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::size_t min_generators = 0;
  std::optional<std::pair<SubgroupId, SubgroupId>> factorization;

  bool factorizable() const { return factorization.has_value(); }
};

// Throws Error(kCapExceeded) when the lattice is out of range.
GroupContext make_context(std::string name, GroupTable group,
                          const LatticeLimits& limits = {});

// A named family with the parameters that matched.
struct FamilyTag {
  std::string tag;
  std::vector<long long> params;

  std::string to_string() const;
};

// --- family predicates ------------------------------------------------------

bool is_cyclic(const GroupTable& group);
// Order p^m (m >= 1) cyclic group: tag "Cpm" (p, m).
std::optional<FamilyTag> match_cyclic_prime_power(const GroupContext& ctx);
// Cyclic of order p^m q^n, both exponents bounded: tag "Cpmqn" (p, m, q, n).
std::optional<FamilyTag> match_cyclic_two_primes(const GroupContext& ctx,
                                                 long long max_exponent);
// Cyclic of order pqr: tag "Cpqr".
std::optional<FamilyTag> match_cyclic_three_primes(const GroupContext& ctx);
// <x,y : x^(p^m), y^(q^n), x^y = x^lam> with ord_{p^m}(lam) = q: tag
// "Metacyclic_pq" (p, m, q, n, lam). Decided by presentation matching.
std::optional<FamilyTag> match_metacyclic_pq(const GroupContext& ctx);
// Isomorphic to one of the named small groups or products listed below.
std::optional<FamilyTag> match_elementary_pp(const GroupContext& ctx);   // CpxCp
std::optional<FamilyTag> match_named(const GroupContext& ctx, const std::string& tag,
                                     const GroupTable& reference);
std::optional<FamilyTag> match_cp_times_q8(const GroupContext& ctx);      // p > 2
std::optional<FamilyTag> match_cp_times_klein(const GroupContext& ctx);   // p > 2
std::optional<FamilyTag> match_cp_cp_cq(const GroupContext& ctx);         // p != q
// <x,y : x^(2^n), y^3, y^x = y^-1, (x^2)^y = x^2>, 1 <= n <= max_n.
std::optional<FamilyTag> match_k14_family(const GroupContext& ctx, long long max_n);
// G / Phi(G) is a minimal Frobenius group. Params: |Phi|, kernel and
// complement orders in the quotient.
std::optional<FamilyTag> match_frattini_by_minimal_frobenius(const GroupContext& ctx);
// p-group with d(G) = 3 where <x,y> is maximal whenever <x,y,z> = G.
std::optional<FamilyTag> match_pgroup_three_generated(const GroupContext& ctx);
// Non-cyclic p-group with d(G) = 2 and cyclic Frattini subgroup.
std::optional<FamilyTag> match_pgroup_two_generated(const GroupContext& ctx);

// Family lists of the classification statements.
std::vector<FamilyTag> bipartite_families(const GroupContext& ctx);
std::vector<FamilyTag> k14_free_families(const GroupContext& ctx);
std::vector<FamilyTag> claw_free_families(const GroupContext& ctx);
std::vector<FamilyTag> square_free_families(const GroupContext& ctx);

// Unique normal maximal subgroup H with H perfect, the image of H in
// G/Phi(G) simple, and the two remaining side conditions.
struct PerfectBranch {
  bool detected = false;  // unique normal maximal subgroup that is perfect
  bool holds = false;     // every condition verified
  std::optional<SubgroupId> subgroup;
  nlohmann::json details;
};
PerfectBranch perfect_branch(const GroupContext& ctx, const LatticeLimits& limits = {});

// --- verdicts ---------------------------------------------------------------

enum class TheoremId {
  kConnectivity,  // no isolated vertex <=> connected <=> Frattini condition
  kBipartite,     // bipartite without isolated vertices <=> listed families
  kK14Free,
  kClawFree,
  kSquareLemma,
  kSquareFree,
};
const char* theorem_name(TheoremId id);

enum class VerdictStatus { kHolds, kFails, kSkipped };
const char* status_name(VerdictStatus status);

struct TheoremVerdict {
  TheoremId theorem = TheoremId::kConnectivity;
  std::string group;
  VerdictStatus status = VerdictStatus::kSkipped;
  std::string reason;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0.0;
};

nlohmann::json verdict_to_json(const TheoremVerdict& verdict);

// Frattini condition: maximal subgroups whose indexes are the lowest m primes
// of |G/Phi(G)| (with multiplicity), intersecting in Phi(G).
std::optional<std::vector<SubgroupId>> frattini_condition_witness(
    const SubgroupLattice& lattice);

TheoremVerdict check_connectivity_theorem(const GroupContext& ctx);
TheoremVerdict check_bipartite_theorem(const GroupContext& ctx);
TheoremVerdict check_k14_theorem(const GroupContext& ctx);
TheoremVerdict check_claw_corollary(const GroupContext& ctx);
TheoremVerdict check_square_lemma(const GroupContext& ctx,
                                  const std::vector<SubgroupId>& decomposition);
TheoremVerdict check_squarefree_theorem(const GroupContext& ctx,
                                        const LatticeLimits& limits = {});

// Cyclic subgroups on a minimal generating set of each Sylow subgroup of an
// abelian group: pairwise permuting, product G, no proper subfamily
// generating G. Empty for non-abelian groups.
std::vector<SubgroupId> abelian_primary_decomposition(const GroupContext& ctx);

}  // namespace fgraph
