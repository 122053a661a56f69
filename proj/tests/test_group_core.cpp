#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "fgraph/catalog.hpp"
#include "fgraph/constructions.hpp"
#include "fgraph/error.hpp"
#include "fgraph/isomorphism.hpp"
#include "fgraph/permutation.hpp"
#include "fgraph/structure.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fgraph;
using fixtures::cat;

namespace {

void expect_valid_table(const GroupTable& g) {
  std::vector<Elem> mul;
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) mul.push_back(g.mul(a, b));
  }
  EXPECT_EQ(find_table_violation(mul, g.order()), std::nullopt);
  for (Elem a = 0; a < g.order(); ++a) EXPECT_EQ(g.mul(a, g.inv(a)), 0u);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an fgraph::Error";
  return ErrorKind::kPrecondition;
}

}  // namespace

TEST(Permutations, ParsesCycleNotation) {
  EXPECT_EQ(parse_cycles("(1,2,3)(4,5)"), (std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}}));
  EXPECT_EQ(parse_cycles("(1 2 3)"), (std::vector<std::vector<int>>{{1, 2, 3}}));
  EXPECT_TRUE(parse_cycles("()").empty());
  Permutation p = permutation_from_cycles({{1, 2, 3}}, 4);
  EXPECT_EQ(p, (Permutation{1, 2, 0, 3}));
  EXPECT_EQ(cycle_string(p), "(1,2,3)");
}

TEST(Permutations, RejectsMalformedCycles) {
  EXPECT_EQ(kind_of([] { permutation_from_cycles({{1, 2, 1}}, 3); }), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { permutation_from_cycles({{1, 5}}, 4); }), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { parse_cycles("(1,2"); }), ErrorKind::kMalformedInput);
}

TEST(Permutations, ComposeAppliesLeftFactorFirst) {
  Permutation a = permutation_from_cycles({{1, 2}}, 3);
  Permutation b = permutation_from_cycles({{2, 3}}, 3);
  // 1 -a-> 2 -b-> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
  EXPECT_EQ(cycle_string(compose(a, b)), "(1,3,2)");
}

TEST(Permutations, ClosureOrdersAndLabels) {
  GroupTable c4 = fixtures::perms(4, {"(1,2,3,4)"});
  EXPECT_EQ(c4.order(), 4u);
  EXPECT_TRUE(c4.is_abelian());
  EXPECT_EQ(c4.label(0), "()");
  EXPECT_EQ(c4.label(1), "(1,2,3,4)");
  GroupTable s4 = fixtures::s4();
  EXPECT_EQ(s4.order(), 24u);
  EXPECT_FALSE(s4.is_abelian());
  expect_valid_table(s4);
}

TEST(Permutations, ClosureCapIsEnforced) {
  PermutationGenerators pg;
  pg.degree = 6;
  pg.generators = {permutation_from_cycles({{1, 2}}, 6),
                   permutation_from_cycles({{1, 2, 3, 4, 5, 6}}, 6)};
  Limits small;
  small.closure_cap = 100;
  EXPECT_EQ(kind_of([&] { group_from_permutations(pg, small); }), ErrorKind::kCapExceeded);
}

// Searches, for the frozen first generator, every fixed-point-free
// permutation of cycle type (4,4) for a partner generating a group of order
// 8 with a unique involution.
TEST(QuaternionFixture, SearchFindsTheFrozenPair) {
  Permutation a = permutation_from_cycles(parse_cycles(fixtures::kQ8A), 8);
  auto order_of = [](const Permutation& p) {
    Permutation id(p.size());
    std::iota(id.begin(), id.end(), 0u);
    std::size_t k = 1;
    for (Permutation q = p; q != id; q = compose(q, p)) ++k;
    return k;
  };
  auto small_closure = [](const std::vector<Permutation>& gens) {
    Permutation id(8);
    std::iota(id.begin(), id.end(), 0u);
    std::set<Permutation> seen{id};
    std::vector<Permutation> frontier{id};
    while (!frontier.empty() && seen.size() <= 8) {
      std::vector<Permutation> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          Permutation y = compose(x, g);
          if (seen.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
    return seen;
  };
  std::vector<std::string> hits;
  Permutation b(8);
  std::iota(b.begin(), b.end(), 0u);
  do {
    bool fixed_point_free = true;
    for (std::uint32_t i = 0; i < 8; ++i) fixed_point_free &= b[i] != i;
    // A unique involution forces b^2 = a^2.
    if (!fixed_point_free || order_of(b) != 4 || compose(b, b) != compose(a, a)) continue;
    auto group = small_closure({a, b});
    if (group.size() != 8) continue;
    std::size_t involutions = 0;
    for (const auto& g : group) involutions += order_of(g) == 2;
    if (involutions == 1) hits.push_back(cycle_string(b));
  } while (std::next_permutation(b.begin(), b.end()));

  ASSERT_FALSE(hits.empty());
  EXPECT_NE(std::find(hits.begin(), hits.end(), std::string(fixtures::kQ8B)), hits.end());

  GroupTable q8 = fixtures::q8_permutations();
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(oracle::count_of_order(q8, 2), 1u);
  EXPECT_TRUE(are_isomorphic(q8, cat(Family::kGeneralizedQuaternion, {8})));
}

TEST(QuaternionFixture, SuggestedPairIsNotQuaternion) {
  GroupTable g = fixtures::perms(8, {"(1,2,4,7)(3,6,8,5)", "(3,4,5,6)(1,8,2,7)"});
  bool quaternion = g.order() == 8 && oracle::count_of_order(g, 2) == 1;
  EXPECT_FALSE(quaternion);
}

TEST(CayleyTables, ValidationNamesTheFirstViolation) {
  std::vector<Elem> repeated = {0, 1, 2, 3, 1, 1, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  auto v = find_table_violation(repeated, 4);
  ASSERT_TRUE(v.has_value());
  EXPECT_NE(v->find("non-Latin row 1"), std::string::npos);

  // A loop of order 5 with an element of order 2 cannot be a group.
  std::vector<Elem> loop = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3,
                            3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  auto w = find_table_violation(loop, 5);
  ASSERT_TRUE(w.has_value());
  EXPECT_NE(w->find("associativity"), std::string::npos);

  EXPECT_EQ(kind_of([&] { GroupTable::from_cayley(loop, 5, {}, {"table", "test"}); }),
            ErrorKind::kValidation);

  std::vector<Elem> shifted = {1, 0, 0, 1};
  auto s = find_table_violation(shifted, 2);
  ASSERT_TRUE(s.has_value());
}

TEST(CayleyTables, EveryCatalogTableIsValid) {
  for (const CatalogSpec& spec : std::vector<CatalogSpec>{
           {Family::kCyclic, {12}},
           {Family::kElementaryAbelian, {3, 2}},
           {Family::kAbelianOfType, {4, 2}},
           {Family::kDihedral, {10}},
           {Family::kGeneralizedQuaternion, {16}},
           {Family::kSemiDihedral, {16}},
           {Family::kModular, {16}},
           {Family::kMetacyclic, {5, 1, 2, 1, 4}},
           {Family::kK14Family, {2}},
           {Family::kG1, {}},
           {Family::kG2, {}},
           {Family::kG3, {}},
           {Family::kG4, {}},
           {Family::kSymmetric, {4}},
           {Family::kAlternating, {5}},
           {Family::kFrobenius, {7, 3}},
       }) {
    SCOPED_TRACE(catalog_name(spec));
    GroupTable g = catalog_group(spec);
    EXPECT_EQ(g.order(), catalog_order(spec));
    expect_valid_table(g);
  }
}

TEST(DirectProduct, TrivialFactorKeepsTheTable) {
  GroupTable s4 = fixtures::s4();
  GroupTable p = direct_product(cyclic_group(1), s4);
  EXPECT_TRUE(p.same_table(s4));
}

TEST(DirectProduct, SmallAbelianProduct) {
  GroupTable p = direct_product(cyclic_group(4), cyclic_group(2));
  EXPECT_EQ(p.order(), 8u);
  EXPECT_TRUE(p.is_abelian());
  EXPECT_EQ(exponent(p), 4u);
  // (a, b) has index a * |B| + b.
  EXPECT_EQ(p.mul(1 * 2 + 1, 3 * 2 + 1), 0 * 2 + 0);
}

TEST(DirectProduct, C3TimesQ8CenterByBruteForce) {
  GroupTable p = direct_product(cyclic_group(3), cat(Family::kGeneralizedQuaternion, {8}));
  EXPECT_EQ(p.order(), 24u);
  EXPECT_TRUE(structure_probe(p).is_nilpotent);
  EXPECT_EQ(oracle::center(p).size(), 6u);
  EXPECT_EQ(center(p).order(), 6u);
}

TEST(DirectProduct, IsAssociativeUnderTheIndexScheme) {
  GroupTable a = cyclic_group(2);
  GroupTable b = fixtures::perms(3, {"(1,2)", "(1,2,3)"});
  GroupTable c = cyclic_group(3);
  GroupTable left = direct_product(direct_product(a, b), c);
  GroupTable right = direct_product(a, direct_product(b, c));
  EXPECT_TRUE(left.same_table(right));
}

TEST(SemidirectProduct, TrivialActionIsTheDirectProduct) {
  GroupTable n = cyclic_group(5);
  GroupTable h = cyclic_group(4);
  std::vector<Elem> id(5);
  std::iota(id.begin(), id.end(), Elem{0});
  std::vector<std::vector<Elem>> action(4, id);
  EXPECT_TRUE(semidirect_product(n, h, action).same_table(direct_product(n, h)));
}

TEST(SemidirectProduct, SevenByThree) {
  GroupTable n = cyclic_group(7);
  GroupTable h = cyclic_group(3);
  std::vector<std::vector<Elem>> action(3, std::vector<Elem>(7));
  for (Elem k = 0; k < 3; ++k) {
    long long m = 1;
    for (Elem j = 0; j < k; ++j) m = m * 2 % 7;
    for (Elem i = 0; i < 7; ++i) action[k][i] = static_cast<Elem>(i * m % 7);
  }
  GroupTable g = semidirect_product(n, h, action);
  EXPECT_EQ(g.order(), 21u);
  EXPECT_FALSE(g.is_abelian());
  EXPECT_EQ(oracle::center(g).size(), 1u);
}

TEST(SemidirectProduct, FiveByFourDerivedSubgroup) {
  GroupTable n = cyclic_group(5);
  GroupTable h = cyclic_group(4);
  auto action = extend_action(h, {1}, {{0, 2, 4, 1, 3}});
  GroupTable g = semidirect_product(n, h, action);
  EXPECT_EQ(g.order(), 20u);
  EXPECT_EQ(oracle::derived(g).size(), 5u);
  EXPECT_EQ(derived_subgroup(g).order(), 5u);
}

TEST(SemidirectProduct, RejectsBadActions) {
  GroupTable n = cyclic_group(5);
  GroupTable h = cyclic_group(2);
  // Not an automorphism of C5.
  std::vector<std::vector<Elem>> bad = {{0, 1, 2, 3, 4}, {0, 2, 1, 3, 4}};
  EXPECT_EQ(kind_of([&] { semidirect_product(n, h, bad); }), ErrorKind::kValidation);
  // x -> x^2 has order 4, so it cannot be the image of an involution.
  std::vector<std::vector<Elem>> not_hom = {{0, 1, 2, 3, 4}, {0, 2, 4, 1, 3}};
  EXPECT_EQ(kind_of([&] { semidirect_product(n, h, not_hom); }), ErrorKind::kValidation);
}

TEST(Quotient, ByTrivialSubgroup) {
  GroupTable s4 = fixtures::s4();
  QuotientGroup q = quotient_group(s4, Subgroup::trivial(s4));
  EXPECT_EQ(q.table.order(), 24u);
  EXPECT_TRUE(are_isomorphic(q.table, s4));
  for (Elem x = 0; x < 24; ++x) EXPECT_EQ(q.projection[x], x);
}

TEST(Quotient, QuaternionModCenterIsKlein) {
  GroupTable q8 = cat(Family::kGeneralizedQuaternion, {8});
  QuotientGroup q = quotient_group(q8, center(q8));
  EXPECT_EQ(q.table.order(), 4u);
  EXPECT_EQ(exponent(q.table), 2u);
  EXPECT_EQ(oracle::count_of_order(q.table, 2), 3u);
}

TEST(Quotient, S4ModKleinIsS3) {
  GroupTable s4 = fixtures::s4();
  auto series = derived_series(s4);
  ASSERT_GE(series.size(), 3u);
  const Subgroup& v4 = series[2];
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(oracle::derived(subgroup_table(series[1]).table).size(), 4u);
  QuotientGroup q = quotient_group(s4, v4);
  EXPECT_EQ(q.table.order(), 6u);
  EXPECT_FALSE(q.table.is_abelian());
}

TEST(Quotient, RejectsNonNormalSubgroups) {
  GroupTable s4 = fixtures::s4();
  Elem t = fixtures::element(s4, "(1,2)");
  EXPECT_EQ(kind_of([&] { quotient_group(s4, Subgroup::generated(s4, std::vector<Elem>{t})); }),
            ErrorKind::kNotNormal);
}

TEST(Catalog, QuaternionHasAUniqueInvolution) {
  GroupTable q8 = cat(Family::kGeneralizedQuaternion, {8});
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(oracle::count_of_order(q8, 2), 1u);
}

TEST(Catalog, K14FamilyOrderTwentyFour) {
  GroupTable g = cat(Family::kK14Family, {3});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_FALSE(g.is_abelian());
  // Normal Sylow-3 subgroup: exactly one subgroup of order 3.
  EXPECT_EQ(oracle::count_of_order(g, 3), 2u);
}

TEST(Catalog, G3HasOrderSixteen) {
  EXPECT_EQ(cat(Family::kG3).order(), 16u);
  EXPECT_EQ(catalog_name({Family::kG3, {}}), "G3");
}

TEST(Catalog, RejectsInvalidParameters) {
  EXPECT_EQ(kind_of([] { catalog_group({Family::kMetacyclic, {5, 1, 2, 1, 3}}); }),
            ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { catalog_group({Family::kDihedral, {7}}); }), ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { catalog_group({Family::kGeneralizedQuaternion, {12}}); }),
            ErrorKind::kInvalidParameter);
  EXPECT_EQ(kind_of([] { catalog_group({Family::kFrobenius, {7, 4}}); }),
            ErrorKind::kInvalidParameter);
}

TEST(Catalog, PermutationAndPresentationRealizationsAgree) {
  GroupTable s3 = fixtures::perms(3, {"(1,2)", "(1,2,3)"});
  EXPECT_TRUE(are_isomorphic(cat(Family::kDihedral, {6}), s3));
  EXPECT_TRUE(are_isomorphic(cat(Family::kSymmetric, {3}), s3));
  EXPECT_TRUE(are_isomorphic(cat(Family::kMetacyclic, {5, 1, 2, 1, 4}), cat(Family::kDihedral, {10})));
  EXPECT_TRUE(are_isomorphic(cat(Family::kFrobenius, {2, 3, 2}), cat(Family::kAlternating, {4})));
}

TEST(Structure, CyclicSix) {
  StructureSummary s = structure_probe(cyclic_group(6));
  EXPECT_TRUE(s.is_abelian);
  EXPECT_TRUE(s.is_nilpotent);
  EXPECT_TRUE(s.is_solvable);
  EXPECT_EQ(s.min_generators, 1u);
  EXPECT_EQ(s.order_factorization, (std::vector<std::size_t>{2, 3}));
}

TEST(Structure, SymmetricFour) {
  GroupTable s4 = fixtures::s4();
  StructureSummary s = structure_probe(s4);
  EXPECT_TRUE(s.is_solvable);
  EXPECT_FALSE(s.is_nilpotent);
  EXPECT_EQ(s.min_generators, 2u);
  EXPECT_EQ(s.derived.order(), 12u);
  EXPECT_EQ(oracle::derived(s4).size(), 12u);
}

TEST(Structure, AlternatingFive) {
  StructureSummary s = structure_probe(cat(Family::kAlternating, {5}));
  EXPECT_FALSE(s.is_solvable);
  EXPECT_TRUE(s.is_perfect);
  EXPECT_EQ(s.derived.order(), 60u);
  EXPECT_EQ(s.min_generators, 2u);
}

TEST(Structure, TrivialGroupHasNoGenerators) {
  StructureSummary s = structure_probe(cyclic_group(1));
  EXPECT_EQ(s.min_generators, 0u);
  EXPECT_TRUE(s.is_perfect);
}

TEST(Structure, ImplicationChainOnCatalogGroups) {
  for (GroupTable g : {cat(Family::kDihedral, {8}), cat(Family::kAlternating, {5}),
                       cat(Family::kK14Family, {2}), cyclic_group(9), cat(Family::kG1)}) {
    StructureSummary s = structure_probe(g);
    if (s.is_abelian) {
      EXPECT_TRUE(s.is_nilpotent);
    }
    if (s.is_nilpotent) {
      EXPECT_TRUE(s.is_solvable);
    }
    if (s.is_perfect) {
      EXPECT_EQ(s.derived.order(), g.order());
    }
    EXPECT_EQ(oracle::closure(g, {s.minimal_generating_set.begin(), s.minimal_generating_set.end()})
                  .size(),
              g.order());
  }
}

TEST(Structure, PrimeHelpers) {
  EXPECT_EQ(prime_factors(60), (std::vector<std::size_t>{2, 2, 3, 5}));
  EXPECT_EQ(distinct_primes(60), (std::vector<std::size_t>{2, 3, 5}));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(prime_power_base(27), 3u);
  EXPECT_EQ(prime_power_base(12), 0u);
  EXPECT_EQ(prime_power_base(1), 0u);
}
