#include <gtest/gtest.h>

#include <map>

#include "fgraph/catalog.hpp"
#include "fgraph/constructions.hpp"
#include "fgraph/corpus.hpp"
#include "fgraph/error.hpp"
#include "fgraph/lattice.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fgraph;
using fixtures::cat;

namespace {

oracle::ElemSet as_set(const Subgroup& h) {
  oracle::ElemSet out;
  for (Elem x : h.elements()) out.push_back(x);
  return out;
}

SubgroupId by_generators(const SubgroupLattice& l, const std::vector<std::string>& labels) {
  std::vector<Elem> gens;
  for (const auto& s : labels) gens.push_back(fixtures::element(l.group(), s));
  return l.generated_by(gens);
}

}  // namespace

TEST(Lattice, CyclicSix) {
  SubgroupLattice l = enumerate_subgroups(cyclic_group(6));
  ASSERT_EQ(l.size(), 4u);
  std::vector<std::size_t> orders;
  for (const Subgroup& h : l.all()) orders.push_back(h.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(l.trivial_id(), 0u);
  EXPECT_EQ(l[l.whole_id()].order(), 6u);
  EXPECT_FALSE(l.is_proper(l.whole_id()));
}

TEST(Lattice, QuaternionEight) {
  SubgroupLattice l = enumerate_subgroups(cat(Family::kGeneralizedQuaternion, {8}));
  EXPECT_EQ(l.size(), 6u);
  EXPECT_EQ(l[l.frattini_id()].order(), 2u);
  EXPECT_EQ(l.maximal_ids().size(), 3u);
  for (SubgroupId id = 0; id < l.size(); ++id) EXPECT_TRUE(l.is_normal(id));
}

TEST(Lattice, S4MatchesTheBruteForceOracle) {
  GroupTable s4 = fixtures::s4();
  SubgroupLattice l = enumerate_subgroups(s4);
  std::set<oracle::ElemSet> expected = oracle::all_subgroups(s4);
  ASSERT_EQ(expected.size(), 30u);
  std::set<oracle::ElemSet> actual;
  for (const Subgroup& h : l.all()) actual.insert(as_set(h));
  EXPECT_EQ(actual, expected);

  std::map<std::size_t, int> maximal_orders;
  for (SubgroupId m : l.maximal_ids()) ++maximal_orders[l[m].order()];
  EXPECT_EQ(maximal_orders, (std::map<std::size_t, int>{{6, 4}, {8, 3}, {12, 1}}));
  EXPECT_EQ(l[l.frattini_id()].order(), 1u);
  EXPECT_EQ(oracle::frattini(s4, expected).size(), 1u);
}

TEST(Lattice, SortedByOrderThenMembers) {
  SubgroupLattice l = enumerate_subgroups(fixtures::s4());
  for (SubgroupId i = 1; i < l.size(); ++i) {
    const Subgroup& a = l[i - 1];
    const Subgroup& b = l[i];
    EXPECT_TRUE(a.order() < b.order() ||
                (a.order() == b.order() && Bitset::member_order_less(a.members(), b.members())));
  }
}

TEST(Frattini, Examples) {
  SubgroupLattice c12 = enumerate_subgroups(cyclic_group(12));
  EXPECT_EQ(frattini_subgroup(c12).order(), 2u);
  for (std::size_t p : {2u, 3u, 5u, 7u, 11u}) {
    EXPECT_EQ(frattini_subgroup(enumerate_subgroups(cyclic_group(p))).order(), 1u);
  }
  GroupTable q16 = cat(Family::kGeneralizedQuaternion, {16});
  SubgroupLattice l = enumerate_subgroups(q16);
  Subgroup phi = frattini_subgroup(l);
  EXPECT_EQ(phi.order(), 4u);
  bool cyclic = false;
  for (Elem x : phi.elements()) cyclic |= oracle::closure(q16, {x}).size() == 4;
  EXPECT_TRUE(cyclic);
  EXPECT_EQ(as_set(phi), oracle::frattini(q16, oracle::all_subgroups(q16)));
}

TEST(Frattini, TrivialGroupConvention) {
  SubgroupLattice l = enumerate_subgroups(cyclic_group(1));
  EXPECT_EQ(l.size(), 1u);
  EXPECT_TRUE(l.maximal_ids().empty());
  EXPECT_EQ(frattini_subgroup(l).order(), 1u);
}

TEST(ProductProfile, Examples) {
  GroupTable s4 = fixtures::s4();
  SubgroupLattice l = enumerate_subgroups(s4);
  const Subgroup& c4 = l[by_generators(l, {"(1,2,3,4)"})];
  const Subgroup& s3 = l[by_generators(l, {"(1,2)", "(1,2,3)"})];
  ProductProfile p = product_profile(c4, s3);
  EXPECT_EQ(p.intersection_order, 1u);
  EXPECT_EQ(p.product_size, 24u);
  EXPECT_TRUE(p.covers);
  EXPECT_EQ(product_set(c4, s3).count(), 24u);

  const Subgroup& v = l[by_generators(l, {"(1,2)(3,4)"})];
  const Subgroup& a4 = l[by_generators(l, {"(1,2,3)", "(1,2)(3,4)"})];
  ASSERT_EQ(a4.order(), 12u);
  ProductProfile q = product_profile(v, a4);
  EXPECT_EQ(q.intersection_order, 2u);
  EXPECT_EQ(q.product_size, 12u);
  EXPECT_FALSE(q.covers);
  EXPECT_EQ(product_set(v, a4).count(), 12u);

  ProductProfile self = product_profile(s3, s3);
  EXPECT_FALSE(self.covers);
  EXPECT_EQ(self.product_size, 6u);
  EXPECT_TRUE(self.permutes);
}

TEST(ProductProfile, PermutesComparesSetProducts) {
  GroupTable s3 = fixtures::perms(3, {"(1,2)", "(1,2,3)"});
  SubgroupLattice l = enumerate_subgroups(s3);
  const Subgroup& a = l[by_generators(l, {"(1,2)"})];
  const Subgroup& b = l[by_generators(l, {"(1,3)"})];
  ProductProfile p = product_profile(a, b);
  EXPECT_FALSE(p.permutes);
  EXPECT_EQ(p.product_size, 4u);
  const Subgroup& c3 = l[by_generators(l, {"(1,2,3)"})];
  EXPECT_TRUE(product_profile(a, c3).permutes);
}

TEST(ProductProfile, RejectsDifferentParents) {
  GroupTable a = cyclic_group(4);
  GroupTable b = cyclic_group(4);
  try {
    product_profile(Subgroup::whole(a), Subgroup::whole(b));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST(NormalStructure, Examples) {
  GroupTable s4 = fixtures::s4();
  SubgroupLattice l = enumerate_subgroups(s4);

  const Subgroup& a4 = l[by_generators(l, {"(1,2,3)", "(1,2)(3,4)"})];
  NormalStructure n = normal_structure(a4, l);
  EXPECT_TRUE(n.is_normal);
  EXPECT_EQ(n.conjugates.size(), 1u);
  EXPECT_EQ(n.core.order(), 12u);
  EXPECT_EQ(n.normalizer.order(), 24u);

  NormalStructure sylow3 = normal_structure(l[by_generators(l, {"(1,2,3)"})], l);
  EXPECT_FALSE(sylow3.is_normal);
  EXPECT_EQ(sylow3.conjugates.size(), 4u);
  EXPECT_EQ(sylow3.core.order(), 1u);
  EXPECT_EQ(sylow3.normalizer.order(), 6u);

  NormalStructure t = normal_structure(l[by_generators(l, {"(1,2)"})], l);
  EXPECT_EQ(t.conjugates.size(), 6u);
  EXPECT_EQ(t.normalizer, l[by_generators(l, {"(1,2)", "(3,4)"})]);
}

TEST(Factorizable, Examples) {
  EXPECT_FALSE(is_factorizable(enumerate_subgroups(cyclic_group(8))).factorizable);
  FactorizationWitness q8 = is_factorizable(enumerate_subgroups(cat(Family::kGeneralizedQuaternion, {8})));
  ASSERT_TRUE(q8.factorizable);
  SubgroupLattice a5 = enumerate_subgroups(cat(Family::kAlternating, {5}));
  FactorizationWitness w = is_factorizable(a5);
  ASSERT_TRUE(w.factorizable);
  ASSERT_TRUE(w.pair.has_value());
  EXPECT_TRUE(covers_group(a5[w.pair->first], a5[w.pair->second]));
}

TEST(Lattice, CapsFailFast) {
  try {
    enumerate_subgroups(cat(Family::kElementaryAbelian, {2, 7}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
  LatticeLimits tiny;
  tiny.subgroup_cap = 10;
  try {
    enumerate_subgroups(fixtures::s4(), tiny);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
  LatticeLimits raised;
  raised.two_power_order_cap = 128;
  EXPECT_EQ(enumerate_subgroups(cat(Family::kDihedral, {128}), raised)[0].order(), 1u);
}

// Structural invariants over every corpus group of order at most 48.
class LatticeInvariants : public ::testing::Test {
 protected:
  static std::vector<CorpusEntry> corpus() {
    CorpusConfig c;
    c.max_order = 48;
    return generate_corpus(c);
  }
};

TEST_F(LatticeInvariants, CompletenessFrattiniNormalityAndConjugacy) {
  for (const CorpusEntry& e : corpus()) {
    SCOPED_TRACE(e.name);
    const GroupTable& g = e.group;
    SubgroupLattice l = enumerate_subgroups(g);
    const Subgroup& phi = l[l.frattini_id()];
    for (SubgroupId m : l.maximal_ids()) EXPECT_TRUE(phi.is_contained_in(l[m]));
    for (SubgroupId id = 0; id < l.size(); ++id) {
      const Subgroup& h = l[id];
      std::vector<Elem> gens = l.generators_of(id);
      EXPECT_EQ(generated_set(g, gens), h.members());
      bool normal = true;
      for (Elem x = 0; x < g.order(); ++x) {
        SubgroupId c = l.conjugate(id, x);
        EXPECT_EQ(l.conjugacy_class(c), l.conjugacy_class(id));
        EXPECT_EQ(l[c].order(), h.order());
        normal &= c == id;
        std::vector<Elem> more = gens;
        more.push_back(x);
        EXPECT_TRUE(l.find(generated_set(g, more)).has_value());
      }
      EXPECT_EQ(l.is_normal(id), normal);
    }
  }
}

TEST_F(LatticeInvariants, IndexFormulaMatchesExplicitProducts) {
  for (const CorpusEntry& e : corpus()) {
    if (e.group.order() > 24) continue;
    SCOPED_TRACE(e.name);
    SubgroupLattice l = enumerate_subgroups(e.group);
    for (SubgroupId a = 0; a < l.size(); ++a) {
      for (SubgroupId b = a; b < l.size(); ++b) {
        ProductProfile p = product_profile(l[a], l[b]);
        EXPECT_EQ(p.product_size, product_set(l[a], l[b]).count());
        EXPECT_EQ(p.product_size * p.intersection_order, l[a].order() * l[b].order());
        EXPECT_EQ(p.covers, p.product_size == e.group.order());
      }
    }
  }
}

TEST_F(LatticeInvariants, FrattiniSubgroupsNeverCover) {
  for (const CorpusEntry& e : corpus()) {
    SubgroupLattice l = enumerate_subgroups(e.group);
    const Subgroup& phi = l[l.frattini_id()];
    for (SubgroupId h = 0; h < l.size(); ++h) {
      if (!l[h].is_contained_in(phi)) continue;
      for (SubgroupId k = 0; k < l.whole_id(); ++k) EXPECT_FALSE(covers_group(l[h], l[k])) << e.name;
    }
  }
}
