#include <gtest/gtest.h>

#include "cycle_fixtures.hpp"
#include "forest_cycles/forest_cycling.hpp"
#include "forest_cycles/tau.hpp"
#include "forest_cycles/generators.hpp"

using namespace forest_cycles;
using namespace forest_cycles::props;

namespace {

TreeNode L(const std::string& x) { return TreeNode::leaf(deco(x)); }
TreeNode N(std::vector<TreeNode> kids) { return TreeNode::internal(std::move(kids)); }

Tree double_log() { return Tree(Deco::unit(), N({L("x1"), L("x2")})); }

CycleSum S(const RawCoords& raw) { return cycle_sum(raw); }

}  // namespace

TEST(PhiTree, DoubleLog) {
  EXPECT_EQ(phi_tree_raw(double_log()), z2());
  EXPECT_EQ(phi(double_log()), S(z2()));
}

TEST(PhiTree, SingleEdge) {
  EXPECT_EQ(phi_tree_raw(Tree::edge(Deco::unit(), deco("x1"))), (RawCoords{om(std::nullopt, c("x1"))}));
}

TEST(PhiTree, DecoratedRoot) {
  EXPECT_EQ(phi_tree_raw(Tree::edge(deco("x1"), deco("x2"))), (RawCoords{om(c("x1"), c("x2"))}));
}

TEST(PhiTree, TripleLogSum) {
  const Sym t = p(0), u = p(1);
  CycleSum expected = S({om(std::nullopt, t), om(t, c("x1")), om(t, u), om(u, c("x2")), om(u, c("x3"))}) +
                      S({om(std::nullopt, t), om(t, u), om(u, c("x1")), om(u, c("x2")), om(t, c("x3"))});
  EXPECT_EQ(phi(tau(TauSpec::standard(3))), expected);
}

TEST(Phi, EmptyForestIsTheUnit) { EXPECT_EQ(phi(forest_unit()), cycle_unit()); }

TEST(Phi, TauOfTwo) { EXPECT_EQ(phi(tau(TauSpec::standard(2))), S(z2())); }

TEST(Phi, ProductGoesToConcatenation) {
  ForestGenerator gen(31, {"1", "a", "b", "c", "d", "e", "f", "g"});
  int checked = 0;
  for (int i = 0; i < 300 && checked < 60; ++i) {
    Tree a = gen.tree(5);
    Tree b = gen.tree(5);
    if (!is_generic(a) || !is_generic(b)) continue;
    EXPECT_EQ(phi(star(tree_sum(a), tree_sum(b))), concat(phi(a), phi(b))) << i;
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(ChainMap, DoubleLogBothSides) {
  auto rep = verify_chain_map(double_log());
  EXPECT_TRUE(rep.holds);
  CycleSum expected = S({om(std::nullopt, c("x1")), om(std::nullopt, c("x2"))}) -
                      S({om(std::nullopt, c("x1")), om(c("x1"), c("x2"))}) +
                      S({om(std::nullopt, c("x2")), om(c("x2"), c("x1"))});
  EXPECT_EQ(rep.phi_d, expected);
  EXPECT_EQ(rep.d_phi, expected);
}

TEST(ChainMap, SingleEdgeBothZero) {
  auto rep = verify_chain_map(Tree::edge(Deco::unit(), deco("x1")));
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.phi_d.is_zero());
  EXPECT_TRUE(rep.d_phi.is_zero());
}

TEST(ChainMap, AllTauTreesUpToFive) {
  for (std::size_t m = 2; m <= 5; ++m) {
    for (const auto& t : tau_trees(TauSpec::standard(m))) {
      auto rep = verify_chain_map(t);
      EXPECT_TRUE(rep.holds) << m << " " << rep.error;
      EXPECT_TRUE(rep.generic);
    }
  }
}

TEST(ChainMap, WholeTauSum) {
  for (std::size_t m = 2; m <= 4; ++m) EXPECT_TRUE(verify_chain_map(tau(TauSpec::standard(m))).holds) << m;
}

TEST(ChainMap, RandomGenericTrees) {
  ForestGenerator gen(77, {"1", "a", "b", "c", "d", "e", "f", "g", "h", "i"});
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 100; ++i) {
    Tree t = gen.tree(9);
    if (!is_generic(t)) continue;
    auto rep = verify_chain_map(t);
    EXPECT_TRUE(rep.holds) << rep.error;
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(Bigrading, TauTrees) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (const auto& t : tau_trees(TauSpec::standard(m))) EXPECT_TRUE(check_bigrading(t).holds);
}

TEST(Admissibility, TauImagesUpToFour) {
  for (std::size_t m = 2; m <= 4; ++m) {
    for (const auto& [term, c] : phi(tau(TauSpec::standard(m)))) {
      auto rep = is_admissible(term);
      EXPECT_TRUE(rep.admissible) << m;
    }
  }
}

TEST(Admissibility, FaceChainsNeverDegenerate) {
  for (const auto& [term, c] : phi(tau(TauSpec::standard(3)))) EXPECT_TRUE(is_admissible(term).violations.empty());
}

TEST(Generic, NonGenericInputIsFlagged) {
  Tree t(Deco::unit(), N({L("x1"), L("x1")}));
  EXPECT_EQ(non_generic_terms(tree_sum(t)).size(), 1u);
  auto rep = verify_chain_map(t);
  EXPECT_FALSE(rep.generic);
}
