#include <gtest/gtest.h>

#include <random>

#include "cycle_fixtures.hpp"
#include "forest_cycles/hybrid.hpp"

using namespace forest_cycles;
using namespace forest_cycles::props;

namespace {

Sym s(int i) { return Sym::topological(i); }

HybridSum H(const RawCoords& raw, int r, int coeff = 1) { return hybrid_sum(raw, r, Rational(coeff)); }

HybridTerm T(const RawCoords& raw, int r) { return HybridTerm{raw, r}; }

// Random hybrid term: coordinates 1 - a/b over the unit, constants, two
// parameters and s_1..s_r, with every s appearing.
RawCoords random_hybrid(std::mt19937& rng, int r) {
  std::vector<std::optional<Sym>> pool{std::nullopt, c("a"), c("b"), c("c"), p(0), p(1)};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> extra(0, 2);
  RawCoords out;
  for (int k = 1; k <= r; ++k) {
    std::optional<Sym> other = pool[pick(rng)];
    out.push_back(om(s(k), other));
  }
  int n = extra(rng);
  while (n > 0) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    out.push_back(om(pool[i], pool[j]));
    --n;
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

TEST(Delta, TwoSimplex) {
  HybridTerm t = T({om(s(1), c("x1")), om(s(2), c("x2"))}, 2);
  HybridSum expected = -H({om(s(1), c("x1")), om(s(1), c("x2"))}, 1) + H({om(s(1), c("x1")), om(std::nullopt, c("x2"))}, 1);
  EXPECT_EQ(delta(t), expected);
}

TEST(Delta, RestrictionsOfTheDoubleLogChainHead) {
  HybridTerm t = T({om(s(1), p(0)), om(p(0), c("x1")), om(p(0), c("x2"))}, 1);
  // s_1 = 0 is empty, s_1 = 1 is the double-log cycle with sign (-1)^1.
  EXPECT_EQ(delta(t), -H(z2(), 0));
}

TEST(Delta, AlgebraicTermIsClosed) { EXPECT_TRUE(delta(T(z2(), 0)).is_zero()); }

TEST(Delta, SquareVanishes) {
  std::mt19937 rng(8);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    std::uniform_int_distribution<int> rdist(1, 4);
    int r = rdist(rng);
    HybridSum h = H(random_hybrid(rng, r), r);
    try {
      EXPECT_TRUE(delta(delta(h)).is_zero()) << i;
      ++checked;
    } catch (const UnsupportedClass&) {
    }
  }
  EXPECT_GE(checked, 300);
}

TEST(D, AlgebraicSumIsBoundary) {
  HybridSum z = H(z2(), 0);
  EXPECT_EQ(D(z), boundary(z));
}

TEST(D, SquareVanishesOnFixtures) {
  EXPECT_TRUE(D(D(fixtures::double_log_chain())).is_zero());
  EXPECT_TRUE(D(D(fixtures::triple_log_chain())).is_zero());
}

TEST(D, SquareVanishesOnRandomTerms) {
  std::mt19937 rng(21);
  int checked = 0;
  for (int i = 0; i < 1500 && checked < 150; ++i) {
    std::uniform_int_distribution<int> rdist(1, 3);
    int r = rdist(rng);
    HybridSum h = H(random_hybrid(rng, r), r);
    if (h.is_zero()) continue;
    try {
      HybridSum dh = D(h);
      EXPECT_TRUE(D(dh).is_zero()) << i;
      ++checked;
    } catch (const UnsupportedClass&) {
    } catch (const ImproperFace&) {
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Negligible, Examples) {
  EXPECT_TRUE(is_negligible(T({om(s(1), c("x1")), om(c("x1"), c("x2"))}, 1)));
  EXPECT_TRUE(is_negligible(T({om(s(1), c("x1")), om(std::nullopt, c("x2"))}, 1)));
  EXPECT_FALSE(is_negligible(T({om(s(1), c("x1")), om(s(2), c("x2"))}, 2)));
  EXPECT_FALSE(is_negligible(T(z2(), 0)));
}

TEST(Negligible, DecomposableBlocks) {
  // a topological factor times an algebraic cycle in disjoint variables
  HybridTerm t = T({om(s(1), c("x3")), om(std::nullopt, p(0)), om(p(0), c("x1")), om(p(0), c("x2"))}, 1);
  EXPECT_EQ(variable_blocks(t), 2u);
  EXPECT_EQ(negligible_reason(t), NegligibleReason::Decomposable);
  HybridTerm linked = T({om(s(1), p(0)), om(p(0), c("x1")), om(p(0), c("x2"))}, 1);
  EXPECT_EQ(variable_blocks(linked), 1u);
  EXPECT_FALSE(is_negligible(linked));
}

TEST(Negligible, StableUnderMergingRestrictions) {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    std::uniform_int_distribution<int> rdist(2, 4);
    int r = rdist(rng);
    HybridSum h = H(random_hybrid(rng, r), r);
    for (const auto& [t, coeff] : h) {
      if (!is_negligible(t)) continue;
      for (int k = 1; k < t.topo_dim; ++k) {
        auto raw = detail::restrict_simplex(t, k);
        if (!raw) continue;
        auto n = normalize(*raw, t.topo_dim - 1);
        if (n) {
          EXPECT_TRUE(is_negligible(n->term));
        }
      }
    }
  }
}

TEST(Bounding, DoubleLog) {
  auto rep = verify_bounding(fixtures::double_log_chain(), fixtures::double_log_target());
  EXPECT_TRUE(rep.passes) << rep.error;
  EXPECT_TRUE(rep.essential_residual.is_zero());
  // two faces of the first term where s1 meets x1 or x2, and the s2 = 1 restriction
  EXPECT_EQ(rep.negligible_residual.size(), 3u);
  for (const auto& [t, c] : rep.negligible_residual) EXPECT_EQ(negligible_reason(t), NegligibleReason::ConstantCoordinate);
  EXPECT_TRUE(rep.dd_chain.is_zero());
}

TEST(Bounding, TripleLog) {
  auto rep = verify_bounding(fixtures::triple_log_chain(), fixtures::triple_log_target());
  EXPECT_TRUE(rep.passes) << rep.error;
  EXPECT_TRUE(rep.essential_residual.is_zero());
  EXPECT_TRUE(rep.dd_chain.is_zero());
  for (const auto& [t, c] : rep.negligible_residual) EXPECT_GE(t.topo_dim, 1);
}

TEST(Bounding, WrongTargetFails) {
  auto rep = verify_bounding(fixtures::triple_log_chain(), -fixtures::triple_log_target());
  EXPECT_FALSE(rep.passes);
  EXPECT_FALSE(rep.essential_residual.is_zero());
  auto rep9 = verify_bounding(-fixtures::double_log_chain(), fixtures::double_log_target());
  EXPECT_FALSE(rep9.passes);
}

TEST(Bounding, ZeroChain) { EXPECT_TRUE(verify_bounding(HybridSum{}, CycleSum{}).passes); }

TEST(TopologicalPart, DoubleLog) {
  EXPECT_EQ(topological_part(fixtures::double_log_chain()), H({om(s(1), c("x1")), om(s(2), c("x2"))}, 2));
}

TEST(TopologicalPart, TripleLog) {
  EXPECT_EQ(topological_part(fixtures::triple_log_chain()),
            H({om(s(1), c("x1")), om(s(2), c("x2")), om(s(3), c("x3"))}, 3, -1));
}

TEST(TopologicalPart, AlgebraicChainHasNone) { EXPECT_TRUE(topological_part(H(z2(), 0)).is_zero()); }

TEST(HybridSum, RejectsStrayTopologicalIndex) {
  EXPECT_THROW(H({om(s(2), c("x1"))}, 1), std::invalid_argument);
}
