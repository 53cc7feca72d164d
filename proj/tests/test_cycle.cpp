#include <gtest/gtest.h>

#include "cycle_fixtures.hpp"
#include "forest_cycles/cycle.hpp"

using namespace forest_cycles;
using namespace forest_cycles::props;

namespace {

CycleSum S(const RawCoords& raw, int coeff = 1) { return cycle_sum(raw, Rational(coeff)); }

}  // namespace

TEST(Normalize, SortedTermIsUnchanged) {
  RawCoords raw{om(mono(c("a"))), om(mono(c("b")))};
  auto n = normalize(raw);
  ASSERT_TRUE(n);
  EXPECT_EQ(n->term.coords, raw);
  EXPECT_EQ(n->sign, 1);
}

TEST(Normalize, TranspositionFlipsSign) {
  auto n = normalize({om(mono(c("b"))), om(mono(c("a")))});
  ASSERT_TRUE(n);
  EXPECT_EQ(n->term.coords, (RawCoords{om(mono(c("a"))), om(mono(c("b")))}));
  EXPECT_EQ(n->sign, -1);
}

TEST(Normalize, EqualCoordinatesVanish) {
  EXPECT_FALSE(normalize({om(mono(c("a"))), om(mono(c("a")))}));
  EXPECT_FALSE(normalize({om(p(0), c("x1")), om(c("x1"), c("x2")), om(c("x1"), c("x2"))}));
}

TEST(Normalize, IdenticallyZeroCoordinateVanishes) { EXPECT_FALSE(normalize({om(Monomial{}), om(mono(c("a")))})); }

TEST(Normalize, ParameterNamesAreBound) {
  RawCoords shifted{om(std::nullopt, p(5)), om(p(5), c("x1")), om(p(5), c("x2"))};
  EXPECT_EQ(S(shifted), S(z2()));
}

TEST(Normalize, OddAutomorphismKills) { EXPECT_FALSE(normalize({om(p(0), p(1)), om(p(1), p(0))})); }

TEST(Normalize, Idempotent) {
  std::mt19937 rng(17);
  for (int i = 0; i < 200; ++i) {
    auto n = normalize(random_ratio_term(rng, 4));
    if (!n) continue;
    auto again = normalize(n->term.coords);
    ASSERT_TRUE(again);
    EXPECT_EQ(again->term, n->term);
    EXPECT_EQ(again->sign, 1);
  }
}

TEST(Face, TotaroZeroFace) {
  CycleTerm ca{totaro("a"), 0};
  FaceResult f = face(ca, 2, FaceEnd::Zero);
  ASSERT_EQ(f.pieces.size(), 1u);
  EXPECT_TRUE(f.improper.empty());
  EXPECT_EQ(f.pieces[0], (RawCoords{plain(mono(c("a"))), om(mono(c("a")))}));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_TRUE(face(ca, i, FaceEnd::Zero).pieces.empty()) << i;
    EXPECT_TRUE(face(ca, i, FaceEnd::Infinity).pieces.empty()) << i;
  }
  EXPECT_TRUE(face(ca, 2, FaceEnd::Infinity).pieces.empty());
}

TEST(Face, DoubleLogFirstZeroFace) {
  FaceResult f = face(CycleTerm{z2(), 0}, 0, FaceEnd::Zero);
  ASSERT_EQ(f.pieces.size(), 1u);
  EXPECT_EQ(f.pieces[0], (RawCoords{om(std::nullopt, c("x1")), om(std::nullopt, c("x2"))}));
}

TEST(Face, InfinityFaceIsEmpty) {
  FaceResult f = face(CycleTerm{z2(), 0}, 1, FaceEnd::Infinity);
  EXPECT_TRUE(f.pieces.empty());
  EXPECT_TRUE(f.improper.empty());
}

TEST(Face, ConstantEquationIsEmpty) {
  FaceResult f = face(CycleTerm{{om(mono(c("a"))), om(p(0), c("b"))}, 0}, 0, FaceEnd::Zero);
  EXPECT_TRUE(f.pieces.empty());
}

TEST(Face, NonUnitPivotIsOutOfClass) {
  CycleTerm t{{om(mono(p(0), 2)), om(p(0), c("b"))}, 0};
  EXPECT_THROW(face(t, 0, FaceEnd::Zero), UnsupportedClass);
}

TEST(Face, IndexOutOfRange) { EXPECT_THROW(face(CycleTerm{z2(), 0}, 3, FaceEnd::Zero), std::out_of_range); }

TEST(Boundary, Totaro) {
  CycleSum expected = S({plain(mono(c("a"))), om(mono(c("a")))});
  EXPECT_EQ(boundary(S(totaro("a"))), expected);
  EXPECT_TRUE(boundary(boundary(S(totaro("a")))).is_zero());
}

TEST(Boundary, DoubleLogCycle) {
  Monomial ab = mono(c("a")) * mono(c("b"));
  CycleSum expected = S({om(ab), om(mono(c("b")))}) - S({om(ab), om(mono(c("a"), -1))}) +
                      S({om(mono(c("b"))), om(mono(c("a")))});
  EXPECT_EQ(boundary(S(double_log_cycle("a", "b"))), expected);
}

TEST(Boundary, DoubleLogTreeCycle) {
  CycleSum expected = S({om(std::nullopt, c("x1")), om(std::nullopt, c("x2"))}) -
                      S({om(std::nullopt, c("x1")), om(c("x1"), c("x2"))}) +
                      S({om(std::nullopt, c("x2")), om(c("x2"), c("x1"))});
  EXPECT_EQ(boundary(S(z2())), expected);
}

TEST(Boundary, SubstitutionRelatesTheTwoDoubleLogForms) {
  // With x1 = 1/(ab) and x2 = 1/b, [1 - t, 1 - ab/t, 1 - b/t] is Z_{x1,x2}
  // after t -> 1/u. Check the boundaries term by term under that dictionary.
  Monomial x1 = (mono(c("a")) * mono(c("b"))).inverse();
  Monomial x2 = mono(c("b"), -1);
  RawCoords zsub{om(mono(p(0), -1)), om(mono(p(0)) * x1.inverse()), om(mono(p(0)) * x2.inverse())};
  CycleSum lhs = boundary(S(zsub));
  CycleSum rhs = S({om(x1.inverse()), om(x2.inverse())}) - S({om(x1.inverse()), om(x1 * x2.inverse())}) +
                 S({om(x2.inverse()), om(x2 * x1.inverse())});
  EXPECT_EQ(lhs, rhs);
}

TEST(Boundary, SquareVanishesOnRandomTerms) {
  std::mt19937 rng(4242);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 150; ++i) {
    std::uniform_int_distribution<std::size_t> len(1, 5);
    CycleSum s = S(random_ratio_term(rng, len(rng)));
    if (s.is_zero()) continue;
    try {
      CycleSum b = boundary(s);
      EXPECT_TRUE(boundary(b).is_zero()) << i;
      ++checked;
    } catch (const ImproperFace&) {
    } catch (const UnsupportedClass&) {
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(Concat, UnitLaw) {
  CycleSum a = S(z2());
  EXPECT_EQ(concat(a, cycle_unit()), a);
  EXPECT_EQ(concat(cycle_unit(), a), a);
}

TEST(Concat, GradedCommutative) {
  CycleSum a = S({om(mono(c("a")))});
  CycleSum b = S({om(mono(c("b")))});
  EXPECT_EQ(concat(a, b), -concat(b, a));
  EXPECT_TRUE(concat(a, a).is_zero());
  CycleSum z = S(z2());
  EXPECT_EQ(concat(z, S(totaro("a"))), -concat(S(totaro("a")), z));
}

TEST(Concat, RenamesParametersApart) {
  CycleSum z = S(z2());
  CycleSum zz = concat(z, z);
  // Z * Z with independent parameters: odd degree squares to zero.
  EXPECT_TRUE(zz.is_zero());
  CycleSum w = S({om(std::nullopt, p(0)), om(p(0), c("x1")), om(p(0), c("x3"))});
  CycleSum zw = concat(z, w);
  ASSERT_EQ(zw.size(), 1u);
  EXPECT_EQ(dimension(zw.begin()->first), 2u);
}

TEST(Concat, RawCollisionIsRejected) { EXPECT_THROW(concat_raw(z2(), z2()), std::invalid_argument); }

TEST(Concat, Associative) {
  CycleSum a = S(z2());
  CycleSum b = S(totaro("b"));
  CycleSum c3 = S({om(mono(c("c")))});
  EXPECT_EQ(concat(concat(a, b), c3), concat(a, concat(b, c3)));
}

TEST(Concat, BoundaryIsAGradedDerivation) {
  std::vector<CycleSum> pool{S(z2()), S(totaro("a")), S(double_log_cycle("a", "b")), S({om(mono(c("c")))}),
                             S({om(std::nullopt, p(0)), om(p(0), c("y1")), om(p(0), p(1)), om(p(1), c("y2")),
                                om(p(1), c("y3"))})};
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      std::size_t na = a.begin()->first.size();
      Rational sign = na % 2 == 0 ? 1 : -1;
      EXPECT_EQ(boundary(concat(a, b)), concat(boundary(a), b) + sign * concat(a, boundary(b)));
    }
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dimension(CycleTerm{z2(), 0}), 1u);
  RawCoords z3{om(std::nullopt, p(0)), om(p(0), c("x1")), om(p(0), p(1)), om(p(1), c("x2")), om(p(1), c("x3"))};
  EXPECT_EQ(dimension(CycleTerm{z3, 0}), 2u);
  EXPECT_EQ(dimension(CycleTerm{{om(mono(c("a"))), om(mono(c("b")))}, 0}), 0u);
}

TEST(Admissible, Totaro) {
  auto rep = is_admissible(CycleTerm{totaro("a"), 0});
  EXPECT_TRUE(rep.admissible);
  EXPECT_TRUE(rep.violations.empty());
  EXPECT_GT(rep.faces_checked, 0u);
}

TEST(Admissible, DoubleLogTreeCycle) { EXPECT_TRUE(is_admissible(CycleTerm{z2(), 0}).admissible); }

TEST(Admissible, CurveThroughACorner) {
  // (t, 1 - t) passes through (infinity, infinity).
  auto rep = is_admissible(CycleTerm{{plain(mono(p(0))), om(mono(p(0)))}, 0});
  EXPECT_FALSE(rep.admissible);
  ASSERT_FALSE(rep.violations.empty());
  EXPECT_NE(rep.violations.front().find("dinf^1"), std::string::npos);
}
