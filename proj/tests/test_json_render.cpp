#include <gtest/gtest.h>

#include "cycle_fixtures.hpp"
#include "forest_cycles.hpp"

using namespace forest_cycles;
using namespace forest_cycles::props;

TEST(Render, Trees) {
  auto trees = tau_trees(TauSpec::standard(3));
  EXPECT_EQ(render(trees[0]), "1(x1,(x2,x3))");
  EXPECT_EQ(render(trees[1]), "1((x1,x2),x3)");
  EXPECT_EQ(render(Tree::edge(Deco::unit(), deco("x1"))), "1(x1)");
}

TEST(Render, Cycles) {
  EXPECT_EQ(render(z2()), "[1-1/t, 1-t/x1, 1-t/x2]");
  EXPECT_EQ(render(totaro("a")), "[t, 1-t, 1-a/t]");
  EXPECT_EQ(render(z2(), Style::Latex), "\\left[1-\\frac{1}{t}, 1-\\frac{t}{x_{1}}, 1-\\frac{t}{x_{2}}\\right]");
  CycleSum s = cycle_sum(z2()) - cycle_sum({om(mono(c("a")))}, Rational(3, 2));
  EXPECT_EQ(render(s), "-3/2 [1-a] + [1-t/x1, 1-t/x2, 1-1/t]");
}

TEST(Render, Hybrid) {
  HybridTerm t{{om(Sym::topological(1), c("x1"))}, 1};
  EXPECT_EQ(render(t), "[1-s1/x1] (r=1)");
}

TEST(Json, TreeRoundTrip) {
  for (std::size_t m = 2; m <= 5; ++m)
    for (const auto& t : tau_trees(TauSpec::standard(m))) EXPECT_EQ(tree_from_json(to_json(t)), t);
}

TEST(Json, TreeSchema) {
  Json j = Json::parse(R"({"root": "1", "node": {"children": [{"leaf": "x1"}, {"leaf": "x2"}]}})");
  Tree t = tree_from_json(j);
  EXPECT_EQ(t, tau_trees(TauSpec::standard(2))[0]);
  EXPECT_THROW(tree_from_json(Json::parse(R"({"root": "1"})")), JsonFormatError);
  EXPECT_THROW(tree_from_json(Json::parse(R"({"root": "1", "node": {"children": [{"leaf": "x"}]}})")),
               std::invalid_argument);
}

TEST(Json, ForestSumRoundTrip) {
  ForestSum s = d(tau(TauSpec::standard(4)));
  EXPECT_EQ(forest_sum_from_json(to_json(s)), s);
}

TEST(Json, ForestReorderingSign) {
  Json j = Json::parse(R"({"sign": 1, "trees": [
      {"root": "1", "node": {"leaf": "x2"}}, {"root": "1", "node": {"leaf": "x1"}}]})");
  ForestSum s = forest_from_json(j);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.begin()->second, -1);
}

TEST(Json, CycleRoundTrip) {
  CycleSum s = phi(tau(TauSpec::standard(4))) + cycle_sum(totaro("a"), Rational(-2, 3));
  EXPECT_EQ(cycle_sum_from_json(to_json(s)), s);
  HybridSum h = fixtures::triple_log_chain();
  EXPECT_EQ(cycle_sum_from_json(to_json(h)), h);
}

TEST(Json, CycleSchema) {
  Json j = Json::parse(R"([{"coords": [{"$p0": -1}, {"$p0": 1, "x1": -1}, {"$p0": 1, "x2": -1}], "coeff": "1"}])");
  EXPECT_EQ(cycle_sum_from_json(j), cycle_sum(z2()));
  Json plain = Json::parse(R"([{"coords": [{"plain": {"$p0": 1}}, {"$p0": 1}, {"a": 1, "$p0": -1}]}])");
  EXPECT_EQ(cycle_sum_from_json(plain), cycle_sum(totaro("a")));
  EXPECT_THROW(cycle_sum_from_json(Json::parse(R"([{"coords": [{"$q1": 1}]}])")), JsonFormatError);
  EXPECT_THROW(cycle_sum_from_json(Json::parse(R"([{"coords": [{"a": 0.5}]}])")), JsonFormatError);
}
