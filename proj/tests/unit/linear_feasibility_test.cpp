#include <gtest/gtest.h>

#include "leafpow/generators.hpp"
#include "leafpow/linear_feasibility.hpp"
#include "oracles.hpp"

namespace leafpow {
namespace {

TEST(ExactLp, SmallOptimum) {
  ExactLp lp(2, {Rational(0), Rational(0)}, {Rational(1), Rational(1)});
  const std::vector<LinearTerm> r1{{0, 1}, {1, 2}}, r2{{0, 3}, {1, 1}};
  ASSERT_TRUE(lp.add_at_least(r1, 4));
  ASSERT_TRUE(lp.add_at_least(r2, 6));
  EXPECT_EQ(lp.solution(), (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
  EXPECT_EQ(lp.objective(), Rational(14, 5));
  const std::vector<LinearTerm> sum{{0, 1}, {1, 1}};
  EXPECT_FALSE(lp.add_at_most(sum, 2));
  EXPECT_FALSE(lp.feasible());
}

TEST(ExactLp, EqualityAndLowerBounds) {
  ExactLp lp(3, Rational(1));
  const std::vector<LinearTerm> eq{{0, 1}, {1, 1}, {2, 1}};
  ASSERT_TRUE(lp.add_equal(eq, 7));
  const std::vector<LinearTerm> gap{{2, 1}, {0, -1}};
  ASSERT_TRUE(lp.add_at_least(gap, 3));
  const auto x = lp.solution();
  EXPECT_EQ(x[0] + x[1] + x[2], Rational(7));
  EXPECT_GE(x[2] - x[0], Rational(3));
  for (const Rational& v : x) EXPECT_GE(v, Rational(1));
  EXPECT_FALSE(lp.add_at_least(gap, 6));
}

TEST(ExactLp, CopiesBranchIndependently) {
  ExactLp lp(2, Rational(0));
  const std::vector<LinearTerm> x{{0, 1}};
  ASSERT_TRUE(lp.add_at_least(x, 2));
  ExactLp branch = lp;
  EXPECT_FALSE(branch.add_at_most(x, 1));
  EXPECT_TRUE(lp.feasible());
  EXPECT_TRUE(lp.add_at_most(x, 3));
}

TEST(ExactLp, AgreesWithVertexEnumeration) {
  Rng rng(21);
  int infeasible = 0;
  for (int round = 0; round < 300; ++round) {
    const Rational c0(rng.between(1, 5)), c1(rng.between(1, 5));
    ExactLp lp(2, {Rational(0), Rational(0)}, {c0, c1});
    std::vector<oracle::Row2> rows;
    const int m = 1 + static_cast<int>(rng.below(5));
    bool feasible = true;
    for (int r = 0; r < m; ++r) {
      oracle::Row2 row{Rational(rng.between(-4, 6)), Rational(rng.between(-4, 6)),
                       Rational(rng.between(-6, 12))};
      rows.push_back(row);
      const std::vector<LinearTerm> terms{{0, row.a0}, {1, row.a1}};
      feasible = lp.add_at_least(terms, row.b);
    }
    const auto expected = oracle::lp2_min(rows, c0, c1);
    ASSERT_EQ(feasible, expected.has_value()) << "round " << round;
    if (feasible) {
      EXPECT_EQ(lp.objective(), *expected) << "round " << round;
    } else {
      ++infeasible;
    }
  }
  EXPECT_GT(infeasible, 0);
}

}  // namespace
}  // namespace leafpow
