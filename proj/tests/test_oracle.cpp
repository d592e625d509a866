#include <gtest/gtest.h>

#include "common.hpp"

using namespace ospds;

namespace {

std::string gap(int j) { return std::string(j, 'o'); }

}  // namespace

TEST(Oracle, WorkedExamples) {
  EXPECT_EQ(oracle_mult1(P("+xoox", 1), P("+x", 1)), (GradedMult{0, 2}));
  EXPECT_EQ(oracle_mult1(P("+xoox", 1), P("ooox", 1)), (GradedMult{1, 0}));
  EXPECT_EQ(oracle_mult1(P("-x^2" + gap(5) + "x", 1), P("-x^2", 1)), (GradedMult{2, 0}));
  EXPECT_EQ(oracle_mult1(P("-x^2" + gap(6) + "x", 1), P("-x^2", 1)), (GradedMult{0, 2}));
  EXPECT_EQ(oracle_mult1(P("+oxox", 0), P("-ox", 0)), (GradedMult{0, 1}));
  EXPECT_EQ(oracle_mult1(P(">xoox", 2), P(">ooox", 2)), (GradedMult{1, 0}));
}

TEST(Oracle, ZeroCases) {
  // A cross right after the stack kills the even target x^i.
  EXPECT_TRUE(oracle_mult1(P("x^2xoo", 0), P("x", 0)).zero());
  EXPECT_TRUE(oracle_mult1(P("x^2x", 0), P("x^2", 0)).zero());
  EXPECT_TRUE(oracle_mult1(P("+xoox", 1), P("ox", 1)).zero());
  EXPECT_TRUE(oracle_mult1(P("+xoox", 1), P("+xoox", 1)).zero());
  EXPECT_TRUE(oracle_mult1(P("+o>x", 0), P("x", 0)).zero());
  EXPECT_THROW(oracle_mult1(P("+xoox", 1), P("+ox", 0)), DomainError);
}

TEST(Oracle, TraceNamesEachStep) {
  std::vector<std::string> trace;
  auto g = oracle_mult1(P("+xoox", 1), P("+x", 1), &trace);
  EXPECT_EQ(g, (GradedMult{0, 2}));
  ASSERT_EQ(trace.size(), 5u);
  EXPECT_EQ(trace[0], "howl: +xoox / +x");
  EXPECT_EQ(trace[1], "switch signs: -xoox / -x");
  EXPECT_EQ(trace[2], "zero stack drops i crosses and 2i empties: ox / o");
  EXPECT_EQ(trace[3], "base osp(3|2): cross at 1: ox / o");
  EXPECT_EQ(trace[4], "result (0|2)");
}

TEST(Oracle, ShrinkPath) {
  std::vector<std::string> trace;
  auto g = oracle_mult1(P("+oxox", 0), P("+ox", 0), &trace);
  EXPECT_EQ(g, (GradedMult{0, 1}));
  EXPECT_EQ(trace[1], "shrink at 1: +ox / o");
}

TEST(Oracle, SigmaEquivariant) {
  for (int t = 0; t <= 1; ++t)
    for (const auto& l : enumerate_corefree(t, 3, 8))
      for (const auto& n : enumerate_corefree(t, 2, 8))
        EXPECT_EQ(oracle_mult1(l, n), oracle_mult1(sigma(l), sigma(n))) << format(l) << " / " << format(n);
}

TEST(Oracle, OddStackReduction) {
  // frac(+x^p oo f / +x^i) = frac(-x^(p-1) f / -x^(i-1)), i >= 2.
  for (int p = 2; p <= 4; ++p)
    for (int i = 2; i <= p; ++i)
      for (const auto& f : enumerate_corefree(1, 1, 6)) {
        if (f.zero_crosses > 0) continue;
        WeightDiagram lhs = f;
        lhs.tail_symbols.insert(lhs.tail_symbols.begin(), 2, Symbol::Empty);
        lhs.zero_crosses = p;
        lhs.sign = Sign::Plus;
        lhs.trim();
        WeightDiagram rhs = f;
        rhs.zero_crosses = p - 1;
        rhs.sign = Sign::Minus;
        WeightDiagram a{1, i, std::nullopt, {}, Sign::Plus};
        WeightDiagram b{1, i - 1, std::nullopt, {}, Sign::Minus};
        if (atypicality(lhs) != i + 1) continue;
        EXPECT_EQ(oracle_mult1(lhs, a), oracle_mult1(rhs, b)) << format(lhs);
      }
}

TEST(Oracle, CoredPairsMatchDs1) {
  for (int t = 0; t <= 2; ++t)
    for (int k = 1; k <= 2; ++k) {
      auto src = enumerate_diagrams(t, k, 2, 6);
      for (const auto& l : src) {
        auto D = ds1(l);
        for (const auto& [nu, g] : D.components) EXPECT_EQ(oracle_mult1(l, nu), g) << format(l) << " / " << format(nu);
      }
    }
}
