#include <gtest/gtest.h>

#include "common.hpp"

using namespace ospds;

TEST(Howl, OddExamples) {
  EXPECT_EQ(howl(P("<x<x", 1)), P("+xx", 1));
  EXPECT_EQ(howl(P("+x^2o>x", 1)), P("+x^2ox", 1));
  EXPECT_EQ(howl(P("-x^2o>x", 1)), P("-x^2ox", 1));
  EXPECT_EQ(howl(P("x/>oo>x", 1)), P("-xox", 1));
  EXPECT_EQ(howl(P("x/>xo>x", 1)), P("+x^2ox", 1));
  EXPECT_TRUE(howl(P("o><", 1)).empty());
}

TEST(Howl, EvenExamples) {
  EXPECT_EQ(howl(P("+o>>x", 0)), P("+ox", 0));
  EXPECT_EQ(howl(P("-o>>x", 0)), P("-ox", 0));
  EXPECT_EQ(howl(P("x^2>x", 0)), P("x^2x", 0));
  EXPECT_TRUE(howl(P("+o>o<", 0)).empty());
  EXPECT_EQ(howl(P("-o>o<", 0)).sign, Sign::None);
}

TEST(Howl, TypeTwoExamples) {
  EXPECT_EQ(howl(P("x^2/>oo>x", 2)), P("x^2/>oox", 2));
  EXPECT_EQ(howl(P(">x<x", 2)), P(">xx", 2));
  EXPECT_EQ(howl(P("><", 2)), P(">", 2));
}

TEST(Howl, Properties) {
  for (int t = 0; t <= 2; ++t)
    for (int k = 0; k <= 3; ++k)
      for (const auto& d : enumerate_diagrams(t, k, 3, 7)) {
        auto h = howl(d);
        EXPECT_TRUE(is_valid(h)) << format(d);
        EXPECT_TRUE(h.core_free());
        EXPECT_EQ(atypicality(h), k);
        EXPECT_EQ(tail_length(h), tail_length(d)) << format(d);
        if (is_stable(d)) {
          // Stable diagrams lose their core symbols in place.
          WeightDiagram s = d;
          for (int p = 1; p < s.width(); ++p)
            if (is_core(s.at(p))) s.set(p, Symbol::Empty);
          if (t == 1) s.zero_core.reset();
          if (t == 1 && s.zero_crosses > 0) s.sign = h.sign;
          if (!sign_required(s)) s.sign = Sign::None;
          EXPECT_EQ(h, s) << format(d);
        }
      }
}

TEST(Unhowl, Examples) {
  auto c = core_of(P("<x<x", 1));
  EXPECT_EQ(unhowl(c, P("+xx", 1)), std::vector<WeightDiagram>{P("<x<x", 1)});
  auto both = unhowl(P("+o>", 0), WeightDiagram{});
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0], P("+o>", 0));
  EXPECT_EQ(both[1], P("-o>", 0));
  EXPECT_EQ(unhowl(P(">", 1), P("-xox", 1)), std::vector<WeightDiagram>{P("x/>oox", 1)});
  EXPECT_EQ(unhowl(P("o<", 0), WeightDiagram{}).size(), 1u);
}

TEST(Unhowl, Errors) {
  EXPECT_THROW(unhowl(P("+o>", 0), P("-x", 1)), DomainError);
  EXPECT_THROW(unhowl(P("+o>x", 0), WeightDiagram{}), DomainError);
  EXPECT_THROW(unhowl(P(">", 1), P("o>", 1)), DomainError);
}

TEST(Unhowl, InvertsHowl) {
  for (int t = 0; t <= 2; ++t)
    for (int k = 0; k <= 3; ++k)
      for (const auto& d : enumerate_diagrams(t, k, 3, 7)) {
        auto lifts = unhowl(core_of(d), howl(d));
        bool two = t == 0 && k == 0 && sign_required(d);
        EXPECT_EQ(lifts.size(), two ? 2u : 1u) << format(d);
        EXPECT_NE(std::find(lifts.begin(), lifts.end(), d), lifts.end()) << format(d);
        for (const auto& l : lifts) {
          EXPECT_EQ(howl(l), howl(d));
          EXPECT_EQ(core_of(l), core_of(d));
        }
      }
}

TEST(Tau, Examples) {
  EXPECT_EQ(tau(P("x^2/>oxox", 2)), P("-x^2xox", 1));
  EXPECT_EQ(tau(P(">xox", 2)), P("+xox", 1));
  EXPECT_EQ(tau(P(">oox", 2)), P("oox", 1));
  EXPECT_EQ(tau(P("x/>x", 2)), P("+x^2", 1));
  EXPECT_TRUE(tau(P(">", 2)).empty());
  EXPECT_THROW(tau(P("-x", 1)), DomainError);
  EXPECT_THROW(tau(P("><", 2)), DomainError);
}

TEST(Tau, Bijection) {
  for (int k = 0; k <= 4; ++k) {
    auto two = enumerate_corefree(2, k, 9);
    auto one = enumerate_corefree(1, k, 8);
    std::set<WeightDiagram> image;
    for (const auto& h : two) {
      auto g = tau(h);
      EXPECT_EQ(tau_inv(g), h);
      EXPECT_EQ(tail_length(g), tail_length(h));
      EXPECT_EQ(atypicality(g), k);
      image.insert(g);
    }
    for (const auto& g : one) {
      EXPECT_EQ(tau(tau_inv(g)), g);
      EXPECT_TRUE(image.count(g)) << format(g);
    }
  }
}
