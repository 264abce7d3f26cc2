#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fx;

namespace {
IntervalRegion R(const char* s) { return IntervalRegion::parse(s); }
TransitionOptions full() { return TransitionOptions{16, true, false}; }
}  // namespace

TEST(Oscillation, Regions) {
  EXPECT_EQ(osc_region(to_form11(w1())), R("(5/8,1)"));
  EXPECT_EQ(osc_region(to_form11(w3())), R("(1/2,1)"));
  EXPECT_TRUE(osc_region(to_form11(w4())).is_empty());
  EXPECT_EQ(osc_region(to_form11(commutator())), IntervalRegion::whole());
}

TEST(Oscillation, RegionMatchesPointwiseOrbit) {
  for (const W& w : {w1(), w2(), w3(), w4(), w5(), w6()}) {
    auto f = to_form11(w);
    auto O = osc_region(f);
    for (const auto& p : oracle::grid(7)) EXPECT_EQ(O.contains(p), oracle::in_osc(f, p)) << to_string(w) << " " << p.str();
  }
}

TEST(Oscillation, Explicit) {
  EXPECT_TRUE(is_explicitly_oscillating(w1()));
  EXPECT_FALSE(is_explicitly_oscillating(w4()));
  EXPECT_FALSE(is_explicitly_oscillating(W(1)));
  EXPECT_FALSE(is_explicitly_oscillating(w1(), R("(0,5/8)")));
}

TEST(Oscillation, Families) {
  auto f = to_form11(w3());
  auto A = R("(1/2,1)");
  auto pos = v_family(f, A, FamilyVariant::positive);
  // x1^-1 preserves (1/2,1), so both members coincide.
  EXPECT_EQ(apply_region(inv(x(1)), A), A);
  EXPECT_EQ(pos, std::vector<IntervalRegion>{A});
  auto f1 = to_form11(w1());
  auto B = R("(5/8,1)");
  std::vector<IntervalRegion> expect;
  for (const PLMap& g : {inv(x(1)), x(2) * inv(x(1)), x(1) * x(2) * inv(x(1))}) {
    auto img = apply_region(g, B);
    if (std::find(expect.begin(), expect.end(), img) == expect.end()) expect.push_back(img);
  }
  EXPECT_EQ(v_family(f1, B, FamilyVariant::positive), expect);
  EXPECT_EQ(v_family(f1, B, FamilyVariant::signed_).front(), B);
  auto free = to_form11(commutator());
  EXPECT_EQ(v_family(free, A, FamilyVariant::positive), std::vector<IntervalRegion>{A});
}

TEST(Classify, Example1) {
  auto c = classify(w1());
  EXPECT_EQ(c.verdict, Verdict::ExplicitlyOscillating);
  EXPECT_EQ(c.osc, R("(5/8,1)"));
  EXPECT_EQ(*c.hat, R("(5/8,1)"));
  EXPECT_EQ(classify(commutator()).verdict, Verdict::ExplicitlyOscillating);
  EXPECT_EQ(*classify(commutator()).hat, IntervalRegion::whole());
}

TEST(Classify, LevelOneCells) {
  auto c = classify(w2(), full());
  EXPECT_EQ(c.verdict, Verdict::Oscillating);
  ASSERT_GE(c.levels.size(), 2u);
  std::vector<IntervalRegion> regions;
  for (const auto& cell : c.levels[1].cells) regions.push_back(cell.region);
  std::sort(regions.begin(), regions.end(), [](const auto& a, const auto& b) {
    return a.components().front().lo < b.components().front().lo;
  });
  EXPECT_EQ(regions, (std::vector<IntervalRegion>{R("(0,1/4)"), R("(1/4,3/8)"), R("(3/8,1/2)"), R("(1/2,3/4)"),
                                                  R("(3/4,1)")}));
  for (const auto& cell : c.levels[1].cells) {
    if (cell.region == R("(1/2,3/4)")) {
      EXPECT_EQ(cell.derived, y(1, 1));
    }
    if (cell.region == R("(3/8,1/2)")) {
      EXPECT_FALSE(cell.trivial);
    }
  }
}

TEST(Classify, ConstantShortcut) {
  auto c = classify(w4());
  EXPECT_EQ(c.verdict, Verdict::ConstantNontrivial);
  EXPECT_NE(classify(w4(), full()).verdict, Verdict::Rigid);
}

TEST(Classify, Rigid) {
  auto c = classify(w5());
  EXPECT_EQ(c.verdict, Verdict::Rigid);
  ASSERT_EQ(c.levels.size(), 2u);
  ASSERT_EQ(c.levels[1].cells.size(), 2u);
  for (const auto& cell : c.levels[1].cells) EXPECT_TRUE(cell.derived.is_identity());
}

TEST(Classify, LevelTwo) {
  W6 k;
  auto cl = classify(k.word(), full());
  EXPECT_EQ(cl.verdict, Verdict::Oscillating);
  ASSERT_EQ(cl.levels.size(), 3u);
  std::vector<IntervalRegion> l1, l2;
  for (const auto& cell : cl.levels[1].cells) l1.push_back(cell.region);
  for (const auto& cell : cl.levels[2].cells) l2.push_back(cell.region);
  EXPECT_EQ(l1, (std::vector<IntervalRegion>{R("(1/4,1/2)u(3/4,1)"), R("(0,1/4)u(1/2,3/4)")}));
  EXPECT_EQ(l2, (std::vector<IntervalRegion>{R("(1/4,1/2)u(1/2,3/4)"), R("(0,1/4)u(3/4,1)")}));
  for (const auto& cell : cl.levels[2].cells) {
    EXPECT_TRUE(cell.explicit_osc);
    if (cell.region == R("(0,1/4)u(3/4,1)")) {
      EXPECT_EQ(cell.word, cat({y(2, 1), y(2, 2), c(2, k.v6 * k.v1)}));
    }
  }
}

TEST(Classify, Degenerate) {
  EXPECT_EQ(classify(W(1)).verdict, Verdict::Degenerate);
  EXPECT_EQ(classify(c(1, x(0))).verdict, Verdict::Degenerate);
}

TEST(Classify, Budget) {
  W w = cat({y(1, 1), c(1, x(0)), y(1, 1, -1), c(1, inv(x(0)))});
  W big(1);
  for (int i = 0; i < 5; ++i) big = multiply(big, w);
  EXPECT_THROW(classify(big, TransitionOptions{3, true, true}), resource_error);
}

TEST(GabCells, Discrete) {
  using F = FinPerm;
  P w = multiply(P::variable(1, 1), P::constant(1, F::transposition(1, 2)));
  auto f = to_form11(w);
  EXPECT_EQ(osc_region(f), DiscreteRegion::finite({1, 2}));
  auto g = gab_cells(f);
  EXPECT_FALSE(g.separated);
  ASSERT_EQ(g.cells.size(), 2u);
  auto free = gab_cells(to_form11(P::variable(1, 1)));
  EXPECT_TRUE(free.separated);
  EXPECT_EQ(free.cells.size(), 1u);
}
