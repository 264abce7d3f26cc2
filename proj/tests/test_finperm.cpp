#include <gtest/gtest.h>

#include "mixid/finperm.hpp"

using namespace mixid;

TEST(FinPerm, Basics) {
  FinPerm c = FinPerm::from_cycles({{1, 2, 3}});
  EXPECT_TRUE((c * c.inverse()).is_identity());
  EXPECT_EQ(support(FinPerm::from_cycles({{1, 2}, {4, 5}})), DiscreteRegion::finite({1, 2, 4, 5}));
  EXPECT_EQ(c(2), 3u);
  EXPECT_EQ(c(7), 7u);
  EXPECT_EQ(c.str(), "perm((1 2 3))");
  EXPECT_EQ(FinPerm().str(), "perm()");
  EXPECT_EQ(c.sign(), 1);
  EXPECT_EQ(FinPerm::transposition(0, 4).sign(), -1);
  EXPECT_THROW(FinPerm::from_cycles({{1, 1}}), usage_error);
}

TEST(FinPerm, CompositionOrder) {
  // (1 2)(2 3): apply (2 3) first, so 2 -> 3 -> 3 and 3 -> 2 -> 1.
  FinPerm p = FinPerm::from_cycles({{1, 2}, {2, 3}});
  EXPECT_EQ(p(2), 3u);
  EXPECT_EQ(p(3), 1u);
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(apply_region(p, DiscreteRegion::finite({1})), DiscreteRegion::finite({2}));
  EXPECT_EQ(apply_region(p, DiscreteRegion::cofinite({1})), DiscreteRegion::cofinite({2}));
}

TEST(FinPerm, Mover) {
  EXPECT_EQ(make_mover(DiscreteRegion::whole(), 0, {1}), FinPerm::transposition(0, 2));
  EXPECT_THROW(make_mover(DiscreteRegion::finite({0}), 0, {}), infeasible);
  EXPECT_EQ(make_mover(DiscreteRegion::whole(), 0, {}, Parity::even), FinPerm::from_cycles({{0, 1, 2}}));
  EXPECT_THROW(make_mover(DiscreteRegion::finite({0, 1}), 0, {}, Parity::even), infeasible);
  EXPECT_THROW(make_mover(DiscreteRegion::finite({1}), 0, {}), usage_error);
}
