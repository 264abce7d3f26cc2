#include <gtest/gtest.h>

#include "mixid/regions.hpp"

using namespace mixid;

namespace {
IntervalRegion R(const char* s) { return IntervalRegion::parse(s); }
}  // namespace

TEST(IntervalRegion, Construction) {
  EXPECT_EQ(R("(0,1/4)u(1/4,1/2)").components().size(), 2u);
  EXPECT_EQ(R("(0,1/2)u(1/4,3/4)"), R("(0,3/4)"));
  EXPECT_EQ(R("empty"), IntervalRegion());
  EXPECT_THROW(R("(1/2,2)"), usage_error);
  EXPECT_THROW(R("(0,1/2"), usage_error);
  EXPECT_EQ(R("(0,1/4) u (3/4,1)").str(), "(0,1/4)u(3/4,1)");
}

TEST(IntervalRegion, Intersection) {
  EXPECT_EQ(intersect(R("(1/2,1)"), R("(5/8,1)")), R("(5/8,1)"));
  EXPECT_TRUE(intersect(R("(0,1/4)u(1/2,3/4)"), R("(1/4,1/2)u(3/4,1)")).is_empty());
  auto r = R("(0,1/3)u(1/2,1)");
  EXPECT_EQ(intersect(r, r), r);
}

TEST(IntervalRegion, InteriorComplement) {
  auto X = IntervalRegion::whole();
  EXPECT_EQ(interior_complement(R("(3/8,1/2)"), X), R("(0,3/8)u(1/2,1)"));
  EXPECT_TRUE(interior_complement(X, X).is_empty());
  EXPECT_TRUE(interior_complement(R("(0,1/4)u(1/4,1/2)u(1/2,3/4)u(3/4,1)"), X).is_empty());
}

TEST(IntervalRegion, BoundaryPoints) {
  using V = std::vector<Rational>;
  EXPECT_EQ(boundary_points(R("(5/8,1)")), (V{Rational(5, 8), Rational(1)}));
  EXPECT_EQ(boundary_points(R("(0,1/4)u(1/4,1)")), (V{Rational(0), Rational(1, 4), Rational(1)}));
  EXPECT_TRUE(boundary_points(IntervalRegion()).empty());
}

TEST(IntervalRegion, Predicates) {
  EXPECT_FALSE(R("(5/8,1)").is_empty());
  EXPECT_TRUE(R("(1/2,1)").contains(Rational(3, 4)));
  EXPECT_FALSE(R("(1/2,1)").contains(Rational(1, 2)));
  EXPECT_TRUE(R("(5/8,1)").is_subset(R("(1/2,1)")));
  EXPECT_EQ(regularize(R("(0,1/4)u(1/4,1/2)")), R("(0,1/2)"));
  EXPECT_EQ(minus(R("(0,1)"), R("(1/4,1/2)")), R("(0,1/4)u(1/2,1)"));
}

TEST(DiscreteRegion, Basics) {
  auto f = DiscreteRegion::finite({1, 2, 3});
  EXPECT_FALSE(f.is_infinite());
  EXPECT_TRUE(DiscreteRegion::cofinite({1}).is_infinite());
  EXPECT_TRUE(f.contains(2));
  EXPECT_EQ(unite(f, DiscreteRegion::cofinite({2, 7})), DiscreteRegion::cofinite({7}));
  EXPECT_EQ(intersect(f, DiscreteRegion::cofinite({2})), DiscreteRegion::finite({1, 3}));
  EXPECT_EQ(complement(f), DiscreteRegion::cofinite({1, 2, 3}));
  EXPECT_EQ(minus(DiscreteRegion::whole(), f), complement(f));
  EXPECT_EQ(DiscreteRegion::parse("finite{3,1}"), DiscreteRegion::finite({1, 3}));
  EXPECT_EQ(DiscreteRegion::parse("cofinite{}"), DiscreteRegion::whole());
  EXPECT_THROW(DiscreteRegion::parse("finite{x}"), usage_error);
  Nat least = 0;
  EXPECT_TRUE(DiscreteRegion::cofinite({0, 1}).least_member({2}, least));
  EXPECT_EQ(least, 3u);
}
