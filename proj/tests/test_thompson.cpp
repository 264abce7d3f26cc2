#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace fx;

TEST(PLMap, Evaluation) {
  EXPECT_EQ(x(1)(q(3, 4)), q(5, 8));
  EXPECT_EQ(x(1)(q(1, 2)), q(1, 2));
  // x0: t/2 on [0,1/2], t-1/4 on [1/2,3/4], 2t-1 on [3/4,1].
  EXPECT_EQ(x(0)(q(1, 3)), q(1, 6));
  EXPECT_EQ(x(0)(q(5, 8)), q(3, 8));
  EXPECT_THROW(x(0)(q(3, 2)), usage_error);
}

TEST(PLMap, Composition) {
  EXPECT_TRUE(compose(x(1), inv(x(1))).is_identity());
  const PLMap a = xr(0, d(1, 1), 0);
  EXPECT_EQ(x(1) * a * inv(x(1)), a);
  for (const auto& t : oracle::grid()) EXPECT_EQ((x(0) * x(0))(t), x(0)(x(0)(t)));
  EXPECT_EQ(power(x(0), -2), inv(x(0) * x(0)));
}

TEST(PLMap, Generators) {
  for (unsigned n = 0; n < 5; ++n) {
    Rational lo(mpz_class((1L << n) - 1), mpz_class(1L << n));
    EXPECT_EQ(support(x(n)), IntervalRegion(lo, Rational(1)));
    EXPECT_EQ(rel_generator(Dyadic(0), Dyadic(1), n), x(n));
  }
  EXPECT_EQ(rescale(x(0), d(1, 1), 1), xr(d(1, 1), 1, 0));
  EXPECT_THROW(rel_generator(q(1, 3), q(1, 2), 0), usage_error);
}

TEST(PLMap, Support) {
  EXPECT_EQ(support(x(2)), IntervalRegion::parse("(3/4,1)"));
  EXPECT_TRUE(support(PLMap()).is_empty());
  const PLMap h = xr(0, d(1, 1), 1) * xr(d(1, 1), 1, 1);
  PLMap v = xr(0, d(1, 2), 0) * xr(d(1, 2), d(1, 1), 0) * xr(d(1, 1), d(3, 2), 0) * xr(d(3, 2), 1, 0);
  EXPECT_EQ(support(v), IntervalRegion::parse("(0,1/4)u(1/4,1/2)u(1/2,3/4)u(3/4,1)"));
  EXPECT_EQ(support(h), IntervalRegion::parse("(1/4,1/2)u(3/4,1)"));
}

TEST(PLMap, SupportMatchesMovedPoints) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    PLMap f = x(static_cast<unsigned>(i % 3));
    if (i % 2) f = f * xr(d(i % 4, 2), d(i % 4 + 1, 2), 1);
    auto s = support(f);
    for (const auto& t : oracle::grid(6)) EXPECT_EQ(s.contains(t), f(t) != t) << f.str() << " at " << t.str();
  }
}

TEST(PLMap, ImagesAndDisplacement) {
  EXPECT_EQ(apply_region(x(1), IntervalRegion::parse("(3/4,1)")), IntervalRegion::parse("(5/8,1)"));
  auto r = IntervalRegion::parse("(1/3,1/2)u(3/4,1)");
  EXPECT_EQ(apply_region(PLMap(), r), r);
  for (unsigned n = 0; n < 4; ++n) EXPECT_EQ(displacement(x(n)), oracle::grid_displacement(x(n)));
  EXPECT_EQ(displacement(x(0)), q(1, 4));
}

TEST(PLMap, Mover) {
  PLMap f = make_mover(q(1, 2), q(1), q(3, 4), {});
  EXPECT_TRUE(support(f).is_subset(IntervalRegion::parse("(1/2,1)")));
  EXPECT_NE(f(q(3, 4)), q(3, 4));
  PLMap g = make_mover(q(0), q(1), q(1, 2), {x(0)(q(1, 2))});
  EXPECT_EQ(g, power(x(0), 2));
  for (const auto& t : oracle::grid(5)) {
    if (t <= q(1, 2)) {
      EXPECT_EQ(f(t), t);
    }
  }
}

TEST(PLMap, Interpolation) {
  EXPECT_TRUE(cfp_interpolate({0, d(1, 1), 1}, {0, d(1, 1), 1}).is_identity());
  PLMap f = cfp_interpolate({0, d(1, 1), 1}, {0, d(1, 2), 1});
  EXPECT_EQ(f(q(1, 2)), q(1, 4));
  EXPECT_TRUE(oracle::power_of_two_slopes(f));
  PLMap g = cfp_interpolate({0, d(1, 2), d(1, 1), 1}, {0, d(1, 2), d(3, 2), 1}, 1);
  EXPECT_EQ(g(q(1, 2)), q(3, 4));
  for (long m = 0; m <= 16; ++m) EXPECT_EQ(g(q(m, 64)), q(m, 64));
  EXPECT_THROW(cfp_interpolate({0, 1}, {0, d(1, 1), 1}), usage_error);
  EXPECT_THROW(cfp_interpolate({0, d(1, 1), 1}, {0, d(1, 2), 1}, 1), usage_error);
}

TEST(PLMap, PresentationRelations) {
  for (long i = 1; i <= 2; ++i) {
    PLMap a = x(0) * inv(x(1));
    PLMap b = power(x(0), -i) * x(1) * power(x(0), i);
    EXPECT_TRUE((a * b * inv(a) * inv(b)).is_identity());
  }
  for (unsigned j = 1; j <= 4; ++j) {
    for (unsigned i = 0; i < j; ++i) EXPECT_EQ(x(j) * x(i), x(i) * x(j + 1));
  }
}
