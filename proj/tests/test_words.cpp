#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fx;

TEST(Word, Reduction) {
  EXPECT_TRUE(multiply(y(1, 1), y(1, 1, -1)).is_identity());
  EXPECT_EQ(cat({c(2, x(1)), c(2, inv(x(1))), y(2, 2)}), y(2, 2));
  EXPECT_EQ(cat({y(1, 1), y(1, 1)}), y(1, 1, 2));
  EXPECT_EQ(invert(w3()), cat({c(1, x(1)), y(1, 1), c(1, inv(x(1))), y(1, 1, -1)}));
  EXPECT_THROW(y(1, 2), usage_error);
  EXPECT_THROW(W(0), usage_error);
}

TEST(Word, Counts) {
  EXPECT_EQ(w1().constant_count(), 3u);
  EXPECT_EQ(w1().letter_count(), 4u);
  EXPECT_TRUE(commutator().is_free());
  EXPECT_TRUE(c(1, x(0)).is_constant());
}

TEST(Word, Substitution) {
  EXPECT_TRUE(substitute(w3(), {PLMap()}).is_identity());
  EXPECT_EQ(substitute(w4(), {PLMap()}), xr(0, d(1, 1), 0));
  EXPECT_EQ(substitute(y(1, 1, 3), {x(0)}), power(x(0), 3));
  EXPECT_THROW(substitute(commutator(), {x(0)}), usage_error);
}

TEST(Word, Printing) {
  EXPECT_EQ(to_string(W(1)), "1");
  EXPECT_EQ(to_string(cat({y(2, 1), y(2, 2, -2)})), "y1*y2^-2");
}

TEST(Form11, Example1) {
  auto f = to_form11(w1());
  ASSERT_EQ(f.n(), 3u);
  EXPECT_EQ(f.v[0], inv(x(1)));
  EXPECT_EQ(f.v[1], x(2));
  EXPECT_EQ(f.v[2], x(1));
  EXPECT_TRUE(f.conjugator.is_identity());
  EXPECT_EQ(product_of_constants(f), x(1) * x(2) * inv(x(1)));
}

TEST(Form11, TrailingVariablesMoveToFront) {
  W w = cat({c(1, x(0)), y(1, 1, 2)});
  auto f = to_form11(w);
  EXPECT_EQ(f.normalized, cat({y(1, 1, 2), c(1, x(0))}));
  EXPECT_EQ(conjugate(w, f.conjugator), f.normalized);
  EXPECT_THROW(to_form11(c(1, x(0))), usage_error);
  EXPECT_EQ(to_form11_any(c(1, x(0))).n(), 1u);
}

TEST(Form11, ProductOfConstants) {
  EXPECT_TRUE(product_of_constants(to_form11(w3())).is_identity());
  auto p4 = product_of_constants(to_form11(w4()));
  EXPECT_EQ(p4, xr(0, d(1, 1), 0));
  EXPECT_EQ(support(p4), IntervalRegion::parse("(0,1/2)"));
  EXPECT_EQ(product_of_constants(to_form11(cat({y(1, 1), c(1, x(3))}))), x(3));
}

TEST(Form12, Segments) {
  auto f = to_form12(to_form11(w1()));
  ASSERT_EQ(f.L.size(), 3u);
  EXPECT_EQ(f.L[0], 2u);
  EXPECT_EQ(f.L[2], 4u);
  auto [tail, head] = segments(f, 2);
  EXPECT_EQ(tail, cat({y(1, 1, 2), c(1, inv(x(1)))}));
  EXPECT_EQ(multiply(head, tail), w1());
}
