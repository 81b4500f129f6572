#include <gtest/gtest.h>

#include "dragon/weight_poly.hpp"

using namespace dragon;

TEST(WeightPoly, Arithmetic) {
  const WeightPoly x = WeightPoly::monomial(1);
  const WeightPoly one = WeightPoly::constant(1);
  EXPECT_EQ(((x + one) * (x + one)).toString(), "x^2 + 2x + 1");
  EXPECT_TRUE(WeightPoly{}.isZero());
  EXPECT_TRUE(WeightPoly::constant(0).isZero());
  WeightPoly p = x;
  p.shift(-3);
  EXPECT_EQ(p.coefficient(-2), 1);
  EXPECT_EQ(p.coefficient(1), 0);
}

TEST(WeightPoly, BinomialPower) {
  const WeightPoly p = WeightPoly::binomialPower(2, 2, 3);
  EXPECT_EQ(p.toString(), "x^6 + 6x^4 + 12x^2 + 8");
  EXPECT_EQ(p.evaluateAtOne(), 27);
  EXPECT_EQ(WeightPoly::binomialPower(2, 1, 0), WeightPoly::constant(1));
}

TEST(WeightPoly, CancellationDropsTerms) {
  WeightPoly p = WeightPoly::monomial(2, 3);
  p += WeightPoly::monomial(2, -3);
  EXPECT_TRUE(p.isZero());
}
