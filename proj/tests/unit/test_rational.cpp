#include <gtest/gtest.h>

#include "symcut/rational.hpp"

using namespace symcut;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(parse_rational("6/4"), frac(3, 2));
  EXPECT_EQ(parse_rational(" -2 "), Rational(-2));
  EXPECT_EQ(to_string(frac(-4, 6)), "-2/3");
  EXPECT_EQ(to_string(frac(8, 4)), "2");
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(frac(1, 0), std::invalid_argument);
}

TEST(Matrix, InverseAndDeterminant) {
  const Matrix a{{2, -1}, {-1, 2}};
  EXPECT_EQ(determinant(a), Rational(3));
  const auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  EXPECT_EQ(rank(Matrix{{1, 2}, {2, 4}}), 1u);
}

TEST(Matrix, SolveAndDefiniteness) {
  const Matrix a{{4, 1}, {1, 3}};
  const auto x = solve(a, {1, 2});
  ASSERT_TRUE(x);
  EXPECT_EQ(a * *x, (Vector{1, 2}));
  EXPECT_TRUE(positive_definite(a));
  EXPECT_FALSE(positive_definite(Matrix{{1, 2}, {2, 1}}));
}
