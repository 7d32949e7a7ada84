#include "supersdet/rational.hpp"
#include "supersdet/series.hpp"

#include <gtest/gtest.h>

using namespace supersdet;

TEST(Rational, ParsesSignedFractions) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-7/21"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, Printing) {
  EXPECT_EQ(to_string(Rational(-5, 10)), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(10), 3628800);
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
}

TEST(Rational, Powers) {
  EXPECT_EQ(pow(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(-1), 0), Rational(1));
}

TEST(GaussRational, FieldOperations) {
  GaussRational z{Rational(1), Rational(2)};
  EXPECT_EQ(z * z.inverse(), GaussRational(1));
  EXPECT_EQ(z * z.conj(), GaussRational(5));
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_EQ(to_string(GaussRational(Rational(1, 2), Rational(-3))), "(1/2-3i)");
  EXPECT_EQ(to_string(-GaussRational::i()), "-i");
}

TEST(GaussRational, PowersOfI) {
  EXPECT_EQ(i_pow(0), GaussRational(1));
  EXPECT_EQ(i_pow(1), GaussRational::i());
  EXPECT_EQ(i_pow(2), GaussRational(-1));
  EXPECT_EQ(i_pow(-1), -GaussRational::i());
  EXPECT_EQ(i_pow(7), -GaussRational::i());
}

TEST(Bernoulli, TabulatedValues) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(bernoulli(6), Rational(1, 42));
  EXPECT_EQ(bernoulli(8), Rational(-1, 30));
  EXPECT_EQ(bernoulli(10), Rational(5, 66));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  EXPECT_EQ(bernoulli(7), Rational(0));
}
