#include "supersdet/series.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace supersdet;

namespace {
TruncatedSeries from(std::vector<Rational> c) {
  int order = static_cast<int>(c.size()) - 1;
  return TruncatedSeries(order, std::move(c));
}
}  // namespace

TEST(Series, LSeriesCoefficients) {
  // (x/2)/tanh(x/2) = 1 + x^2/12 - x^4/720 + x^6/30240 - x^8/1209600.
  EXPECT_EQ(l_series(8), from({1, 0, Rational(1, 12), 0, Rational(-1, 720), 0, Rational(1, 30240), 0, Rational(-1, 1209600)}));
}

TEST(Series, HirzebruchSeriesCoefficients) {
  // x/tanh x = 1 + x^2/3 - x^4/45 + 2x^6/945 - x^8/4725.
  EXPECT_EQ(hirzebruch_series(8), from({1, 0, Rational(1, 3), 0, Rational(-1, 45), 0, Rational(2, 945), 0, Rational(-1, 4725)}));
}

TEST(Series, HalfArgumentHyperbolics) {
  // sinh(x/2)/(x/2) = 1 + x^2/24 + x^4/1920; cosh(x/2) = 1 + x^2/8 + x^4/384.
  EXPECT_EQ(series_sinh_half(4), from({1, 0, Rational(1, 24), 0, Rational(1, 1920)}));
  EXPECT_EQ(series_cosh_half(4), from({1, 0, Rational(1, 8), 0, Rational(1, 384)}));
  EXPECT_EQ(series_cosh(4), from({1, 0, Rational(1, 2), 0, Rational(1, 24)}));
}

TEST(Series, ExpLogInverse) {
  TruncatedSeries f = from({1, 2, 3, 4, 5, 6});
  EXPECT_EQ(f.log().exp(), f);
  EXPECT_EQ(f * f.inverse(), TruncatedSeries::constant(5, 1));
  // exp(x) = sum x^k/k!.
  EXPECT_EQ(TruncatedSeries::x(4).exp(), from({1, 1, Rational(1, 2), Rational(1, 6), Rational(1, 24)}));
  EXPECT_THROW((void)TruncatedSeries::x(3).log(), std::domain_error);
}

TEST(Series, ComposeAndRescale) {
  TruncatedSeries x = TruncatedSeries::x(6);
  TruncatedSeries g = x + x * x;
  // exp(x) o (x + x^2) = exp(x + x^2).
  EXPECT_EQ(x.exp().compose(g), g.exp());
  EXPECT_EQ(hirzebruch_series(8).rescale(Rational(1, 2)), l_series(8));
  EXPECT_EQ(l_series(8).in_square(), from({1, Rational(1, 12), Rational(-1, 720), Rational(1, 30240), Rational(-1, 1209600)}));
}

TEST(Series, ZetaValues) {
  EXPECT_EQ(zeta_even(2).coeff, Rational(1, 6));
  EXPECT_EQ(zeta_even(4).coeff, Rational(1, 90));
  EXPECT_EQ(zeta_even(6).coeff, Rational(1, 945));
  // sum (n - 1/2)^{-2} = pi^2/2, sum (n - 1/2)^{-4} = pi^4/6.
  EXPECT_EQ(lambda_half(2).coeff, Rational(1, 2));
  EXPECT_EQ(lambda_half(4).coeff, Rational(1, 6));
  EXPECT_EQ(zeta_over_2pii(2), Rational(-1, 24));
  EXPECT_EQ(zeta_over_2pii(4), Rational(1, 1440));
  EXPECT_NEAR(zeta_even(2).to_double(), std::numbers::pi * std::numbers::pi / 6, 1e-15);
}

TEST(Series, ExponentialForms) {
  auto r = verify_exponential_forms(8);
  EXPECT_TRUE(r.sinh_half_ok());
  EXPECT_TRUE(r.cosh_half_ok());
  EXPECT_FALSE(r.cosh_ok());
  EXPECT_EQ(r.cosh_mismatch, 2);
}

TEST(Series, LogLSeriesFromZeta) {
  EXPECT_EQ(l_series(8).log(), log_l_series_from_zeta(8));
}
