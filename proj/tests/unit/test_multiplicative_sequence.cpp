#include "supersdet/multiplicative_sequence.hpp"

#include <gtest/gtest.h>

using namespace supersdet;

namespace {

GradedPolynomial p(int K, int i) { return GradedPolynomial::generator(ClassKind::Pontryagin, K, i); }

// Oracle: with y_j = x_j^2 at rational points, prod_j Q(sqrt(t y_j)) as a
// series in t has t^k coefficient L_k(e_1(y), ..., e_k(y)).
void check_against_roots(const TruncatedSeries& Q, int K, const std::vector<Rational>& y) {
  TruncatedSeries prod = TruncatedSeries::constant(K, 1);
  for (const auto& yj : y) {
    TruncatedSeries f(K);
    Rational yk = 1;
    for (int k = 0; k <= K; ++k) {
      f[k] = Q[2 * k] * yk;
      yk *= yj;
    }
    prod = prod * f;
  }
  std::vector<Rational> e(static_cast<std::size_t>(K + 1), Rational(0));
  e[0] = 1;
  for (const auto& yj : y) {
    for (int k = K; k >= 1; --k) e[static_cast<std::size_t>(k)] += yj * e[static_cast<std::size_t>(k - 1)];
  }
  std::map<GradedPolynomial::Monomial, Rational> values;
  auto L = multiplicative_sequence(Q, K);
  for (int k = 1; k <= K; ++k) {
    for (const auto& [m, c] : L[static_cast<std::size_t>(k - 1)].terms()) {
      Rational v = 1;
      for (std::size_t i = 0; i < m.size(); ++i) v *= pow(e[i + 1], m[i]);
      values[m] = v;
    }
  }
  for (int k = 1; k <= K; ++k) EXPECT_EQ(L[static_cast<std::size_t>(k - 1)].pair(values), prod[k]) << "k = " << k;
}

}  // namespace

TEST(MultiplicativeSequence, HirzebruchPolynomials) {
  const int K = 4;
  auto L = l_polynomials(K);
  EXPECT_EQ(L[0], Rational(1, 3) * p(K, 1));
  EXPECT_EQ(L[1], Rational(1, 45) * (Rational(7) * p(K, 2) - p(K, 1) * p(K, 1)));
  EXPECT_EQ(L[2], Rational(1, 945) * (Rational(62) * p(K, 3) - Rational(13) * p(K, 1) * p(K, 2) +
                                      Rational(2) * p(K, 1) * p(K, 1) * p(K, 1)));
  GradedPolynomial p1 = p(K, 1);
  EXPECT_EQ(L[3], Rational(1, 14175) * (Rational(381) * p(K, 4) - Rational(71) * p1 * p(K, 3) - Rational(19) * p(K, 2) * p(K, 2) +
                                        Rational(22) * p1 * p1 * p(K, 2) - Rational(3) * p1 * p1 * p1 * p1));
}

TEST(MultiplicativeSequence, AgreesWithFormalRoots) {
  std::vector<Rational> y{Rational(2), Rational(-1, 3), Rational(5, 7), Rational(3), Rational(-2, 5), Rational(1, 11), Rational(4), Rational(-3, 2)};
  check_against_roots(hirzebruch_series(8), 4, y);
  check_against_roots(l_series(8), 4, y);
  check_against_roots(series_sinh_half(8), 4, y);
}

TEST(MultiplicativeSequence, LClassInCharacters) {
  // prod (x/2)/tanh(x/2) = exp(sum_k a_k (2k)! ph_k) with log l_series = x^2/12 - x^4/1440 + ...
  GradedPolynomial ph1 = GradedPolynomial::generator(ClassKind::Character, 2, 1);
  GradedPolynomial ph2 = GradedPolynomial::generator(ClassKind::Character, 2, 2);
  GradedPolynomial expected = GradedPolynomial::constant(ClassKind::Character, 2, 1) + Rational(1, 6) * ph1 -
                              Rational(7, 60) * ph2 + Rational(1, 72) * ph1 * ph1;
  EXPECT_EQ(l_class(2, ClassKind::Character), expected);
}

TEST(MultiplicativeSequence, LClassInPontryaginClasses) {
  auto total = l_class(2, ClassKind::Pontryagin);
  EXPECT_EQ(total.part(1), Rational(1, 12) * p(2, 1));
  EXPECT_EQ(total.part(2), Rational(1, 720) * (Rational(7) * p(2, 2) - p(2, 1) * p(2, 1)));
}

TEST(MultiplicativeSequence, NewtonIdentities) {
  const int K = 3;
  // sum x^2 = p1, sum x^4 = p1^2 - 2 p2, sum x^6 = p1^3 - 3 p1 p2 + 3 p3.
  EXPECT_EQ(power_sum(1, K), p(K, 1));
  EXPECT_EQ(power_sum(2, K), p(K, 1) * p(K, 1) - Rational(2) * p(K, 2));
  EXPECT_EQ(power_sum(3, K), p(K, 1) * p(K, 1) * p(K, 1) - Rational(3) * p(K, 1) * p(K, 2) + Rational(3) * p(K, 3));
  auto total = l_class(K, ClassKind::Pontryagin);
  EXPECT_EQ(powersums_to_pontryagin(pontryagin_to_powersums(total)), total);
}

TEST(MultiplicativeSequence, RejectsBadSeries) {
  EXPECT_THROW(multiplicative_class(TruncatedSeries::x(8), 2), std::invalid_argument);
  EXPECT_THROW(multiplicative_class(l_series(2), 2), std::invalid_argument);
}
