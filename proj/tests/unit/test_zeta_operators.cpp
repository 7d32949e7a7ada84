#include "supersdet/zeta_operators.hpp"

#include "supersdet/multiplicative_sequence.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace supersdet;

namespace {
const auto P = BoundaryCondition::Periodic;
const auto AP = BoundaryCondition::Antiperiodic;
GradedPolynomial ph(int K, int k) { return GradedPolynomial::generator(ClassKind::Character, K, k); }
}  // namespace

TEST(ZetaOperators, RegularizedProducts) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(regularized_product_power(n).exponent, Rational(n, 2));
    EXPECT_EQ(regularized_product(n, Rational(1, 2)).log, (LogValue{0, Rational(n, 2), 0}));
  }
  EXPECT_EQ(regularized_product(3, 0).str(), "r^3/2");
  EXPECT_EQ(regularized_product(2, Rational(1, 2)).str(), "2");
  EXPECT_THROW(regularized_product(1, Rational(1, 3)), std::invalid_argument);
}

TEST(ZetaOperators, ZetaDerivativeAtZero) {
  // zeta_H(0, 1) = -1/2 and zeta_H'(0, 1) = -(1/2) log 2pi give -(n/2) log r.
  EXPECT_EQ(sequence_zeta_derivative(2, 0), (LogValue{-1, 0, 0}));
}

TEST(ZetaOperators, InverseDerivativeTraces) {
  // 2 sum_{l>=1} (2 pi i l)^{-2} = -1/12; antiperiodic modes give (2^{2k} - 1) times that.
  EXPECT_EQ(trace_inv_power(P, 2), Rational(-1, 12));
  EXPECT_EQ(trace_inv_power(AP, 2), Rational(-1, 4));
  EXPECT_EQ(trace_inv_power(P, 4), Rational(1, 720));
  EXPECT_EQ(trace_inv_power(AP, 4), Rational(1, 48));
  EXPECT_EQ(trace_inv_power(P, 6), Rational(-1, 30240));
}

TEST(ZetaOperators, ModeSums) {
  for (auto bc : {P, AP}) {
    for (int two_k = 2; two_k <= 6; two_k += 2) {
      double exact = trace_inv_power(bc, two_k).convert_to<double>();
      EXPECT_NEAR(trace_mode_sum(bc, two_k, 100000, true), exact, 1e-12);
      EXPECT_NEAR(trace_mode_sum(bc, two_k, 100000), exact, 1e-6);
    }
  }
  // The raw truncation error at 2k = 2 is about 2 / (4 pi^2 N).
  double raw = trace_mode_sum(P, 2, 100000) - trace_inv_power(P, 2).convert_to<double>();
  EXPECT_NEAR(raw, 2.0 / (4 * 9.869604401089358 * 100000), 1e-9);
}

TEST(ZetaOperators, FredholmSeries) {
  // log det = -sum_k T_k c(2k) / (2k).
  std::vector<Rational> T{Rational(3), Rational(5)};
  Rational expected = -(Rational(3) * Rational(-1, 12) / 2 + Rational(5) * Rational(1, 720) / 4);
  EXPECT_EQ(fredholm_log_det(T, P, Rational(0)), expected);
  EXPECT_EQ(fredholm_log_pf(T, P, Rational(0)), expected / 2);
}

TEST(ZetaOperators, FreeParts) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(free_det(KineticOperator::make(OperatorKind::A, n)).exponent, Rational(2 * n));
    EXPECT_EQ(free_pf(KineticOperator::make(OperatorKind::Eta2, n)).exponent, Rational(n, 2));
  }
  EXPECT_EQ(KineticOperator::make(OperatorKind::Eta2, 3).bc, AP);
  EXPECT_EQ(KineticOperator::make(OperatorKind::Eta2, 3, true).bc, P);
  EXPECT_EQ(KineticOperator::make(OperatorKind::A, 3).name(), "D_a");
}

TEST(ZetaOperators, NilpotentMatrices) {
  auto R = corpus_curvature(4, 4);
  EXPECT_TRUE(R.is_antisymmetric());
  EXPECT_TRUE(R.entries_nilpotent());
  EXPECT_TRUE(R.trace().is_zero());
  EXPECT_TRUE((R * R * R).trace().is_zero());
  NilpotentMatrix one(2);
  one.at(0, 0) = 1;
  EXPECT_FALSE(one.entries_nilpotent());
}

TEST(ZetaOperators, FormalSdetLowOrder) {
  // At K = 1, log sdet = T_1 (c_P(2) - c_AP(2)) / 4 = 4 ph1 / 24.
  EXPECT_EQ(sdet_formal(4, 1), GradedPolynomial::constant(ClassKind::Character, 1, 1) + Rational(1, 6) * ph(1, 1));
  for (int n = 1; n <= 8; ++n) {
    for (int K = 1; K <= 4; ++K) {
      EXPECT_EQ(sdet_formal(n, K), l_class(K, ClassKind::Character));
      EXPECT_EQ(sdet_formal(n, K, true), GradedPolynomial::constant(ClassKind::Character, K, 1));
    }
  }
}

TEST(ZetaOperators, ConcreteMatchesFormal) {
  for (int m : {4, 6, 8}) {
    auto R = corpus_curvature(4, m);
    auto concrete = sdet_concrete(R, 2);
    EXPECT_EQ(concrete, evaluate_on_curvature(sdet_formal(4, 2), R));
    EXPECT_EQ(concrete, evaluate_on_curvature(l_class(2, ClassKind::Character), R));
  }
  EXPECT_EQ(sdet_concrete(corpus_curvature(3, 6), 2, true), GrassmannElement(1));
}

TEST(ZetaOperators, OddTracesMustVanish) {
  NilpotentMatrix R(2);
  R.at(0, 0) = GrassmannElement::odd("a") * GrassmannElement::odd("b");
  EXPECT_THROW(concrete_scaled_traces(R, 1), std::domain_error);
}

TEST(ZetaOperators, Report) {
  auto j = sdet_report(4, 2, "formal", false);
  EXPECT_EQ(j["equal"], true);
  EXPECT_EQ(j["sdet"], j["l_class"]);
  EXPECT_EQ(sdet_report(4, 2, "concrete", true, 6)["sdet"]["grassmann"], "1");
  EXPECT_THROW(sdet_report(4, 2, "other", false), std::invalid_argument);
}
