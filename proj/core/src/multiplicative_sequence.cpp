#include "supersdet/multiplicative_sequence.hpp"

#include <stdexcept>

namespace supersdet {

namespace {

// Power sums P_1..P_K in the p_i by Newton's identities.
std::vector<GradedPolynomial> power_sums_in_p(int K) {
  std::vector<GradedPolynomial> P;
  for (int k = 1; k <= K; ++k) {
    GradedPolynomial pk = Rational((k % 2 == 1 ? 1 : -1) * k) * GradedPolynomial::generator(ClassKind::Pontryagin, K, k);
    for (int i = 1; i < k; ++i) {
      Rational sign = i % 2 == 1 ? 1 : -1;
      pk += sign * (GradedPolynomial::generator(ClassKind::Pontryagin, K, i) * P[static_cast<std::size_t>(k - i - 1)]);
    }
    P.push_back(pk);
  }
  return P;
}

}  // namespace

GradedPolynomial power_sum(int k, int K) {
  if (k < 1 || k > K) throw std::invalid_argument("power_sum: index out of range");
  return power_sums_in_p(K)[static_cast<std::size_t>(k - 1)];
}

GradedPolynomial powersums_to_pontryagin(const GradedPolynomial& in_ph) {
  int K = in_ph.truncation();
  auto P = power_sums_in_p(K);
  std::vector<GradedPolynomial> images;
  for (int k = 1; k <= K; ++k) images.push_back(Rational(1) / Rational(factorial(2 * k)) * P[static_cast<std::size_t>(k - 1)]);
  return in_ph.substitute(images);
}

GradedPolynomial pontryagin_to_powersums(const GradedPolynomial& in_p) {
  int K = in_p.truncation();
  // e_k = (1/k) sum_{i=1..k} (-1)^{i-1} e_{k-i} P_i, with P_i = (2i)! ph_i.
  std::vector<GradedPolynomial> e{GradedPolynomial::constant(ClassKind::Character, K, 1)};
  for (int k = 1; k <= K; ++k) {
    GradedPolynomial ek(ClassKind::Character, K);
    for (int i = 1; i <= k; ++i) {
      Rational c = Rational(factorial(2 * i)) * (i % 2 == 1 ? 1 : -1);
      ek += c * (e[static_cast<std::size_t>(k - i)] * GradedPolynomial::generator(ClassKind::Character, K, i));
    }
    e.push_back(Rational(1, k) * ek);
  }
  return in_p.substitute({e.begin() + 1, e.end()});
}

GradedPolynomial multiplicative_class(const TruncatedSeries& Q, int K, ClassKind kind) {
  if (Q.order() < 2 * K) throw std::invalid_argument("multiplicative_class: series order below 2K");
  if (Q[0] != 1 || !Q.even_only()) throw std::invalid_argument("multiplicative_class: need an even unit series");
  // log prod Q(x_j) = sum_k a_k sum_j x_j^{2k} = sum_k a_k (2k)! ph_k.
  TruncatedSeries a = Q.log().in_square();
  GradedPolynomial exponent(ClassKind::Character, K);
  for (int k = 1; k <= K; ++k) {
    exponent += (a[k] * Rational(factorial(2 * k))) * GradedPolynomial::generator(ClassKind::Character, K, k);
  }
  GradedPolynomial in_ph = exponent.exp();
  return kind == ClassKind::Character ? in_ph : powersums_to_pontryagin(in_ph);
}

std::vector<GradedPolynomial> multiplicative_sequence(const TruncatedSeries& Q, int K) {
  GradedPolynomial total = multiplicative_class(Q, K);
  std::vector<GradedPolynomial> out;
  for (int k = 1; k <= K; ++k) out.push_back(total.part(k));
  return out;
}

std::vector<GradedPolynomial> l_polynomials(int K) { return multiplicative_sequence(hirzebruch_series(2 * K), K); }

GradedPolynomial l_class(int K, ClassKind kind) { return multiplicative_class(l_series(2 * K), K, kind); }

}  // namespace supersdet
