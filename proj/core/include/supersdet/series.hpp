#pragma once

// Bernoulli numbers, even zeta values and exact truncated power series.

#include "supersdet/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supersdet {

/// B_m from sum_{j<=m} C(m+1, j) B_j = 0 (so B_1 = -1/2). Odd m > 1 give 0.
Rational bernoulli(int m);

/// coeff * pi^power.
struct PiValue {
  Rational coeff{0};
  int power = 0;

  friend PiValue operator*(const PiValue& a, const PiValue& b) {
    return {a.coeff * b.coeff, a.power + b.power};
  }
  friend bool operator==(const PiValue&, const PiValue&) = default;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string str() const;
};

/// zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!).
PiValue zeta_even(int two_k);
/// zeta(2k) / (2 pi i)^{2k} = -B_{2k} / (2 (2k)!).
Rational zeta_over_2pii(int two_k);
/// sum_{n>=1} (n - 1/2)^{-2k} = (2^{2k} - 1) zeta(2k).
PiValue lambda_half(int two_k);
/// lambda_half(2k) / (2 pi i)^{2k}.
Rational lambda_over_2pii(int two_k);

/// c_0 + c_1 x + ... + c_N x^N, exact.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {}
  TruncatedSeries(int order, std::vector<Rational> coeffs);

  static TruncatedSeries constant(int order, const Rational& c);
  static TruncatedSeries x(int order);

  [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
  [[nodiscard]] const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  Rational& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
  [[nodiscard]] bool even_only() const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// f(g(x)); g must have zero constant term.
  [[nodiscard]] TruncatedSeries compose(const TruncatedSeries& g) const;
  /// f(a x).
  [[nodiscard]] TruncatedSeries rescale(const Rational& a) const;
  /// Requires constant term 1.
  [[nodiscard]] TruncatedSeries log() const;
  /// Requires constant term 0.
  [[nodiscard]] TruncatedSeries exp() const;
  /// Requires nonzero constant term.
  [[nodiscard]] TruncatedSeries inverse() const;
  [[nodiscard]] TruncatedSeries derivative() const;
  /// f(x) = g(x^2): returns g truncated at order/2.
  [[nodiscard]] TruncatedSeries in_square() const;

  [[nodiscard]] std::string str() const;

 private:
  std::vector<Rational> c_;
};

/// sinh(x/2) / (x/2).
TruncatedSeries series_sinh_half(int order);
/// cosh(x/2).
TruncatedSeries series_cosh_half(int order);
TruncatedSeries series_cosh(int order);
/// (x/2) / tanh(x/2).
TruncatedSeries l_series(int order);
/// x / tanh(x) = l_series(2x), the series whose multiplicative sequence gives
/// the classical L-polynomials.
TruncatedSeries hirzebruch_series(int order);

/// -sum_k x^{2k} 2 w(2k) / (2k) for weights w(2k) given per even index.
TruncatedSeries zeta_exponent(int order, Rational (*weight)(int));
/// sum_k 2 (zeta(2k) - lambda(2k)) / (2k (2 pi i)^{2k}) x^{2k}.
TruncatedSeries log_l_series_from_zeta(int order);

struct ExponentialFormsReport {
  int order = 0;
  /// First order at which the candidate differs, if any.
  std::optional<int> sinh_half_mismatch;
  std::optional<int> cosh_half_mismatch;
  std::optional<int> cosh_mismatch;
  [[nodiscard]] bool sinh_half_ok() const { return !sinh_half_mismatch; }
  [[nodiscard]] bool cosh_half_ok() const { return !cosh_half_mismatch; }
  [[nodiscard]] bool cosh_ok() const { return !cosh_mismatch; }
};

/// Compares sinh(x/2)/(x/2) with exp(-sum x^{2k} 2 zeta(2k)/(2k (2pi i)^{2k}))
/// and both cosh(x/2) and cosh(x) with the lambda analogue, to order N.
ExponentialFormsReport verify_exponential_forms(int order);

}  // namespace supersdet
