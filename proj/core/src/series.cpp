#include "supersdet/series.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace supersdet {

namespace {

std::optional<int> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  for (int k = 0; k <= a.order(); ++k) {
    if (a[k] != b[k]) return k;
  }
  return std::nullopt;
}

void require_even_index(int two_k, const char* where) {
  if (two_k < 2 || two_k % 2 != 0) throw std::invalid_argument(std::string(where) + ": need 2k >= 2");
}

}  // namespace

Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli: negative index");
  if (m > 1 && m % 2 == 1) return 0;
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= m) {
    auto n = static_cast<unsigned>(cache.size());
    Rational s = 0;
    for (unsigned j = 0; j < n; ++j) s += Rational(binomial(n + 1, j)) * cache[j];
    cache.push_back(-s / Rational(n + 1));
  }
  return cache[static_cast<std::size_t>(m)];
}

double PiValue::to_double() const {
  return static_cast<double>(coeff) * std::pow(std::numbers::pi, power);
}

std::string PiValue::str() const {
  if (power == 0 || coeff == 0) return to_string(coeff);
  return to_string(coeff) + "*pi^" + std::to_string(power);
}

PiValue zeta_even(int two_k) {
  require_even_index(two_k, "zeta_even");
  int k = two_k / 2;
  Rational c = bernoulli(two_k) * pow(Rational(2), two_k) / Rational(2 * factorial(two_k));
  return {k % 2 == 1 ? c : -c, two_k};
}

Rational zeta_over_2pii(int two_k) {
  require_even_index(two_k, "zeta_over_2pii");
  return -bernoulli(two_k) / Rational(2 * factorial(two_k));
}

PiValue lambda_half(int two_k) {
  PiValue z = zeta_even(two_k);
  return {z.coeff * (pow(Rational(2), two_k) - 1), z.power};
}

Rational lambda_over_2pii(int two_k) { return zeta_over_2pii(two_k) * (pow(Rational(2), two_k) - 1); }

// --- TruncatedSeries -------------------------------------------------------

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::x(int order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

bool TruncatedSeries::even_only() const {
  for (int k = 1; k <= order(); k += 2) {
    if (c_[static_cast<std::size_t>(k)] != 0) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
  for (auto& c : a.c_) c *= s;
  return a;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
  if (g[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
  int n = std::min(order(), g.order());
  TruncatedSeries out(n);
  TruncatedSeries p = constant(n, 1);
  for (int k = 0; k <= n; ++k) {
    out += (*this)[k] * p;
    p = p * g;
  }
  return out;
}

TruncatedSeries TruncatedSeries::rescale(const Rational& a) const {
  TruncatedSeries out = *this;
  Rational p = 1;
  for (int k = 0; k <= order(); ++k) {
    out[k] *= p;
    p *= a;
  }
  return out;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries out(std::max(order() - 1, 0));
  for (int k = 1; k <= order(); ++k) out[k - 1] = Rational(k) * (*this)[k];
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty() || c_[0] == 0) throw std::domain_error("inverse: constant term is zero");
  TruncatedSeries out(order());
  out[0] = 1 / c_[0];
  for (int k = 1; k <= order(); ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += (*this)[j] * out[k - j];
    out[k] = -s * out[0];
  }
  return out;
}

TruncatedSeries TruncatedSeries::log() const {
  if (c_.empty() || c_[0] != 1) throw std::domain_error("log: constant term must be 1");
  // (log f)' = f'/f.
  TruncatedSeries q = derivative() * inverse();
  TruncatedSeries out(order());
  for (int k = 1; k <= order(); ++k) out[k] = q[k - 1] / Rational(k);
  return out;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!c_.empty() && c_[0] != 0) throw std::domain_error("exp: constant term must be 0");
  // e' = f' e, solved coefficientwise.
  TruncatedSeries out(order());
  out[0] = 1;
  for (int k = 1; k <= order(); ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += Rational(j) * (*this)[j] * out[k - j];
    out[k] = s / Rational(k);
  }
  return out;
}

TruncatedSeries TruncatedSeries::in_square() const {
  TruncatedSeries out(order() / 2);
  for (int k = 0; 2 * k <= order(); ++k) out[k] = (*this)[2 * k];
  return out;
}

std::string TruncatedSeries::str() const {
  std::string out;
  for (int k = 0; k <= order(); ++k) {
    const Rational& c = (*this)[k];
    if (c == 0) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    Rational a = abs(c);
    std::string piece = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (out.empty()) out = c < 0 ? "-" + piece : piece;
    else out += (c < 0 ? " - " : " + ") + piece;
  }
  return (out.empty() ? "0" : out) + " + O(x^" + std::to_string(order() + 1) + ")";
}

TruncatedSeries series_sinh_half(int order) {
  TruncatedSeries s(order);
  for (int k = 0; 2 * k <= order; ++k) {
    s[2 * k] = Rational(1) / (pow(Rational(2), 2 * k) * Rational(factorial(2 * k + 1)));
  }
  return s;
}

TruncatedSeries series_cosh_half(int order) {
  TruncatedSeries s(order);
  for (int k = 0; 2 * k <= order; ++k) {
    s[2 * k] = Rational(1) / (pow(Rational(2), 2 * k) * Rational(factorial(2 * k)));
  }
  return s;
}

TruncatedSeries series_cosh(int order) { return series_cosh_half(order).rescale(2); }

TruncatedSeries l_series(int order) { return series_cosh_half(order) * series_sinh_half(order).inverse(); }

TruncatedSeries hirzebruch_series(int order) { return l_series(order).rescale(2); }

TruncatedSeries zeta_exponent(int order, Rational (*weight)(int)) {
  TruncatedSeries s(order);
  for (int two_k = 2; two_k <= order; two_k += 2) s[two_k] = -2 * weight(two_k) / Rational(two_k);
  return s;
}

TruncatedSeries log_l_series_from_zeta(int order) {
  TruncatedSeries s(order);
  for (int two_k = 2; two_k <= order; two_k += 2) {
    s[two_k] = 2 * (zeta_over_2pii(two_k) - lambda_over_2pii(two_k)) / Rational(two_k);
  }
  return s;
}

ExponentialFormsReport verify_exponential_forms(int order) {
  ExponentialFormsReport r;
  r.order = order;
  if (order <= 0) return r;
  TruncatedSeries from_zeta = zeta_exponent(order, zeta_over_2pii).exp();
  TruncatedSeries from_lambda = zeta_exponent(order, lambda_over_2pii).exp();
  r.sinh_half_mismatch = first_mismatch(series_sinh_half(order), from_zeta);
  r.cosh_half_mismatch = first_mismatch(series_cosh_half(order), from_lambda);
  r.cosh_mismatch = first_mismatch(series_cosh(order), from_lambda);
  return r;
}

}  // namespace supersdet
