#include "supersdet/zeta_operators.hpp"

#include "supersdet/multiplicative_sequence.hpp"
#include "supersdet/series.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <numbers>

namespace supersdet {

namespace {

std::string odd_name(int a) { return "psi_" + std::to_string(a); }

std::string factor(const Rational& e, const std::string& base) {
  if (e == 0) return "";
  return e == 1 ? base : base + "^" + to_string(e);
}

}  // namespace

std::string RegularizedProduct::str() const {
  std::string out;
  for (const auto& piece : {factor(log.log_r, "r"), factor(log.log_2, "2"), factor(log.log_pi, "pi")}) {
    if (piece.empty()) continue;
    out += (out.empty() ? "" : "*") + piece;
  }
  return out.empty() ? "1" : out;
}

std::string RPower::str() const {
  std::string f = factor(exponent, "r");
  return f.empty() ? "1" : f;
}

LogValue sequence_zeta_derivative(int n, const Rational& shift) {
  if (n < 1) throw std::invalid_argument("sequence_zeta_derivative: n must be positive");
  Rational a = 1 - shift;
  // log Gamma(a) for a = 1 and a = 1/2.
  LogValue log_gamma;
  if (a == Rational(1, 2)) log_gamma.log_pi = Rational(1, 2);
  else if (a != 1) throw std::invalid_argument("sequence_zeta_derivative: shift must be 0 or 1/2");
  LogValue log_r_over_2pi{1, -1, -1};
  LogValue half_log_2pi{0, Rational(1, 2), Rational(1, 2)};
  Rational zeta_h0 = Rational(1, 2) - a;
  LogValue zeta_h_prime = log_gamma + Rational(-1) * half_log_2pi;
  return Rational(n) * (zeta_h0 * log_r_over_2pi + zeta_h_prime);
}

RegularizedProduct regularized_product(int n, const Rational& shift) {
  return {Rational(-1) * sequence_zeta_derivative(n, shift)};
}

RPower regularized_product_power(int n) {
  RegularizedProduct p = regularized_product(n, 0);
  if (!p.is_pure_r_power()) throw std::logic_error("regularized_product_power: 2pi terms did not cancel");
  return {p.log.log_r};
}

Rational trace_inv_power(BoundaryCondition bc, int two_k) {
  Rational c = 2 * zeta_over_2pii(two_k);
  if (bc == BoundaryCondition::Antiperiodic) c *= pow(Rational(2), two_k) - 1;
  return c;
}

double power_sum_direct(int s, double offset, std::int64_t terms, bool tail) {
  double sum = 0.0;
  for (std::int64_t m = terms; m >= 1; --m) sum += std::pow(static_cast<double>(m) - offset, -s);
  if (tail) {
    double x = static_cast<double>(terms) - offset;
    sum += std::pow(x, 1 - s) / (s - 1) - std::pow(x, -s) / 2 + s * std::pow(x, -s - 1) / 12;
  }
  return sum;
}

double trace_mode_sum(BoundaryCondition bc, int two_k, std::int64_t modes, bool tail) {
  double sign = (two_k / 2) % 2 == 0 ? 1.0 : -1.0;
  double offset = bc == BoundaryCondition::Periodic ? 0.0 : 0.5;
  return 2.0 * sign * power_sum_direct(two_k, offset, modes, tail) / std::pow(2.0 * std::numbers::pi, two_k);
}

NilpotentMatrix::NilpotentMatrix(int n) : n_(n), m_(static_cast<std::size_t>(n * n)) {
  if (n < 1) throw std::invalid_argument("NilpotentMatrix: size must be positive");
}

bool NilpotentMatrix::is_antisymmetric() const {
  for (int j = 0; j < n_; ++j) {
    for (int k = 0; k < n_; ++k) {
      if (!(at(j, k) == -at(k, j))) return false;
    }
  }
  return true;
}

bool NilpotentMatrix::entries_nilpotent() const {
  for (const auto& e : m_) {
    if (!e.is_even()) return false;
    for (const auto& [key, c] : e.terms()) {
      if (key.odd.empty()) return false;
    }
  }
  return true;
}

GrassmannElement NilpotentMatrix::trace() const {
  GrassmannElement out;
  for (int j = 0; j < n_; ++j) out += at(j, j);
  return out;
}

NilpotentMatrix operator*(const NilpotentMatrix& a, const NilpotentMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("NilpotentMatrix: size mismatch");
  NilpotentMatrix out(a.n_);
  for (int j = 0; j < a.n_; ++j) {
    for (int k = 0; k < a.n_; ++k) {
      GrassmannElement s;
      for (int l = 0; l < a.n_; ++l) s += a.at(j, l) * b.at(l, k);
      out.at(j, k) = s;
    }
  }
  return out;
}

NilpotentMatrix operator*(const GaussRational& c, const NilpotentMatrix& a) {
  NilpotentMatrix out = a;
  for (auto& e : out.m_) e *= c;
  return out;
}

NilpotentMatrix corpus_curvature(int n, int m) {
  NilpotentMatrix R(n);
  for (int j = 1; j <= n; ++j) {
    for (int k = j + 1; k <= n; ++k) {
      GrassmannElement e;
      for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) {
          int c = (3 * j + 5 * k + 7 * a + 11 * b) % 7 - 3;
          e += GaussRational(c) * (GrassmannElement::odd(odd_name(a)) * GrassmannElement::odd(odd_name(b)));
        }
      }
      R.at(j - 1, k - 1) = e;
      R.at(k - 1, j - 1) = -e;
    }
  }
  return R;
}

GrassmannElement curvature_to_ph(const NilpotentMatrix& R, int k) {
  NilpotentMatrix p = R;
  for (int j = 1; j < 2 * k; ++j) p = p * R;
  GaussRational c = i_pow(2 * k) * GaussRational(Rational(1) / (2 * Rational(factorial(2 * k))));
  return c * (GrassmannElement::even("r", 2 * k) * p.trace());
}

std::vector<GradedPolynomial> formal_scaled_traces(int K) {
  std::vector<GradedPolynomial> out;
  for (int k = 1; k <= K; ++k) {
    out.push_back(Rational(2 * factorial(2 * k)) * GradedPolynomial::generator(ClassKind::Character, K, k));
  }
  return out;
}

std::vector<GrassmannElement> concrete_scaled_traces(const NilpotentMatrix& R, int K) {
  NilpotentMatrix A = GaussRational::i() * R;
  NilpotentMatrix p = A;
  std::vector<GrassmannElement> out;
  for (int j = 1; j <= 2 * K; ++j) {
    if (j > 1) p = p * A;
    GrassmannElement tr = p.trace();
    if (j % 2 == 1) {
      if (!tr.is_zero()) throw std::domain_error("concrete_scaled_traces: odd-power trace " + std::to_string(j) + " is nonzero");
      continue;
    }
    out.push_back(GrassmannElement::even("r", j) * tr);
  }
  return out;
}

KineticOperator KineticOperator::make(OperatorKind kind, int n, bool periodic_periodic) {
  BoundaryCondition bc = (kind == OperatorKind::Eta2 && !periodic_periodic) ? BoundaryCondition::Antiperiodic
                                                                            : BoundaryCondition::Periodic;
  return {kind, n, bc};
}

std::string KineticOperator::name() const {
  switch (kind) {
    case OperatorKind::A: return "D_a";
    case OperatorKind::Eta1: return "D_eta1";
    case OperatorKind::Eta2: return "D_eta2";
  }
  return "";
}

RPower free_det(const KineticOperator& op) {
  // Modes l and -l each contribute the regularized product over l >= 1;
  // antiperiodic free parts are normalized like periodic ones.
  int order = op.kind == OperatorKind::A ? 2 : 1;
  return {Rational(2 * op.n) * regularized_product_power(order).exponent};
}

RPower free_pf(const KineticOperator& op) { return {free_det(op).exponent / 2}; }

GradedPolynomial sdet_formal(int n, int K, bool periodic_periodic) {
  auto sd = superdeterminant(n, formal_scaled_traces(K), GradedPolynomial(ClassKind::Character, K), periodic_periodic);
  return sd.log_value.exp();
}

GrassmannElement sdet_concrete(const NilpotentMatrix& R, int K, bool periodic_periodic) {
  if (!R.is_antisymmetric()) throw std::domain_error("sdet_concrete: curvature must be antisymmetric");
  auto sd = superdeterminant(R.size(), concrete_scaled_traces(R, K), GrassmannElement(), periodic_periodic);
  return exp_nilpotent(sd.log_value);
}

GrassmannElement evaluate_on_curvature(const GradedPolynomial& in_ph, const NilpotentMatrix& R) {
  std::vector<GrassmannElement> ph;
  for (int k = 1; k <= in_ph.truncation(); ++k) ph.push_back(curvature_to_ph(R, k));
  GrassmannElement out;
  for (const auto& [m, c] : in_ph.terms()) {
    GrassmannElement t = GaussRational(c);
    for (std::size_t k = 0; k < m.size(); ++k) t = t * power(ph[k], static_cast<unsigned>(m[k]));
    out += t;
  }
  return out;
}

nlohmann::json sdet_report(int n, int K, const std::string& mode, bool periodic_periodic, int odd_generators) {
  nlohmann::json out;
  out["n"] = n;
  out["K"] = K;
  out["mode"] = mode;
  out["variant"] = periodic_periodic ? "PP" : "PA";
  GradedPolynomial expected = periodic_periodic ? GradedPolynomial::constant(ClassKind::Character, K, 1)
                                                : l_class(K, ClassKind::Character);
  if (mode == "formal") {
    GradedPolynomial s = sdet_formal(n, K, periodic_periodic);
    out["sdet"] = s.to_json();
    out["l_class"] = expected.to_json();
    out["equal"] = s == expected;
  } else if (mode == "concrete") {
    NilpotentMatrix R = corpus_curvature(n, odd_generators);
    GrassmannElement s = sdet_concrete(R, K, periodic_periodic);
    GrassmannElement l = evaluate_on_curvature(expected, R);
    out["odd_generators"] = odd_generators;
    out["sdet"] = {{"grassmann", s.str()}};
    out["l_class"] = {{"grassmann", l.str()}};
    out["equal"] = s == l;
    out["formal_agrees"] = s == evaluate_on_curvature(sdet_formal(n, K, periodic_periodic), R);
  } else {
    throw std::invalid_argument("sdet_report: mode must be formal or concrete");
  }
  return out;
}

}  // namespace supersdet
