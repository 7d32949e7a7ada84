#pragma once

// Zeta-regularized determinants and Pfaffians of the circle operators
//   D_a = d^2 - i R d,  D_eta1 = d,  D_eta2 = d + i R
// on a circle of length r, and the superdeterminant
//   sdet = pf(D_eta1) pf(D_eta2) / det(D_a)^{1/2}.
// Each factor is a free part r^q times exp of a Fredholm series in the
// nilpotent curvature. The Fredholm series depend on R only through the
// scaled traces r^{2k} Tr((iR)^{2k}); in formal mode these are the free
// generators 2 (2k)! ph_k, in concrete mode they are computed from a
// Grassmann-valued matrix.

#include "supersdet/boundary.hpp"
#include "supersdet/graded_polynomial.hpp"
#include "supersdet/grassmann.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace supersdet {

/// q0 log r + q2 log 2 + qpi log pi.
struct LogValue {
  Rational log_r{0};
  Rational log_2{0};
  Rational log_pi{0};

  friend LogValue operator+(const LogValue& a, const LogValue& b) {
    return {a.log_r + b.log_r, a.log_2 + b.log_2, a.log_pi + b.log_pi};
  }
  friend LogValue operator*(const Rational& c, const LogValue& a) {
    return {c * a.log_r, c * a.log_2, c * a.log_pi};
  }
  friend bool operator==(const LogValue&, const LogValue&) = default;
};

/// r^{log_r} 2^{log_2} pi^{log_pi}, the exponential of a LogValue.
struct RegularizedProduct {
  LogValue log;
  [[nodiscard]] bool is_pure_r_power() const { return log.log_2 == 0 && log.log_pi == 0; }
  [[nodiscard]] std::string str() const;
};

/// r^q.
struct RPower {
  Rational exponent{0};
  friend RPower operator*(const RPower& a, const RPower& b) { return {a.exponent + b.exponent}; }
  friend bool operator==(const RPower&, const RPower&) = default;
  [[nodiscard]] std::string str() const;
};

/// Derivative at s = 0 of sum_{k>=1} ((2 pi (k - shift)) / r)^{-ns} for
/// shift 0 or 1/2, from zeta_H(0, a) = 1/2 - a and
/// zeta_H'(0, a) = log Gamma(a) - (1/2) log 2pi.
LogValue sequence_zeta_derivative(int n, const Rational& shift);
/// Regularized product of {((2 pi (k - shift)) / r)^n}_{k>=1}.
RegularizedProduct regularized_product(int n, const Rational& shift);
/// Regularized product of {(2 pi k)^n / r^n}_{k>=1}; r^{n/2}. Throws
/// std::logic_error if the 2 pi contributions fail to cancel.
RPower regularized_product_power(int n);

/// Tr(d/dt^{-2k}) = c r^{2k} over the modes of the given boundary condition
/// (periodic without the zero mode); returns c.
Rational trace_inv_power(BoundaryCondition bc, int two_k);
/// sum_{l >= 1} (l - offset)^{-s}, summed directly over `terms` terms, plus
/// the Euler-Maclaurin remainder when `tail` is set.
double power_sum_direct(int s, double offset, std::int64_t terms, bool tail);
/// Numeric cross-check: sum over |l| <= modes of (r / (2 pi i l'))^{2k} at r = 1,
/// l' = l (periodic, l != 0) or l - 1/2 (antiperiodic, -modes < l <= modes),
/// optionally completed by the remainder of the omitted modes.
double trace_mode_sum(BoundaryCondition bc, int two_k, std::int64_t modes, bool tail = false);

/// n x n matrix over the even part of a Grassmann algebra.
class NilpotentMatrix {
 public:
  explicit NilpotentMatrix(int n);
  [[nodiscard]] int size() const { return n_; }
  GrassmannElement& at(int j, int k) { return m_[static_cast<std::size_t>(j * n_ + k)]; }
  [[nodiscard]] const GrassmannElement& at(int j, int k) const { return m_[static_cast<std::size_t>(j * n_ + k)]; }
  [[nodiscard]] bool is_antisymmetric() const;
  [[nodiscard]] bool entries_nilpotent() const;
  [[nodiscard]] GrassmannElement trace() const;
  friend NilpotentMatrix operator*(const NilpotentMatrix& a, const NilpotentMatrix& b);
  friend NilpotentMatrix operator*(const GaussRational& c, const NilpotentMatrix& a);

 private:
  int n_;
  std::vector<GrassmannElement> m_;
};

/// R_jk = sum_{a<b} C_jkab psi_a psi_b with a fixed integer tensor C,
/// antisymmetric in (j, k), over odd generators psi_1..psi_m.
NilpotentMatrix corpus_curvature(int n, int m);

/// (i r)^{2k} (1/2) Tr(R^{2k}) / (2k)!, the value of ph_k on the instance.
GrassmannElement curvature_to_ph(const NilpotentMatrix& R, int k);

/// Formal traces 2 (2k)! ph_k, k = 1..K.
std::vector<GradedPolynomial> formal_scaled_traces(int K);
/// r^{2k} Tr((iR)^{2k}), k = 1..K, with r the even symbol "r". Throws
/// std::domain_error if an odd-power trace of R is nonzero.
std::vector<GrassmannElement> concrete_scaled_traces(const NilpotentMatrix& R, int K);

/// -sum_k T_k c_bc(2k) / (2k) for scaled traces T_k.
template <class S>
S fredholm_log_det(const std::vector<S>& traces, BoundaryCondition bc, S zero) {
  S out = zero;
  for (std::size_t k = 1; k <= traces.size(); ++k) {
    int two_k = static_cast<int>(2 * k);
    Rational weight = -trace_inv_power(bc, two_k) / two_k;
    out = out + weight * traces[k - 1];
  }
  return out;
}

/// Half the Fredholm log-determinant (odd powers having vanished).
template <class S>
S fredholm_log_pf(const std::vector<S>& traces, BoundaryCondition bc, S zero) {
  return Rational(1, 2) * fredholm_log_det(traces, bc, zero);
}

enum class OperatorKind { A, Eta1, Eta2 };

struct KineticOperator {
  OperatorKind kind = OperatorKind::A;
  int n = 1;
  BoundaryCondition bc = BoundaryCondition::Periodic;

  /// Boundary conditions a, eta1 periodic and eta2 antiperiodic, or all
  /// periodic for the periodic-periodic circle.
  static KineticOperator make(OperatorKind kind, int n, bool periodic_periodic = false);
  [[nodiscard]] std::string name() const;
  [[nodiscard]] bool has_curvature() const { return kind != OperatorKind::Eta1; }
};

/// Free part r^q times exp(log_fredholm).
template <class S>
struct ZetaFactor {
  RPower free;
  S log_fredholm;
};

/// Free part of det: D_a has r^{2n} (two conjugate mode families of second
/// order), first-order operators r^n.
RPower free_det(const KineticOperator& op);
/// Free part of pf, half of free_det's exponent.
RPower free_pf(const KineticOperator& op);

template <class S>
ZetaFactor<S> zeta_det(const KineticOperator& op, const std::vector<S>& traces, S zero) {
  if (!op.has_curvature()) return {free_det(op), zero};
  return {free_det(op), fredholm_log_det(traces, op.bc, zero)};
}

template <class S>
ZetaFactor<S> zeta_pf(const KineticOperator& op, const std::vector<S>& traces, S zero) {
  if (!op.has_curvature()) return {free_pf(op), zero};
  return {free_pf(op), fredholm_log_pf(traces, op.bc, zero)};
}

template <class S>
struct Superdeterminant {
  RPower free;
  S log_value;
};

/// pf(D_eta1) pf(D_eta2) / det(D_a)^{1/2} with the square root taken by
/// halving the exponent. Throws std::logic_error unless the r-powers cancel.
template <class S>
Superdeterminant<S> superdeterminant(int n, const std::vector<S>& traces, S zero, bool periodic_periodic = false) {
  auto a = zeta_det(KineticOperator::make(OperatorKind::A, n, periodic_periodic), traces, zero);
  auto e1 = zeta_pf(KineticOperator::make(OperatorKind::Eta1, n, periodic_periodic), traces, zero);
  auto e2 = zeta_pf(KineticOperator::make(OperatorKind::Eta2, n, periodic_periodic), traces, zero);
  RPower free{e1.free.exponent + e2.free.exponent - a.free.exponent / 2};
  if (free.exponent != 0) throw std::logic_error("superdeterminant: r-powers do not cancel");
  S log_value = e1.log_fredholm + e2.log_fredholm - Rational(1, 2) * a.log_fredholm;
  return {free, log_value};
}

/// Formal superdeterminant exp(log sdet) in ph_1..ph_K.
GradedPolynomial sdet_formal(int n, int K, bool periodic_periodic = false);
/// Concrete superdeterminant on a Grassmann curvature matrix.
GrassmannElement sdet_concrete(const NilpotentMatrix& R, int K, bool periodic_periodic = false);
/// Evaluates a polynomial in ph_k at ph_k = curvature_to_ph(R, k).
GrassmannElement evaluate_on_curvature(const GradedPolynomial& in_ph, const NilpotentMatrix& R);

/// {n, K, mode, sdet, l_class, equal}; sdet and l_class are GradedPolynomial
/// JSON in formal mode and {"grassmann": text} in concrete mode. In the
/// periodic-periodic variant l_class is replaced by the constant 1.
nlohmann::json sdet_report(int n, int K, const std::string& mode, bool periodic_periodic, int odd_generators = 4);

}  // namespace supersdet
