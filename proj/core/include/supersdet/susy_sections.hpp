#pragma once

// Sections of the line bundles L^k over the stack of fields, modelled in the
// function space C(R_+)[rho] (x) Omega(R^n): finite sums of r^q rho^e (x) alpha
// with q in (1/2)Z, e in {0,1}, alpha a polynomial form. The odd parameter rho
// is written to the left of the form and anticommutes with d and with odd
// forms.

#include "supersdet/poly_form.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace supersdet {

struct SectionKey {
  Rational q;      // power of r
  bool rho = false;

  friend bool operator<(const SectionKey& a, const SectionKey& b) {
    return a.q != b.q ? a.q < b.q : a.rho < b.rho;
  }
  friend bool operator==(const SectionKey& a, const SectionKey& b) { return a.q == b.q && a.rho == b.rho; }
};

class Section {
 public:
  Section() = default;
  explicit Section(int n) : n_(n) {}

  /// r^q (x) alpha, or r^q rho (x) alpha.
  static Section term(const Rational& q, const PolyForm& alpha, bool rho = false);

  [[nodiscard]] int dimension() const { return n_; }
  [[nodiscard]] bool is_zero() const { return parts_.empty(); }
  [[nodiscard]] const std::map<SectionKey, PolyForm>& parts() const { return parts_; }
  [[nodiscard]] bool depends_on_rho() const;

  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const GaussRational& c, const Section& s);
  /// Product with the Koszul sign (alpha rho' = (-1)^{deg alpha} rho' alpha).
  friend Section operator*(const Section& a, const Section& b);
  friend bool operator==(const Section&, const Section&) = default;

  /// e.g. "r^1/2 (x) dx1 + r^-1 rho (x) dx1^dx2".
  [[nodiscard]] std::string str() const;

 private:
  void add(const SectionKey& key, const PolyForm& f);
  int n_ = 0;
  std::map<SectionKey, PolyForm> parts_;
};

std::ostream& operator<<(std::ostream& os, const Section& s);

/// Q = 2i rho d/dr - d - i (rho/r) deg.
Section apply_Q(const Section& s);
bool is_supersymmetric(const Section& s);
/// Q(Q(s)).
Section q_squared(const Section& s);
/// (i/r) rho (x) d s, the closed form of Q^2.
Section q_squared_closed_form(const Section& s);

/// Residues mod 4 of the L-weight over all terms: deg alpha for rho-free
/// terms and deg beta + 1 for rho (x) beta.
std::set<int> grade(const Section& s);

/// c * (2 pi)^exponent with exponent in (1/2)Z.
struct TwoPiPower {
  Rational coeff{1};
  Rational exponent{0};

  friend TwoPiPower operator*(const TwoPiPower& a, const TwoPiPower& b) {
    return {a.coeff * b.coeff, a.exponent + b.exponent};
  }
  friend bool operator==(const TwoPiPower&, const TwoPiPower&) = default;
  [[nodiscard]] std::string str() const;
};

struct CocycleTerm {
  TwoPiPower scale;
  PolyForm form;
  friend bool operator==(const CocycleTerm&, const CocycleTerm&) = default;
};

/// r^{k/2} (x) omega -> (2 pi)^{-k/2} omega on the rho-free part, ordered by q.
/// Throws std::domain_error unless s is supersymmetric.
std::vector<CocycleTerm> to_cocycle(const Section& s);
/// Inverse of to_cocycle on rho-free supersymmetric sections. Throws
/// std::domain_error if a form is not closed or the exponent does not match
/// its degree.
Section from_closed_form(const std::vector<CocycleTerm>& cocycle);
/// Wedge product with the (2 pi) bookkeeping multiplied.
std::vector<CocycleTerm> cocycle_product(const std::vector<CocycleTerm>& a, const std::vector<CocycleTerm>& b);

/// One object per form term:
/// {coeff_num, coeff_den, [coeff_im_num, coeff_im_den,] two_pi_exponent, monomial, form_indices}.
nlohmann::json cocycle_json(const std::vector<CocycleTerm>& cocycle);

/// Random test sections over R^n from a seed. Closed forms are d(beta) plus a
/// constant-coefficient form.
struct SectionSampler {
  int n = 3;
  int max_poly_degree = 2;
  std::uint64_t seed = 1;

  [[nodiscard]] PolyForm random_form(int degree, std::uint64_t stream) const;
  [[nodiscard]] PolyForm random_closed_form(int degree, std::uint64_t stream) const;
};

}  // namespace supersdet
