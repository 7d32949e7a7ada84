#pragma once

// Exact supernumbers: a finite exterior algebra on named odd generators,
// tensored with Laurent polynomials in named even indeterminates, with
// coefficients in Q(i).
//
// Canonical form: every term stores its odd generators as a strictly
// increasing (lexicographic) list of names and its even part as a sorted
// name -> nonzero exponent map. Products re-sort odd factors and carry the
// permutation sign; repeated odd factors vanish.
//
// Names containing a '.' are jet symbols: the time derivative sends "a.1" to
// "a.1'" and "a.1'" to "a.1''". The name "t" is the time coordinate. Every
// other name is constant in time.

#include "supersdet/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace supersdet {

using OddMonomial = std::vector<std::string>;
using EvenMonomial = std::map<std::string, int>;

struct TermKey {
  OddMonomial odd;
  EvenMonomial even;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
  friend bool operator==(const TermKey&, const TermKey&) = default;
};

enum class Parity { Even, Odd, Mixed };

class GrassmannElement {
 public:
  GrassmannElement() = default;
  GrassmannElement(int c);  // NOLINT(google-explicit-constructor)
  GrassmannElement(GaussRational c);  // NOLINT(google-explicit-constructor)

  static GrassmannElement odd(const std::string& name);
  static GrassmannElement even(const std::string& name, int power = 1);
  static GrassmannElement term(GaussRational coeff, OddMonomial odd, EvenMonomial even);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Parity parity() const;
  [[nodiscard]] bool is_even() const { return parity() == Parity::Even || is_zero(); }
  [[nodiscard]] bool is_odd() const { return parity() == Parity::Odd || is_zero(); }

  [[nodiscard]] const std::map<TermKey, GaussRational>& terms() const { return terms_; }

  /// Coefficient of an exact canonical key (zero when absent).
  [[nodiscard]] GaussRational coefficient(const TermKey& key) const;
  /// Terms with no odd generators.
  [[nodiscard]] GrassmannElement body() const;
  /// True when some term contains generator `name` (odd or even).
  [[nodiscard]] bool mentions(const std::string& name) const;

  GrassmannElement& operator+=(const GrassmannElement& o);
  GrassmannElement& operator-=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GrassmannElement& o);
  GrassmannElement& operator*=(const GaussRational& c);

  friend GrassmannElement operator+(GrassmannElement a, const GrassmannElement& b) { return a += b; }
  friend GrassmannElement operator-(GrassmannElement a, const GrassmannElement& b) { return a -= b; }
  friend GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b);
  friend GrassmannElement operator*(GrassmannElement a, const GaussRational& c) { return a *= c; }
  friend GrassmannElement operator*(const GaussRational& c, GrassmannElement a) { return a *= c; }
  friend GrassmannElement operator-(const GrassmannElement& a);
  friend bool operator==(const GrassmannElement&, const GrassmannElement&) = default;

  /// Inverse of an element whose odd-free part is a single monomial term
  /// (c * monomial) and whose remaining terms are nilpotent. Throws
  /// std::domain_error otherwise.
  [[nodiscard]] GrassmannElement inverse() const;

  /// Canonical sorted rendering, e.g. "2i*nu1*rho1 + t*r^-1".
  [[nodiscard]] std::string str() const;

 private:
  void add_term(const TermKey& key, const GaussRational& c);
  std::map<TermKey, GaussRational> terms_;
};

std::ostream& operator<<(std::ostream& os, const GrassmannElement& g);

GrassmannElement power(const GrassmannElement& x, unsigned n);

/// exp of a nilpotent element (series terminates). Throws if not nilpotent
/// within the generator count.
GrassmannElement exp_nilpotent(const GrassmannElement& x);

/// Left derivative with respect to an odd generator (an odd derivation).
GrassmannElement d_odd(const GrassmannElement& f, const std::string& name);
/// Derivative with respect to an even indeterminate (Laurent exponents allowed).
GrassmannElement d_even(const GrassmannElement& f, const std::string& name);
/// d/dt: differentiates "t" and advances every jet symbol by one order.
GrassmannElement d_time(const GrassmannElement& f);

/// Berezin integral over `vars` = [v1, v2, ...]: a term v1*v2*...*X maps to X,
/// every term lacking one of the variables maps to 0. With vars = [theta1,
/// theta2] this fixes the orientation  int dtheta2 dtheta1 theta1*theta2 = 1.
GrassmannElement berezin(const GrassmannElement& f, const std::vector<std::string>& vars);

/// Simultaneous substitution of generators. Even names with negative powers
/// need images accepted by inverse(). Names absent from both maps are kept.
GrassmannElement substitute(const GrassmannElement& f,
                            const std::map<std::string, GrassmannElement>& even_images,
                            const std::map<std::string, GrassmannElement>& odd_images);

}  // namespace supersdet
