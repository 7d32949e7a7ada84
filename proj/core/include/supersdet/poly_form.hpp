#pragma once

// Polynomial differential forms on R^n with coefficients in Q(i).

#include "supersdet/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace supersdet {

struct FormKey {
  std::vector<int> powers;  // exponent of x_1..x_n
  std::vector<int> dx;      // strictly increasing, 1-based

  friend auto operator<=>(const FormKey&, const FormKey&) = default;
  friend bool operator==(const FormKey&, const FormKey&) = default;
};

class PolyForm {
 public:
  PolyForm() = default;
  explicit PolyForm(int n) : n_(n) {}

  static PolyForm constant(int n, const GaussRational& c);
  /// c * x^powers dx_{i1} ^ dx_{i2} ^ ...; indices in any order (sign applied).
  static PolyForm monomial(int n, const GaussRational& c, std::vector<int> powers, std::vector<int> dx);
  static PolyForm x(int n, int i);
  static PolyForm dx(int n, int i);

  [[nodiscard]] int dimension() const { return n_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<FormKey, GaussRational>& terms() const { return terms_; }
  /// Exterior degrees present.
  [[nodiscard]] std::set<int> degrees() const;
  /// Exterior degree of a homogeneous form; throws std::domain_error if mixed or zero.
  [[nodiscard]] int degree() const;
  [[nodiscard]] int polynomial_degree() const;
  /// Component of exterior degree k.
  [[nodiscard]] PolyForm part(int k) const;

  [[nodiscard]] PolyForm d() const;
  [[nodiscard]] bool is_closed() const { return d().is_zero(); }
  /// Multiplies each degree-k component by f(k).
  template <class F>
  [[nodiscard]] PolyForm scale_by_degree(F f) const {
    PolyForm out(n_);
    for (const auto& [key, c] : terms_) out.add(key, c * f(static_cast<int>(key.dx.size())));
    return out;
  }

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator-(const PolyForm& a) { return PolyForm(a.n_) - a; }
  friend PolyForm operator*(const GaussRational& c, const PolyForm& a);
  /// Wedge product.
  friend PolyForm operator*(const PolyForm& a, const PolyForm& b);
  friend bool operator==(const PolyForm&, const PolyForm&) = default;

  /// e.g. "x1*dx2 - 2*x1^2*x3*dx1^dx3".
  [[nodiscard]] std::string str() const;

 private:
  void add(const FormKey& key, const GaussRational& c);
  int n_ = 0;
  std::map<FormKey, GaussRational> terms_;
};

std::ostream& operator<<(std::ostream& os, const PolyForm& f);

/// Some beta with d(beta) = omega, searching polynomial (k-1)-forms of
/// polynomial degree up to that of omega plus one; nullopt if none exists.
std::optional<PolyForm> find_primitive(const PolyForm& omega);
bool is_exact(const PolyForm& omega);
/// Equal modulo exact forms.
bool cohomologous(const PolyForm& a, const PolyForm& b);

/// Solves A x = b over Q(i) by Gaussian elimination; nullopt if inconsistent.
std::optional<std::vector<GaussRational>> solve_linear(std::vector<std::vector<GaussRational>> a,
                                                       std::vector<GaussRational> b);

}  // namespace supersdet
