#pragma once

// Polynomials in Pontryagin classes p_1..p_K or Pontryagin characters
// ph_1..ph_K, both of cohomological degree 4k, truncated above degree 4K.

#include "supersdet/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <string>
#include <vector>

namespace supersdet {

enum class ClassKind { Pontryagin, Character };

/// "p" or "ph".
std::string symbol_prefix(ClassKind kind);

class GradedPolynomial {
 public:
  using Monomial = std::vector<int>;  // exponents of the K generators

  GradedPolynomial(ClassKind kind, int K);

  static GradedPolynomial constant(ClassKind kind, int K, const Rational& c);
  /// p_i or ph_i, 1 <= i <= K.
  static GradedPolynomial generator(ClassKind kind, int K, int i);

  [[nodiscard]] ClassKind kind() const { return kind_; }
  [[nodiscard]] int truncation() const { return K_; }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;
  /// Part of cohomological degree 4w.
  [[nodiscard]] GradedPolynomial part(int w) const;

  GradedPolynomial& operator+=(const GradedPolynomial& o);
  GradedPolynomial& operator-=(const GradedPolynomial& o);
  friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) { return a += b; }
  friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) { return a -= b; }
  friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
  friend GradedPolynomial operator*(const Rational& c, const GradedPolynomial& a);
  friend bool operator==(const GradedPolynomial&, const GradedPolynomial&) = default;

  /// exp of a polynomial without constant term.
  [[nodiscard]] GradedPolynomial exp() const;
  /// Replaces generator i by images[i-1]; the result has the images' kind.
  [[nodiscard]] GradedPolynomial substitute(const std::vector<GradedPolynomial>& images) const;
  /// sum_m coeff(m) * numbers[m]; monomials absent from `numbers` count as 0.
  [[nodiscard]] Rational pair(const std::map<Monomial, Rational>& numbers) const;

  /// e.g. "1 + 1/3*p1 - 1/45*p1^2 + 7/45*p2", ordered by degree.
  [[nodiscard]] std::string str() const;
  /// [{monomial: [...], num: "...", den: "..."}] in canonical order.
  [[nodiscard]] nlohmann::json to_json() const;

  static int weight(const Monomial& m);

 private:
  void add(const Monomial& m, const Rational& c);
  ClassKind kind_;
  int K_;
  std::map<Monomial, Rational> terms_;
};

/// Parses "1", "p1", "p1^2", "p1*p2", "p1^2*p2" (or ph...) into an exponent
/// vector of length K. Throws std::invalid_argument.
GradedPolynomial::Monomial parse_class_monomial(ClassKind kind, int K, const std::string& text);
std::string monomial_name(ClassKind kind, const GradedPolynomial::Monomial& m);

}  // namespace supersdet
