#pragma once

// Closed oriented manifolds as cohomological data: Pontryagin numbers, or a
// finite-dimensional rational cohomology ring with Pontryagin classes and a
// fundamental class. Evaluates the L-genus and the pushforward
// s -> <s L(TX), [X]>.

#include "supersdet/graded_polynomial.hpp"
#include "supersdet/rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace supersdet {

class ManifoldError : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation };
  ManifoldError(Kind kind, std::string path, const std::string& message);
  [[nodiscard]] Kind kind() const { return kind_; }
  /// JSON pointer of the offending field ("" for whole-document errors).
  [[nodiscard]] const std::string& path() const { return path_; }

 private:
  Kind kind_;
  std::string path_;
};

struct PontryaginData {
  std::string name;
  int dimension = 0;
  /// Monomials over p_1..p_k, k = dimension / 4.
  std::map<GradedPolynomial::Monomial, Rational> numbers;
  BigInt signature{0};

  [[nodiscard]] int k() const { return dimension / 4; }
  /// Throws ManifoldError if the dimension is not divisible by 4 or a
  /// monomial has the wrong weight.
  void validate() const;
  static PontryaginData point();
};

struct BasisElement {
  std::string name;
  int degree = 0;
};

class CohomologyModel {
 public:
  using Vector = std::vector<Rational>;

  std::string name;
  int dimension = 0;
  BigInt signature{0};
  std::vector<BasisElement> basis;
  /// e_i e_j = sum_l c_l e_l for the listed pairs; unlisted products vanish
  /// except those with the unit.
  std::map<std::pair<int, int>, Vector> products;
  int fundamental = -1;
  /// p_i as coordinate vectors, i = 1, 2, ...
  std::map<int, Vector> pontryagin;

  [[nodiscard]] int index_of(const std::string& basis_name) const;
  [[nodiscard]] int unit_index() const;
  [[nodiscard]] Vector zero() const { return Vector(basis.size(), Rational(0)); }
  [[nodiscard]] Vector unit() const;
  [[nodiscard]] Vector element(int i) const;
  [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const;
  [[nodiscard]] Vector power(const Vector& x, int e) const;
  /// <x, [X]>, the coefficient of the fundamental class.
  [[nodiscard]] Rational integrate(const Vector& x) const;
  /// Part of x in degree d.
  [[nodiscard]] Vector part(const Vector& x, int d) const;
  /// Evaluates a polynomial in p_1..p_K on this ring.
  [[nodiscard]] Vector evaluate(const GradedPolynomial& in_p) const;
  /// Pontryagin numbers of the model.
  [[nodiscard]] PontryaginData pontryagin_data() const;

  /// Graded commutativity, associativity, degree compatibility and support of
  /// the fundamental functional; throws ManifoldError naming the failing
  /// pair or triple.
  void validate() const;
};

using Manifold = std::variant<PontryaginData, CohomologyModel>;

/// Parses and validates a manifold document.
Manifold load_manifold(const nlohmann::json& document);
/// Reads a file, or "builtin:NAME".
Manifold load_manifold_source(const std::string& source);
PontryaginData pontryagin_data(const Manifold& m);
nlohmann::json manifold_to_json(const Manifold& m);

/// Builtin names: cp2, cp4, hp2, k3, cp2xcp2, k3xcp2.
std::vector<std::string> builtin_manifold_names();
Manifold builtin_manifold(const std::string& name);
/// Provenance note describing how the builtin's data was computed.
std::string builtin_provenance(const std::string& name);

/// <L_k(p), [M]>. Partitions of k missing from M count as 0 and are appended
/// to `warnings` when given.
Rational l_genus(const PontryaginData& M, std::vector<std::string>* warnings = nullptr);

/// Parses sums of products of rational coefficients and basis names with
/// nonnegative powers, e.g. "2*h + h^2", "-1/3*h", "1", "0".
CohomologyModel::Vector parse_class(const CohomologyModel& M, const std::string& text);

/// <s L(TX), [X]>.
Rational pushforward(const CohomologyModel::Vector& s, const CohomologyModel& M);
/// Degree of pi_!(s) for s homogeneous of degree d.
inline int pushforward_degree(int d, const CohomologyModel& M) { return d - M.dimension; }

/// Pontryagin numbers of M x N from p(M x N) = p(M) x p(N); signatures multiply.
PontryaginData product_manifold(const PontryaginData& M, const PontryaginData& N);
/// Kunneth ring of M x N with basis names "x_1", "y_2" and "x_1*y_2".
CohomologyModel product_model(const CohomologyModel& M, const CohomologyModel& N);

}  // namespace supersdet
