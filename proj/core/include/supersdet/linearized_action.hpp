#pragma once

// Berezin expansion of the linearized action <D~1 dv, D~2 dv> for a fluctuation
// superfield dv = a + theta1 eta1 + theta2 eta2 + theta1 theta2 G with values in
// R^n, where D~1 = D1 + theta1 R and R is an antisymmetric n x n matrix of even
// symbols R_jk (j < k). Component fields are jet symbols "a.j", "eta1.j",
// "eta2.j", "G.j".

#include "supersdet/boundary.hpp"
#include "supersdet/grassmann.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace supersdet {

/// Symbol of the matrix entry R_jk, with R_kj = -R_jk and R_jj = 0.
GrassmannElement curvature_entry(int j, int k);
/// Jet symbol "family.j" followed by `order` primes.
std::string field_symbol(const std::string& family, int j, int order = 0);

/// Integrates by parts so that every quadratic monomial carries all of its
/// t-derivatives on the factor with the lexicographically larger base name
/// (on the second factor when bases agree), then drops the total derivatives
/// u u^(odd) (u even) and eta eta^(even) (eta odd). Two Lagrangians differ by a
/// total derivative iff their normal forms agree.
GrassmannElement total_derivative_normal_form(const GrassmannElement& lagrangian);

/// Coefficients of a Lagrangian on the six quadratic structures
///   |a'|^2, <eta1, eta1'>, <eta2', eta2>, <R a, a'>, <R eta2, eta2>, <G, G>.
struct LagrangianShape {
  static constexpr std::array<const char*, 6> kNames = {
      "|a'|^2", "<eta1,eta1'>", "<eta2',eta2>", "<Ra,a'>", "<Reta2,eta2>", "<G,G>"};
  static constexpr std::array<bool, 6> kCurvature = {false, false, false, true, true, false};

  std::array<GaussRational, 6> coeff{};

  friend bool operator==(const LagrangianShape&, const LagrangianShape&) = default;
};

/// Normal form of sum_s coeff[s] * structure_s in dimension n.
GrassmannElement lagrangian_from_shape(const LagrangianShape& shape, int n);
/// Inverse of lagrangian_from_shape on its image; throws StructuralError when
/// the normal form has terms outside the span of the six structures.
LagrangianShape decompose_lagrangian(const GrassmannElement& normal_form, int n);

/// sum_m (id[m] Id + curv[m] R) d^m/dt^m acting on one component family.
struct ComponentOperator {
  std::string family;
  BoundaryCondition boundary = BoundaryCondition::Periodic;
  std::vector<GaussRational> id;
  std::vector<GaussRational> curv;

  [[nodiscard]] int order() const { return static_cast<int>(id.size()) - 1; }
  /// Same operator with R replaced by sign * R.
  [[nodiscard]] ComponentOperator with_curvature_sign(int sign) const;
  [[nodiscard]] std::string str() const;
  friend bool operator==(const ComponentOperator&, const ComponentOperator&) = default;
};

/// Normal form of <f, D f> = sum_j f_j (D f)_j.
GrassmannElement quadratic_form(const ComponentOperator& op, int n);

struct LinearizedAction {
  int n = 0;
  GrassmannElement integrand;     // <D~1 dv, D~2 dv>
  GrassmannElement lagrangian;    // int dtheta2 dtheta1 of the integrand
  GrassmannElement normal_form;
  LagrangianShape shape;
  /// Sector f of the Lagrangian equals prefactor[f] * <f, D_f f>, with D_f
  /// monic in its top derivative. Families a, eta1, eta2.
  std::vector<ComponentOperator> operators;
  std::map<std::string, GaussRational> prefactor;
  /// Boundary condition of each component family, read off from the
  /// holonomy r+r- acting on its theta-monomial.
  std::map<std::string, BoundaryCondition> boundary;
};

LinearizedAction expand_linearized_action(int n);

/// The component Lagrangian as commonly displayed:
/// |a'|^2 + i<eta2',eta2> - i<Ra,a'> + <Reta2,eta2> - i<eta1,eta1'> + <G,G>.
LagrangianShape reference_shape();
/// D_a = d^2 - i R d, D_eta1 = d, D_eta2 = d + i R with a, eta1 periodic and
/// eta2, G antiperiodic.
std::vector<ComponentOperator> reference_operators();
std::map<std::string, BoundaryCondition> reference_boundary();

struct StructureComparison {
  std::string structure;
  GaussRational computed;   // after global and curvature signs
  GaussRational reference;
  bool match = false;
};

struct ActionComparison {
  /// Signs eps (overall) and sigma (R -> sigma R) that maximise agreement.
  int global_sign = 1;
  int curvature_sign = 1;
  std::vector<StructureComparison> structures;
  /// Per operator: curvature signs under which it matches the reference.
  std::map<std::string, std::vector<int>> operator_signs;
  bool boundary_match = false;
  [[nodiscard]] bool lagrangian_match() const;
  [[nodiscard]] bool operators_match() const;
  [[nodiscard]] bool exact() const { return lagrangian_match() && operators_match() && boundary_match; }
};

ActionComparison compare_with_reference(const LinearizedAction& action);

}  // namespace supersdet
