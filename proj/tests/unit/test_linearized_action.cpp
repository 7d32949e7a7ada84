#include "supersdet/linearized_action.hpp"

#include <gtest/gtest.h>

using namespace supersdet;

namespace {
const GaussRational I = GaussRational::i();
GrassmannElement f(const char* fam, int j, int order = 0) { return GrassmannElement::even(field_symbol(fam, j, order)); }
GrassmannElement o(const char* fam, int j, int order = 0) { return GrassmannElement::odd(field_symbol(fam, j, order)); }
}  // namespace

TEST(LinearizedAction, Symbols) {
  EXPECT_EQ(field_symbol("a", 2, 1), "a.2'");
  EXPECT_EQ(curvature_entry(2, 1), -curvature_entry(1, 2));
  EXPECT_TRUE(curvature_entry(3, 3).is_zero());
}

TEST(LinearizedAction, TotalDerivativesVanish) {
  EXPECT_TRUE(total_derivative_normal_form(f("a", 1) * f("a", 1, 1)).is_zero());
  EXPECT_TRUE(total_derivative_normal_form(o("eta1", 1) * o("eta1", 1, 2)).is_zero());
  // a a'' ~ -a' a'.
  EXPECT_EQ(total_derivative_normal_form(f("a", 1) * f("a", 1, 2)),
            total_derivative_normal_form(-(f("a", 1, 1) * f("a", 1, 1))));
}

TEST(LinearizedAction, ComputedShape) {
  auto act = expand_linearized_action(2);
  LagrangianShape expected;
  expected.coeff = {GaussRational(-1), I, -I, -I, GaussRational(1), GaussRational(1)};
  EXPECT_EQ(act.shape, expected);
  EXPECT_EQ(lagrangian_from_shape(act.shape, 2), act.normal_form);
}

TEST(LinearizedAction, ComputedOperators) {
  auto act = expand_linearized_action(3);
  ASSERT_EQ(act.operators.size(), 3u);
  const auto& a = act.operators[0];
  EXPECT_EQ(a.family, "a");
  EXPECT_EQ(a.id, (std::vector<GaussRational>{0, 0, 1}));
  EXPECT_EQ(a.curv, (std::vector<GaussRational>{0, I, 0}));
  EXPECT_EQ(act.prefactor.at("a"), GaussRational(1));
  EXPECT_EQ(act.operators[1].id, (std::vector<GaussRational>{0, 1}));
  EXPECT_EQ(act.prefactor.at("eta1"), I);
  EXPECT_EQ(act.operators[2].curv, (std::vector<GaussRational>{I, 0}));
  EXPECT_EQ(act.prefactor.at("eta2"), I);
  GrassmannElement sum;
  for (const auto& op : act.operators) sum += act.prefactor.at(op.family) * quadratic_form(op, 3);
  for (int j = 1; j <= 3; ++j) sum += f("G", j) * f("G", j);
  EXPECT_EQ(total_derivative_normal_form(sum), act.normal_form);
}

TEST(LinearizedAction, BoundaryConditions) {
  auto act = expand_linearized_action(2);
  EXPECT_EQ(act.boundary.at("a"), BoundaryCondition::Periodic);
  EXPECT_EQ(act.boundary.at("eta1"), BoundaryCondition::Periodic);
  EXPECT_EQ(act.boundary.at("eta2"), BoundaryCondition::Antiperiodic);
  EXPECT_EQ(act.boundary.at("G"), BoundaryCondition::Antiperiodic);
  EXPECT_EQ(act.boundary, reference_boundary());
}

TEST(LinearizedAction, ComparisonWithDisplayedForm) {
  auto cmp = compare_with_reference(expand_linearized_action(2));
  EXPECT_TRUE(cmp.boundary_match);
  EXPECT_EQ(cmp.global_sign, -1);
  EXPECT_EQ(cmp.curvature_sign, -1);
  int mismatches = 0;
  for (const auto& s : cmp.structures) mismatches += s.match ? 0 : 1;
  EXPECT_EQ(mismatches, 1);
  EXPECT_EQ(cmp.operator_signs.at("a"), (std::vector<int>{-1}));
  EXPECT_EQ(cmp.operator_signs.at("eta2"), (std::vector<int>{1}));
  EXPECT_FALSE(cmp.exact());
}

TEST(LinearizedAction, OperatorRendering) {
  EXPECT_EQ(reference_operators()[0].str(), "d^2 - i R d");
  EXPECT_EQ(reference_operators()[2].str(), "d + i R");
}
