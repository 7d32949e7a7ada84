#include "supersdet/poly_form.hpp"

#include <gtest/gtest.h>

using namespace supersdet;

namespace {
PolyForm x(int i) { return PolyForm::x(3, i); }
PolyForm dx(int i) { return PolyForm::dx(3, i); }
}  // namespace

TEST(PolyForm, WedgeIsGradedCommutative) {
  EXPECT_EQ(dx(1) * dx(2), -(dx(2) * dx(1)));
  EXPECT_TRUE((dx(1) * dx(1)).is_zero());
  PolyForm a = x(1) * dx(2);
  PolyForm b = dx(1) * dx(3);
  EXPECT_EQ(a * b, b * a);
}

TEST(PolyForm, ExteriorDerivative) {
  // d(x1^2 x2 dx3) = 2 x1 x2 dx1^dx3 + x1^2 dx2^dx3.
  PolyForm f = x(1) * x(1) * x(2) * dx(3);
  PolyForm expected = GaussRational(2) * x(1) * x(2) * dx(1) * dx(3) + x(1) * x(1) * dx(2) * dx(3);
  EXPECT_EQ(f.d(), expected);
  EXPECT_TRUE(f.d().d().is_zero());
}

TEST(PolyForm, LeibnizRule) {
  PolyForm a = x(1) * x(2) * dx(3);
  PolyForm b = x(3) * x(3) + x(1) * dx(2);
  // d(a b) = da b - a db for a of degree 1.
  EXPECT_EQ((a * b).d(), a.d() * b - a * b.d());
}

TEST(PolyForm, Degrees) {
  PolyForm f = x(1) + dx(1) * dx(2);
  EXPECT_EQ(f.degrees(), (std::set<int>{0, 2}));
  EXPECT_THROW((void)f.degree(), std::domain_error);
  EXPECT_EQ(f.part(2), dx(1) * dx(2));
  EXPECT_EQ((x(1) * x(1) * x(3)).polynomial_degree(), 3);
}

TEST(PolyForm, PoincareLemma) {
  PolyForm closed = x(2) * dx(1) + x(1) * dx(2);
  ASSERT_TRUE(closed.is_closed());
  auto prim = find_primitive(closed);
  ASSERT_TRUE(prim.has_value());
  EXPECT_EQ(prim->d(), closed);
  EXPECT_FALSE(find_primitive(x(1) * dx(2)).has_value());
  EXPECT_TRUE(is_exact(dx(1) * dx(2) * dx(3)));
  EXPECT_TRUE(cohomologous(dx(1) + (x(2) * x(2)).d(), dx(1)));
}

TEST(PolyForm, ConstantsAreClosedButNotExact) {
  PolyForm one = PolyForm::constant(3, 1);
  EXPECT_TRUE(one.is_closed());
  EXPECT_FALSE(is_exact(one));
}

TEST(PolyForm, LinearSolve) {
  // x + y = 3, x - y = 1.
  auto sol = solve_linear({{1, 1}, {1, -1}}, {3, 1});
  ASSERT_TRUE(sol.has_value());
  EXPECT_EQ((*sol)[0], GaussRational(2));
  EXPECT_EQ((*sol)[1], GaussRational(1));
  EXPECT_FALSE(solve_linear({{1, 1}, {2, 2}}, {1, 3}).has_value());
}

TEST(PolyForm, Rendering) {
  EXPECT_EQ((x(1) * dx(2)).str(), "x1*dx2");
  EXPECT_EQ(PolyForm(3).str(), "0");
}
