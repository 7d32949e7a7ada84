#include "supersdet/susy_sections.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace supersdet;

namespace {
const GaussRational I = GaussRational::i();
PolyForm x(int i) { return PolyForm::x(2, i); }
PolyForm dx(int i) { return PolyForm::dx(2, i); }
}  // namespace

TEST(SusySections, QOnRhoFreeTerm) {
  // Q(r x1 dx2) = i rho x1 dx2 - r dx1^dx2.
  Section s = Section::term(1, x(1) * dx(2));
  Section expected = Section::term(0, I * (x(1) * dx(2)), true) - Section::term(1, dx(1) * dx(2));
  EXPECT_EQ(apply_Q(s), expected);
}

TEST(SusySections, QOnRhoTermFollowsKoszul) {
  // -d(rho x1) = rho dx1.
  EXPECT_EQ(apply_Q(Section::term(0, x(1), true)), Section::term(0, dx(1), true));
}

TEST(SusySections, QSquaredWorkedExample) {
  // Q^2(x1 dx2) = (i/r) rho dx1^dx2.
  Section s = Section::term(0, x(1) * dx(2));
  Section expected = Section::term(-1, I * (dx(1) * dx(2)), true);
  EXPECT_EQ(q_squared(s), expected);
  EXPECT_EQ(q_squared_closed_form(s), expected);
}

TEST(SusySections, KernelExamples) {
  EXPECT_TRUE(is_supersymmetric(Section::term(Rational(1, 2), dx(1))));
  EXPECT_TRUE(is_supersymmetric(Section::term(1, dx(1) * dx(2))));
  EXPECT_TRUE(is_supersymmetric(Section::term(0, PolyForm::constant(2, 5))));
  EXPECT_FALSE(is_supersymmetric(Section::term(1, dx(1))));
  EXPECT_FALSE(is_supersymmetric(Section::term(Rational(1, 2), x(1) * dx(2))));
}

TEST(SusySections, Grade) {
  EXPECT_EQ(grade(Section::term(0, x(1))), (std::set<int>{0}));
  EXPECT_EQ(grade(Section::term(0, dx(1), true)), (std::set<int>{2}));
  EXPECT_EQ(grade(apply_Q(Section::term(3, dx(1)))), (std::set<int>{2}));
}

TEST(SusySections, KoszulProduct) {
  Section a = Section::term(0, dx(1));
  Section rb = Section::term(0, dx(2), true);
  EXPECT_EQ(a * rb, Section::term(0, -(dx(1) * dx(2)), true));
  EXPECT_TRUE((rb * rb).is_zero());
}

TEST(SusySections, CocycleNormalization) {
  auto c = to_cocycle(Section::term(1, dx(1) * dx(2)));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].scale.exponent, Rational(-1));
  EXPECT_EQ(c[0].form, dx(1) * dx(2));
  auto j = cocycle_json(c);
  EXPECT_EQ(j[0]["two_pi_exponent"], "-1");
  EXPECT_THROW(to_cocycle(Section::term(1, dx(1))), std::domain_error);
  EXPECT_THROW(from_closed_form({{TwoPiPower{Rational(1), Rational(-1, 2)}, x(1) * dx(2)}}), std::domain_error);
  EXPECT_EQ(from_closed_form(c), Section::term(1, dx(1) * dx(2)));
}

TEST(SusySections, SamplerIsDeterministicAndClosed) {
  SectionSampler s{4, 2, 99};
  EXPECT_EQ(s.random_form(2, 3), s.random_form(2, 3));
  for (int k = 0; k <= 4; ++k) EXPECT_TRUE(s.random_closed_form(k, 7).is_closed());
}
