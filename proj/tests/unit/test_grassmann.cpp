#include "supersdet/grassmann.hpp"

#include <gtest/gtest.h>

using namespace supersdet;

namespace {
const GrassmannElement a = GrassmannElement::odd("a");
const GrassmannElement b = GrassmannElement::odd("b");
const GrassmannElement c = GrassmannElement::odd("c");
const GrassmannElement x = GrassmannElement::even("x");
const GaussRational I = GaussRational::i();
}  // namespace

TEST(Grassmann, OddGeneratorsAnticommute) {
  EXPECT_EQ(a * b, -(b * a));
  EXPECT_TRUE((a * a).is_zero());
  EXPECT_EQ(a * b * c, c * a * b);
  EXPECT_EQ(a * b * c, -(b * a * c));
}

TEST(Grassmann, EvenElementsCommute) {
  GrassmannElement ab = a * b;
  EXPECT_EQ(ab * c, c * ab);
  EXPECT_EQ(x * a, a * x);
}

TEST(Grassmann, Parity) {
  EXPECT_EQ((a * b + x).parity(), Parity::Even);
  EXPECT_EQ((a + a * b * c).parity(), Parity::Odd);
  EXPECT_EQ((a + x).parity(), Parity::Mixed);
  EXPECT_TRUE(GrassmannElement().is_even());
}

TEST(Grassmann, CanonicalRendering) {
  EXPECT_EQ((b * a).str(), "-a*b");
  EXPECT_EQ(GrassmannElement(0).str(), "0");
  EXPECT_EQ((I * x * a).str(), (x * a * I).str());
}

TEST(Grassmann, LaurentInverse) {
  GrassmannElement r = GrassmannElement::even("r");
  EXPECT_EQ(r * GrassmannElement::even("r", -1), GrassmannElement(1));
  GrassmannElement u = r + a * b;
  // (r + ab)^{-1} = r^{-1} - r^{-2} ab.
  GrassmannElement expected = GrassmannElement::even("r", -1) - GrassmannElement::even("r", -2) * a * b;
  EXPECT_EQ(u.inverse(), expected);
  EXPECT_EQ(u * u.inverse(), GrassmannElement(1));
  EXPECT_THROW((r + x).inverse(), std::domain_error);
}

TEST(Grassmann, ExpOfNilpotent) {
  GrassmannElement n = a * b + b * c;
  // n^2 = ab bc + bc ab = 0.
  EXPECT_EQ(exp_nilpotent(n), GrassmannElement(1) + n);
  GrassmannElement d = GrassmannElement::odd("d");
  GrassmannElement m = a * b + c * d;
  EXPECT_EQ(exp_nilpotent(m), GrassmannElement(1) + m + a * b * c * d);
}

TEST(Grassmann, OddDerivativeIsAntiderivation) {
  EXPECT_EQ(d_odd(a * b, "a"), b);
  EXPECT_EQ(d_odd(a * b, "b"), -a);
  EXPECT_EQ(d_odd(x * b, "b"), x);
  GrassmannElement g = b * c + a;
  GrassmannElement ab = a * b;
  EXPECT_EQ(d_odd(ab * g, "b"), d_odd(ab, "b") * g + ab * d_odd(g, "b"));
  GrassmannElement xc = x * c;
  EXPECT_EQ(d_odd(xc * g, "c"), d_odd(xc, "c") * g - xc * d_odd(g, "c"));
}

TEST(Grassmann, EvenAndTimeDerivatives) {
  GrassmannElement t = GrassmannElement::even("t");
  EXPECT_EQ(d_even(power(t, 3), "t"), GaussRational(3) * power(t, 2));
  EXPECT_EQ(d_even(GrassmannElement::even("r", -2), "r"), GaussRational(-2) * GrassmannElement::even("r", -3));
  GrassmannElement jet = GrassmannElement::even("a.1");
  EXPECT_EQ(d_time(jet), GrassmannElement::even("a.1'"));
  EXPECT_EQ(d_time(d_time(jet)), GrassmannElement::even("a.1''"));
  EXPECT_EQ(d_time(t * jet), jet + t * GrassmannElement::even("a.1'"));
  EXPECT_TRUE(d_time(x).is_zero());
}

TEST(Grassmann, BerezinOrientation) {
  GrassmannElement t1 = GrassmannElement::odd("theta1");
  GrassmannElement t2 = GrassmannElement::odd("theta2");
  EXPECT_EQ(berezin(t1 * t2 * x, {"theta1", "theta2"}), x);
  EXPECT_EQ(berezin(t2 * t1, {"theta1", "theta2"}), GrassmannElement(-1));
  EXPECT_TRUE(berezin(t1 + x, {"theta1", "theta2"}).is_zero());
}

TEST(Grassmann, Substitution) {
  GrassmannElement f = x * a + power(x, 2);
  GrassmannElement g = substitute(f, {{"x", x + a * b}}, {{"a", c}});
  EXPECT_EQ(g, (x + a * b) * c + power(x + a * b, 2));
}
