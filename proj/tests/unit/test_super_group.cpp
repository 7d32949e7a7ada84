#include "supersdet/super_group.hpp"

#include <gtest/gtest.h>

using namespace supersdet;

namespace {
const GaussRational I = GaussRational::i();
GrassmannElement ev(const char* n, int p = 1) { return GrassmannElement::even(n, p); }
GrassmannElement od(const char* n) { return GrassmannElement::odd(n); }
}  // namespace

TEST(SuperGroup, R12LawOnGenericPoints) {
  // (t, a1, a2)(s, b1, b2) = (t + s + i a1 b1 + i a2 b2, a1 + b1, a2 + b2).
  auto p = SuperPoint::generic_r12("p");
  auto q = SuperPoint::generic_r12("q");
  auto pq = multiply_r12(p, q);
  GrassmannElement expected_t = ev("tp") + ev("tq") + I * od("theta1p") * od("theta1q") + I * od("theta2p") * od("theta2q");
  EXPECT_EQ(*pq.even, expected_t);
  EXPECT_EQ(pq.odd[0], od("theta1p") + od("theta1q"));
  EXPECT_EQ(multiply_r12(p, inverse_r12(p)), identity_r12());
}

TEST(SuperGroup, ArityIsChecked) {
  auto p = SuperPoint::r01(od("theta"));
  EXPECT_THROW(multiply_r12(p, p), StructuralError);
}

TEST(SuperGroup, OddPairingConvention) {
  EXPECT_TRUE(r11_inclusion_is_homomorphism(OddPairing::WithI));
  EXPECT_FALSE(r11_inclusion_is_homomorphism(OddPairing::WithoutI));
}

TEST(SuperGroup, TimeReversalSign) {
  EXPECT_TRUE(time_reversal_acts_by_automorphisms(TimeSign::Reverse));
  EXPECT_FALSE(time_reversal_acts_by_automorphisms(TimeSign::Preserve));
  auto p = act_time_reversal(TimeReversal::r_plus(), SuperPoint::generic_r12());
  EXPECT_EQ(*p.even, -ev("t"));
}

TEST(SuperGroup, TimeReversalWords) {
  auto g = TimeReversal::parse("r+^3r-");
  EXPECT_EQ(g.str(), "r+^3r-");
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_TRUE(g.reverses_time() == false);
  EXPECT_TRUE(TimeReversal::r_plus().reverses_time());
  EXPECT_THROW(TimeReversal::parse("r*"), std::invalid_argument);
}

TEST(SuperGroup, DerivationsSquareToMinusIDt) {
  GrassmannElement f = ev("t", 3) * od("theta1") + ev("t", 2) * od("theta2") + ev("t");
  GrassmannElement mdt = -I * d_even(f, "t");
  EXPECT_EQ(apply_D(1, apply_D(1, f)), mdt);
  EXPECT_EQ(apply_D(2, apply_D(2, f)), mdt);
  EXPECT_TRUE((apply_D(1, apply_D(2, f)) + apply_D(2, apply_D(1, f))).is_zero());
}

TEST(SuperGroup, LatticeProjectionIsInvariant) {
  auto L = Lattice::generic();
  auto p = SuperPoint::generic_r12();
  EXPECT_EQ(proj_R(mu_R(p, L), L), proj_R(p, L));
  EXPECT_NE(mu_R(p, L), p);
}

TEST(SuperGroup, ConjugatedLatticeOfATranslation) {
  // Conjugating by (u, nu1, 0) sends (r, rho1) to (r + 2 i nu1 rho1, rho1).
  auto tr = Translation::generic();
  tr.nu2 = 0;
  auto res = descend_check(Isometry::from(tr), Lattice::generic());
  ASSERT_TRUE(std::holds_alternative<Lattice>(res));
  const auto& L = std::get<Lattice>(res);
  EXPECT_EQ(L.r, ev("r") + GaussRational(2) * I * od("nu1") * od("rho1"));
  EXPECT_EQ(L.rho1, od("rho1"));
}

TEST(SuperGroup, Nu2TranslationsDoNotDescend) {
  Translation tr{0, 0, od("nu2")};
  auto res = descend_check(Isometry::from(tr), Lattice::generic());
  ASSERT_TRUE(std::holds_alternative<NotDescending>(res));
}

TEST(SuperGroup, ReversalsRotateRho) {
  auto plus = descend_check(Isometry::from(TimeReversal::r_plus()), Lattice::generic());
  auto minus = descend_check(Isometry::from(TimeReversal::r_minus()), Lattice::generic());
  ASSERT_TRUE(std::holds_alternative<Lattice>(plus));
  ASSERT_TRUE(std::holds_alternative<Lattice>(minus));
  EXPECT_EQ(std::get<Lattice>(plus).rho1, -I * od("rho1"));
  EXPECT_EQ(std::get<Lattice>(minus).rho1, I * od("rho1"));
}

TEST(SuperGroup, InducedMapOfTranslation) {
  // theta -> (nu1 - rho1 u / r) + (1 + i nu1 rho1 / r) theta.
  auto tr = Translation::generic();
  tr.nu2 = 0;
  auto m = induced_base_map(Isometry::from(tr), Lattice::generic());
  EXPECT_EQ(m.shift, od("nu1") - od("rho1") * ev("u") * ev("r", -1));
  EXPECT_EQ(m.scale, GrassmannElement(1) + I * od("nu1") * od("rho1") * ev("r", -1));
  auto inv = m.inverse();
  auto theta = od("theta");
  EXPECT_EQ(inv.apply(m.apply(theta)), theta);
}

TEST(SuperGroup, FieldActionClosedForm) {
  // (r, rho, x, psi) -> (r + 2 i nu rho, rho, x - (nu - rho u / r) psi, (1 + i rho nu / r) psi).
  auto u = ev("u");
  auto nu = od("nu1");
  auto s = FieldState::generic();
  FieldState expected{ev("r") + GaussRational(2) * I * nu * od("rho1"), od("rho1"),
                      ev("x") - (nu - od("rho1") * u * ev("r", -1)) * od("psi"),
                      (GrassmannElement(1) + I * od("rho1") * nu * ev("r", -1)) * od("psi")};
  EXPECT_EQ(field_action_formula(u, nu, s), expected);
  EXPECT_EQ(action_on_fields(u, nu, s), expected);
}
