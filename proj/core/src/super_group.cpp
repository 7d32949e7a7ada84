#include "supersdet/super_group.hpp"

#include <sstream>

namespace supersdet {

namespace {

const GaussRational kI = GaussRational::i();

GrassmannElement inv_r(const GrassmannElement& r) { return r.inverse(); }

}  // namespace

// --- SuperPoint ------------------------------------------------------------

SuperPoint SuperPoint::r12(GrassmannElement t, GrassmannElement th1, GrassmannElement th2) {
  return {std::move(t), {std::move(th1), std::move(th2)}};
}

SuperPoint SuperPoint::r11(GrassmannElement u, GrassmannElement nu) {
  return {std::move(u), {std::move(nu)}};
}

SuperPoint SuperPoint::r01(GrassmannElement th) { return {std::nullopt, {std::move(th)}}; }

SuperPoint SuperPoint::generic_r12(const std::string& suffix) {
  return r12(GrassmannElement::even(sym::t + suffix), GrassmannElement::odd(sym::theta1 + suffix),
             GrassmannElement::odd(sym::theta2 + suffix));
}

void SuperPoint::require_arity(int p, int q, const char* where) const {
  if (even_dim() != p || odd_dim() != q) {
    std::ostringstream msg;
    msg << where << ": expected a point of R^{" << p << "|" << q << "}, got R^{" << even_dim()
        << "|" << odd_dim() << "}";
    throw StructuralError(msg.str());
  }
  if (even && !even->is_even()) throw StructuralError(std::string(where) + ": even part is not even");
  for (const auto& o : odd) {
    if (!o.is_odd()) throw StructuralError(std::string(where) + ": odd part is not odd");
  }
}

std::string SuperPoint::str() const {
  std::string out = "(";
  bool first = true;
  if (even) {
    out += even->str();
    first = false;
  }
  for (const auto& o : odd) {
    if (!first) out += ", ";
    out += o.str();
    first = false;
  }
  return out + ")";
}

// --- R^{1|2} and R^{1|1} ---------------------------------------------------

SuperPoint multiply_r12(const SuperPoint& p, const SuperPoint& q) {
  p.require_arity(1, 2, "multiply_r12");
  q.require_arity(1, 2, "multiply_r12");
  GrassmannElement t = *p.even + *q.even + kI * (p.odd[0] * q.odd[0]) + kI * (p.odd[1] * q.odd[1]);
  return SuperPoint::r12(t, p.odd[0] + q.odd[0], p.odd[1] + q.odd[1]);
}

SuperPoint inverse_r12(const SuperPoint& p) {
  p.require_arity(1, 2, "inverse_r12");
  return SuperPoint::r12(-*p.even, -p.odd[0], -p.odd[1]);
}

SuperPoint identity_r12() { return SuperPoint::r12(0, 0, 0); }

SuperPoint multiply_r11(const SuperPoint& p, const SuperPoint& q, OddPairing pairing) {
  p.require_arity(1, 1, "multiply_r11");
  q.require_arity(1, 1, "multiply_r11");
  GaussRational c = pairing == OddPairing::WithI ? kI : GaussRational(1);
  return SuperPoint::r11(*p.even + *q.even + c * (p.odd[0] * q.odd[0]), p.odd[0] + q.odd[0]);
}

SuperPoint inverse_r11(const SuperPoint& p) {
  p.require_arity(1, 1, "inverse_r11");
  return SuperPoint::r11(-*p.even, -p.odd[0]);
}

SuperPoint include_r11(const SuperPoint& p) {
  p.require_arity(1, 1, "include_r11");
  return SuperPoint::r12(*p.even, p.odd[0], 0);
}

bool r11_inclusion_is_homomorphism(OddPairing pairing) {
  SuperPoint a = SuperPoint::r11(GrassmannElement::even("u_a"), GrassmannElement::odd("nu_a"));
  SuperPoint b = SuperPoint::r11(GrassmannElement::even("u_b"), GrassmannElement::odd("nu_b"));
  return include_r11(multiply_r11(a, b, pairing)) == multiply_r12(include_r11(a), include_r11(b));
}

// --- Time reversal ---------------------------------------------------------

TimeReversal::TimeReversal(int a, int b) {
  // r-^2 = r+^2 folds the second exponent into the first.
  a += 2 * (b / 2);
  plus_ = ((a % 4) + 4) % 4;
  minus_ = ((b % 2) + 2) % 2;
}

TimeReversal operator*(const TimeReversal& a, const TimeReversal& b) {
  return {a.plus_ + b.plus_, a.minus_ + b.minus_};
}

TimeReversal TimeReversal::inverse() const {
  // (r+^a r-^b)^-1 = r+^-a r-^-b, and r-^-1 = r-^3 = r+^2 r-.
  return TimeReversal(-plus_ + 2 * minus_, minus_);
}

int TimeReversal::order() const {
  TimeReversal p = *this;
  for (int k = 1; k <= 8; ++k) {
    if (p.is_identity()) return k;
    p = p * *this;
  }
  return -1;
}

std::string TimeReversal::str() const {
  if (is_identity()) return "e";
  std::string out;
  if (plus_ == 1) out += "r+";
  else if (plus_ > 1) out += "r+^" + std::to_string(plus_);
  if (minus_ == 1) out += "r-";
  return out;
}

TimeReversal TimeReversal::parse(const std::string& word) {
  TimeReversal out;
  std::size_t k = 0;
  while (k < word.size()) {
    if (word[k] == 'e' || word[k] == ' ' || word[k] == '*') {
      ++k;
      continue;
    }
    if (word.compare(k, 2, "r+") != 0 && word.compare(k, 2, "r-") != 0) {
      throw std::invalid_argument("bad time-reversal word: " + word);
    }
    TimeReversal gen = word[k + 1] == '+' ? r_plus() : r_minus();
    k += 2;
    int exponent = 1;
    if (k < word.size() && word[k] == '^') {
      std::size_t end = k + 1;
      while (end < word.size() && std::isdigit(static_cast<unsigned char>(word[end]))) ++end;
      if (end == k + 1) throw std::invalid_argument("bad exponent in: " + word);
      exponent = std::stoi(word.substr(k + 1, end - k - 1));
      k = end;
    }
    for (int j = 0; j < exponent; ++j) out = out * gen;
  }
  return out;
}

SuperPoint act_time_reversal(const TimeReversal& g, const SuperPoint& p, TimeSign sign) {
  p.require_arity(1, 2, "act_time_reversal");
  // r+ scales (theta1, theta2) by (i, i); r- by (-i, i).
  int k1 = g.plus_power() - g.minus_power();
  int k2 = g.plus_power() + g.minus_power();
  GrassmannElement t = *p.even;
  if (sign == TimeSign::Reverse && g.reverses_time()) t = -t;
  return SuperPoint::r12(t, i_pow(k1) * p.odd[0], i_pow(k2) * p.odd[1]);
}

SuperPoint act_time_reversal_r11(const TimeReversal& g, const SuperPoint& p, TimeSign sign) {
  p.require_arity(1, 1, "act_time_reversal_r11");
  int k1 = g.plus_power() - g.minus_power();
  GrassmannElement u = *p.even;
  if (sign == TimeSign::Reverse && g.reverses_time()) u = -u;
  return SuperPoint::r11(u, i_pow(k1) * p.odd[0]);
}

bool time_reversal_acts_by_automorphisms(TimeSign sign) {
  SuperPoint p = SuperPoint::generic_r12("_a");
  SuperPoint q = SuperPoint::generic_r12("_b");
  for (const auto& g : {TimeReversal::r_plus(), TimeReversal::r_minus()}) {
    SuperPoint lhs = act_time_reversal(g, multiply_r12(p, q), sign);
    SuperPoint rhs = multiply_r12(act_time_reversal(g, p, sign), act_time_reversal(g, q, sign));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// --- Odd vector fields -----------------------------------------------------

namespace {

GrassmannElement odd_field(int i, const GrassmannElement& f, const GaussRational& c) {
  if (i != 1 && i != 2) throw StructuralError("apply_D: index must be 1 or 2");
  const char* th = i == 1 ? sym::theta1 : sym::theta2;
  return d_odd(f, th) + c * (GrassmannElement::odd(th) * d_time(f));
}

}  // namespace

GrassmannElement apply_D(int i, const GrassmannElement& f) { return odd_field(i, f, -kI); }

GrassmannElement apply_D_left(int i, const GrassmannElement& f) { return odd_field(i, f, kI); }

// --- Lattices and projections ----------------------------------------------

SuperPoint Lattice::as_r12() const { return SuperPoint::r12(r, rho1, 0); }

SuperPoint mu_R(const SuperPoint& p, const Lattice& lattice) {
  p.require_arity(1, 2, "mu_R");
  TimeReversal holonomy = TimeReversal::r_plus() * TimeReversal::r_minus();
  return multiply_r12(lattice.as_r12(), act_time_reversal(holonomy, p));
}

SuperPoint proj_R(const SuperPoint& p, const Lattice& lattice) {
  p.require_arity(1, 2, "proj_R");
  return SuperPoint::r01(p.odd[0] - lattice.rho1 * *p.even * inv_r(lattice.r));
}

SuperPoint Isometry::apply(const SuperPoint& p) const {
  return multiply_r12(translation.as_r12(), act_time_reversal(reversal, p));
}

SuperPoint Isometry::apply_inverse(const SuperPoint& p) const {
  return act_time_reversal(reversal.inverse(), multiply_r12(inverse_r12(translation.as_r12()), p));
}

DescentResult descend_check(const Isometry& iso, const Lattice& lattice) {
  // h mu_R h^-1 is left translation by h(mu_R(h^-1(0))) composed with the holonomy.
  SuperPoint conj = iso.apply(mu_R(iso.apply_inverse(identity_r12()), lattice));
  if (!conj.odd[1].is_zero()) return NotDescending{conj.odd[1]};

  Lattice image{*conj.even, conj.odd[0]};
  SuperPoint p = SuperPoint::generic_r12();
  if (!(mu_R(iso.apply(p), image) == iso.apply(mu_R(p, lattice)))) {
    throw StructuralError("descend_check: conjugated generator fails equivariance");
  }
  // Normalize to the positive generator of the lattice.
  GrassmannElement body = image.r.body();
  if (body.terms().size() == 1 && body.terms().begin()->second.re < 0) {
    SuperPoint inv = inverse_r12(image.as_r12());
    image = Lattice{*inv.even, inv.odd[0]};
  }
  return image;
}

OddAffineMap OddAffineMap::inverse() const {
  GrassmannElement inv_scale = scale.inverse();
  return {-(inv_scale * shift), inv_scale};
}

OddAffineMap induced_base_map(const Isometry& iso, const Lattice& lattice) {
  auto descent = descend_check(iso, lattice);
  if (std::holds_alternative<NotDescending>(descent)) {
    throw StructuralError("induced_base_map: isometry does not descend");
  }
  const Lattice& image = std::get<Lattice>(descent);

  SuperPoint p = SuperPoint::generic_r12();
  GrassmannElement target = proj_R(iso.apply(p), image).odd[0];

  // Eliminate theta1 = theta + rho1 t / r.
  GrassmannElement theta = GrassmannElement::odd(sym::theta);
  GrassmannElement theta1 = theta + lattice.rho1 * *p.even * inv_r(lattice.r);
  GrassmannElement in_theta = substitute(target, {}, {{sym::theta1, theta1}});
  if (!d_even(in_theta, sym::t).is_zero() || !d_odd(in_theta, sym::theta2).is_zero()) {
    throw StructuralError("induced_base_map: square does not factor through proj_R");
  }
  OddAffineMap map{substitute(in_theta, {}, {{sym::theta, 0}}), d_odd(in_theta, sym::theta)};
  if (!d_odd(map.scale, sym::theta).is_zero() ||
      !(map.apply(theta) == in_theta)) {
    throw StructuralError("induced_base_map: no odd-affine solution");
  }
  if (!(map.apply(proj_R(p, lattice).odd[0]) == target)) {
    throw StructuralError("induced_base_map: square does not commute");
  }
  return map;
}

FieldState field_action_formula(const GrassmannElement& u, const GrassmannElement& nu1,
                                const FieldState& s) {
  GrassmannElement over_r = inv_r(s.r);
  return {s.r + GaussRational(Rational(0), Rational(2)) * (nu1 * s.rho1), s.rho1,
          s.x - (nu1 - s.rho1 * u * over_r) * s.psi,
          (GrassmannElement(1) + kI * (s.rho1 * nu1 * over_r)) * s.psi};
}

FieldState action_on_fields(const GrassmannElement& u, const GrassmannElement& nu1,
                            const FieldState& s) {
  Isometry iso = Isometry::from(Translation{u, nu1, 0});
  Lattice lattice{s.r, s.rho1};
  auto descent = descend_check(iso, lattice);
  const Lattice& image = std::get<Lattice>(descent);
  OddAffineMap f_inv = induced_base_map(iso, lattice).inverse();

  // phi_0' = phi_0 o f^-1 with phi_0(theta) = x + theta psi.
  GrassmannElement theta = GrassmannElement::odd(sym::theta);
  GrassmannElement composed = s.x + f_inv.apply(theta) * s.psi;
  GrassmannElement psi_new = d_odd(composed, sym::theta);
  GrassmannElement x_new = substitute(composed, {}, {{sym::theta, 0}});
  FieldState out{image.r, image.rho1, x_new, psi_new};

  if (!(out == field_action_formula(u, nu1, s))) {
    throw StructuralError("action_on_fields: symbolic composite disagrees with closed form");
  }
  return out;
}

}  // namespace supersdet
