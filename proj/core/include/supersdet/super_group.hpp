#pragma once

// Coordinate-level super Euclidean geometry in dimension 1|2: the super
// translation group R^{1|2}, the time-reversal group T, the right-invariant
// odd vector fields D1, D2, periodic-antiperiodic lattices, the projection
// proj_R onto R^{0|1}, and the descent of isometries to families of super
// circles.

#include "supersdet/grassmann.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace supersdet {

/// Generator names shared by the coordinate computations.
namespace sym {
inline constexpr const char* t = "t";
inline constexpr const char* theta1 = "theta1";
inline constexpr const char* theta2 = "theta2";
inline constexpr const char* theta = "theta";  // coordinate on R^{0|1}
inline constexpr const char* r = "r";
inline constexpr const char* rho1 = "rho1";
inline constexpr const char* u = "u";
inline constexpr const char* nu1 = "nu1";
inline constexpr const char* nu2 = "nu2";
inline constexpr const char* x = "x";
inline constexpr const char* psi = "psi";
}  // namespace sym

class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A point of R^{p|q} with values in a Grassmann algebra.
struct SuperPoint {
  std::optional<GrassmannElement> even;  // absent for R^{0|q}
  std::vector<GrassmannElement> odd;

  static SuperPoint r12(GrassmannElement t, GrassmannElement th1, GrassmannElement th2);
  static SuperPoint r11(GrassmannElement u, GrassmannElement nu);
  static SuperPoint r01(GrassmannElement th);
  /// (t, theta1, theta2) built from fresh generators with the given suffix.
  static SuperPoint generic_r12(const std::string& suffix = "");

  [[nodiscard]] int even_dim() const { return even ? 1 : 0; }
  [[nodiscard]] int odd_dim() const { return static_cast<int>(odd.size()); }
  /// Throws StructuralError unless the arity is (p|q) and parities match.
  void require_arity(int p, int q, const char* where) const;

  [[nodiscard]] std::string str() const;
  friend bool operator==(const SuperPoint&, const SuperPoint&) = default;
};

SuperPoint multiply_r12(const SuperPoint& p, const SuperPoint& q);
SuperPoint inverse_r12(const SuperPoint& p);
SuperPoint identity_r12();

/// Sign convention for the odd pairing in the R^{1|1} group law
/// (u,nu)(u',nu') = (u+u' + c*nu*nu', nu+nu').
enum class OddPairing { WithI, WithoutI };

SuperPoint multiply_r11(const SuperPoint& p, const SuperPoint& q,
                        OddPairing pairing = OddPairing::WithI);
SuperPoint inverse_r11(const SuperPoint& p);
/// (u, nu) -> (u, nu, 0).
SuperPoint include_r11(const SuperPoint& p);
/// Checks on fresh generic points that include_r11 is a homomorphism.
bool r11_inclusion_is_homomorphism(OddPairing pairing);

/// Element r+^a r-^b of T = Z/4 x Z/2 in normal form a in 0..3, b in 0..1.
class TimeReversal {
 public:
  TimeReversal() = default;
  static TimeReversal identity() { return {}; }
  static TimeReversal r_plus() { return {1, 0}; }
  static TimeReversal r_minus() { return {0, 1}; }
  /// Parses a word such as "r+r-", "r+^3", "e".
  static TimeReversal parse(const std::string& word);

  [[nodiscard]] int plus_power() const { return plus_; }
  [[nodiscard]] int minus_power() const { return minus_; }
  [[nodiscard]] bool is_identity() const { return plus_ == 0 && minus_ == 0; }
  [[nodiscard]] TimeReversal inverse() const;
  [[nodiscard]] int order() const;
  /// Whether the element reverses the orientation of R (odd total word length).
  [[nodiscard]] bool reverses_time() const { return (plus_ + minus_) % 2 == 1; }
  [[nodiscard]] std::string str() const;

  friend TimeReversal operator*(const TimeReversal& a, const TimeReversal& b);
  friend bool operator==(const TimeReversal&, const TimeReversal&) = default;

 private:
  TimeReversal(int a, int b);
  int plus_ = 0;
  int minus_ = 0;
};

/// How the time-reversal generators act on the even coordinate.
enum class TimeSign {
  Reverse,   // t -> -t (the convention that makes T act by group automorphisms)
  Preserve,  // t -> t
};

/// r+: (t, th1, th2) -> (+-t, i th1, i th2);  r-: (+-t, -i th1, i th2).
SuperPoint act_time_reversal(const TimeReversal& g, const SuperPoint& p,
                             TimeSign sign = TimeSign::Reverse);
/// r+: (u, nu) -> (-u, i nu);  r-: (-u, -i nu).
SuperPoint act_time_reversal_r11(const TimeReversal& g, const SuperPoint& p,
                                 TimeSign sign = TimeSign::Reverse);
/// Oracle: T acts on R^{1|2} by group automorphisms under this convention
/// (checked on generic points for both generators).
bool time_reversal_acts_by_automorphisms(TimeSign sign);

/// D_i = d/dtheta_i - i theta_i d/dt (right-invariant), i in {1, 2}.
GrassmannElement apply_D(int i, const GrassmannElement& f);
/// d/dtheta_i + i theta_i d/dt (left-invariant).
GrassmannElement apply_D_left(int i, const GrassmannElement& f);

/// Lattice generator data R = (r, rho1) in R^{1|1}_{>0}.
struct Lattice {
  GrassmannElement r;
  GrassmannElement rho1;

  static Lattice generic() {
    return {GrassmannElement::even(sym::r), GrassmannElement::odd(sym::rho1)};
  }
  [[nodiscard]] SuperPoint as_r12() const;
  friend bool operator==(const Lattice&, const Lattice&) = default;
};

/// Generator of the periodic-antiperiodic lattice: p -> R . (r+r-)(p).
SuperPoint mu_R(const SuperPoint& p, const Lattice& lattice);
/// theta1 - rho1 t / r as a point of R^{0|1}.
SuperPoint proj_R(const SuperPoint& p, const Lattice& lattice);

struct Translation {
  GrassmannElement u;
  GrassmannElement nu1;
  GrassmannElement nu2;

  static Translation generic() {
    return {GrassmannElement::even(sym::u), GrassmannElement::odd(sym::nu1),
            GrassmannElement::odd(sym::nu2)};
  }
  [[nodiscard]] SuperPoint as_r12() const { return SuperPoint::r12(u, nu1, nu2); }
};

/// An isometry of R^{1|2} in universal-cover coordinates:
/// q -> translation . reversal(q).
struct Isometry {
  Translation translation{0, 0, 0};
  TimeReversal reversal;

  static Isometry from(const Translation& tr) { return {tr, TimeReversal::identity()}; }
  static Isometry from(const TimeReversal& g) { return {Translation{0, 0, 0}, g}; }
  [[nodiscard]] SuperPoint apply(const SuperPoint& p) const;
  [[nodiscard]] SuperPoint apply_inverse(const SuperPoint& p) const;
};

struct NotDescending {
  /// theta2-component of the conjugated generator; a multiple of nu2.
  GrassmannElement residual;
};

using DescentResult = std::variant<Lattice, NotDescending>;

/// Computes R' with mu_{R'}(h p) = h mu_R(p) and returns it as the positive
/// generator of the image lattice, or NotDescending when the conjugated
/// generator leaves R^{1|1}.
DescentResult descend_check(const Isometry& iso, const Lattice& lattice);

/// theta -> shift + scale * theta on R^{0|1}.
struct OddAffineMap {
  GrassmannElement shift;  // odd
  GrassmannElement scale;  // even, invertible

  [[nodiscard]] GrassmannElement apply(const GrassmannElement& theta) const {
    return shift + scale * theta;
  }
  [[nodiscard]] OddAffineMap inverse() const;
};

/// The unique map f with f(proj_R(p)) = proj_{R'}(h p), found by eliminating
/// theta1 in favour of theta = theta1 - rho1 t / r. Throws StructuralError if
/// the isometry does not descend or no odd-affine solution exists.
OddAffineMap induced_base_map(const Isometry& iso, const Lattice& lattice);

/// Fields (r, rho1, x, psi) with phi_0 = x + theta psi.
struct FieldState {
  GrassmannElement r;
  GrassmannElement rho1;
  GrassmannElement x;
  GrassmannElement psi;

  static FieldState generic() {
    return {GrassmannElement::even(sym::r), GrassmannElement::odd(sym::rho1),
            GrassmannElement::even(sym::x), GrassmannElement::odd(sym::psi)};
  }
  friend bool operator==(const FieldState&, const FieldState&) = default;
};

/// (u, nu1) . (r, rho1, x, psi): conjugated lattice and phi_0 o f^{-1}, with
/// f from induced_base_map. Cross-checked against field_action_formula;
/// throws StructuralError on disagreement.
FieldState action_on_fields(const GrassmannElement& u, const GrassmannElement& nu1,
                            const FieldState& state);
/// Closed form: (r + 2i nu1 rho1, rho1, x - (nu1 - rho1 u / r) psi, (1 + i rho1 nu1 / r) psi).
FieldState field_action_formula(const GrassmannElement& u, const GrassmannElement& nu1,
                                const FieldState& state);

}  // namespace supersdet
