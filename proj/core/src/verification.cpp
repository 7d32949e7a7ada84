#include "supersdet/verification.hpp"

#include "supersdet/linearized_action.hpp"
#include "supersdet/multiplicative_sequence.hpp"
#include "supersdet/series.hpp"
#include "supersdet/super_group.hpp"
#include "supersdet/susy_sections.hpp"
#include "supersdet/zeta_operators.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace supersdet {

namespace {

Check check(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

Check guarded(const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, CheckStatus::Fail, std::string("exception: ") + e.what()};
  }
}

std::vector<GrassmannElement> superalgebra_monomials() {
  std::vector<GrassmannElement> out;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 1; ++b) {
      for (int c = 0; c <= 1; ++c) {
        GrassmannElement m = GrassmannElement::even(sym::t, a);
        if (b) m = m * GrassmannElement::odd(sym::theta1);
        if (c) m = m * GrassmannElement::odd(sym::theta2);
        out.push_back(m);
      }
    }
  }
  return out;
}

std::vector<Check> grassmann_checks() {
  std::vector<Check> out;
  const auto monomials = superalgebra_monomials();
  auto minus_i_dt = [](const GrassmannElement& f) { return -GaussRational::i() * d_even(f, sym::t); };
  for (int i : {1, 2}) {
    std::string name = "D" + std::to_string(i) + "^2 = -i d/dt on t^a theta1^b theta2^c, a <= 4";
    out.push_back(guarded(name, [&] {
      for (const auto& m : monomials) {
        if (apply_D(i, apply_D(i, m)) != minus_i_dt(m)) return check(name, false, "fails on " + m.str());
      }
      return check(name, true);
    }));
  }
  out.push_back(guarded("D1 D2 + D2 D1 = 0 on t^a theta1^b theta2^c, a <= 4", [&] {
    for (const auto& m : monomials) {
      if (!(apply_D(1, apply_D(2, m)) + apply_D(2, apply_D(1, m))).is_zero()) {
        return check("D1 D2 + D2 D1 = 0 on t^a theta1^b theta2^c, a <= 4", false, "fails on " + m.str());
      }
    }
    return check("D1 D2 + D2 D1 = 0 on t^a theta1^b theta2^c, a <= 4", true);
  }));

  out.push_back(guarded("R^{1|2} group law is associative", [] {
    auto a = SuperPoint::generic_r12("a");
    auto b = SuperPoint::generic_r12("b");
    auto c = SuperPoint::generic_r12("c");
    return check("R^{1|2} group law is associative", multiply_r12(multiply_r12(a, b), c) == multiply_r12(a, multiply_r12(b, c)));
  }));
  out.push_back(guarded("R^{1|2} identity and inverses", [] {
    auto a = SuperPoint::generic_r12("a");
    bool ok = multiply_r12(a, identity_r12()) == a && multiply_r12(identity_r12(), a) == a &&
              multiply_r12(a, inverse_r12(a)) == identity_r12() && multiply_r12(inverse_r12(a), a) == identity_r12();
    return check("R^{1|2} identity and inverses", ok);
  }));
  out.push_back(guarded("R^{1|1} includes as a subgroup only with the i nu nu' term", [] {
    bool with_i = r11_inclusion_is_homomorphism(OddPairing::WithI);
    bool without_i = r11_inclusion_is_homomorphism(OddPairing::WithoutI);
    return check("R^{1|1} includes as a subgroup only with the i nu nu' term", with_i && !without_i,
                 "with i: " + std::string(with_i ? "yes" : "no") + ", without: " + (without_i ? "yes" : "no"));
  }));
  out.push_back(guarded("T acts by automorphisms exactly when r+- send t to -t", [] {
    bool rev = time_reversal_acts_by_automorphisms(TimeSign::Reverse);
    bool pres = time_reversal_acts_by_automorphisms(TimeSign::Preserve);
    return check("T acts by automorphisms exactly when r+- send t to -t", rev && !pres);
  }));
  out.push_back(guarded("T words compose with their inverses to the identity", [] {
    for (const char* w : {"r+", "r-", "r+r-", "r+^3r-", "r-^2"}) {
      auto g = TimeReversal::parse(w);
      if (!(g * g.inverse()).is_identity()) return check("T words compose with their inverses to the identity", false, w);
    }
    return check("T words compose with their inverses to the identity", true);
  }));
  out.push_back(guarded("proj_R o mu_R = proj_R", [] {
    auto L = Lattice::generic();
    auto p = SuperPoint::generic_r12();
    return check("proj_R o mu_R = proj_R", proj_R(mu_R(p, L), L) == proj_R(p, L));
  }));
  out.push_back(guarded("translations with nu2 = 0 descend", [] {
    auto tr = Translation::generic();
    tr.nu2 = 0;
    return check("translations with nu2 = 0 descend",
                 std::holds_alternative<Lattice>(descend_check(Isometry::from(tr), Lattice::generic())));
  }));
  out.push_back(guarded("translations with nu2 != 0 are rejected", [] {
    auto res = descend_check(Isometry::from(Translation::generic()), Lattice::generic());
    const auto* nd = std::get_if<NotDescending>(&res);
    GrassmannElement two_nu2 = GaussRational(2) * GrassmannElement::odd(sym::nu2);
    bool ok = nd && (nd->residual == two_nu2 || nd->residual == -two_nu2);
    return check("translations with nu2 != 0 are rejected", ok, nd ? "residual " + nd->residual.str() : "descended");
  }));
  out.push_back(guarded("r+ and r- descend and act on theta by +-i", [] {
    auto L = Lattice::generic();
    auto theta = GrassmannElement::odd(sym::theta);
    bool ok = true;
    for (auto [g, c] : {std::pair{TimeReversal::r_plus(), GaussRational::i()}, std::pair{TimeReversal::r_minus(), -GaussRational::i()}}) {
      ok = ok && std::holds_alternative<Lattice>(descend_check(Isometry::from(g), L));
      ok = ok && induced_base_map(Isometry::from(g), L).apply(theta) == c * theta;
    }
    return check("r+ and r- descend and act on theta by +-i", ok);
  }));
  out.push_back(guarded("field action formula agrees with the composite action", [] {
    auto u = GrassmannElement::even(sym::u);
    auto nu = GrassmannElement::odd(sym::nu1);
    auto s = FieldState::generic();
    return check("field action formula agrees with the composite action", action_on_fields(u, nu, s) == field_action_formula(u, nu, s));
  }));

  for (int n : {2, 3}) {
    std::string suffix = ", n = " + std::to_string(n);
    auto cmp = compare_with_reference(expand_linearized_action(n));
    out.push_back(check("linearized action boundary conditions" + suffix, cmp.boundary_match));
    std::ostringstream lag;
    lag << "best signs eps = " << cmp.global_sign << ", R -> " << cmp.curvature_sign << " R;";
    for (const auto& s : cmp.structures) {
      if (!s.match) lag << " " << s.structure << " computed " << to_string(s.computed) << " displayed " << to_string(s.reference) << ";";
    }
    out.push_back({"linearized Lagrangian vs displayed form" + suffix,
                   cmp.lagrangian_match() ? CheckStatus::Pass : CheckStatus::Known, lag.str()});
    std::ostringstream ops;
    for (const auto& [family, signs] : cmp.operator_signs) {
      ops << " " << family << ":";
      if (signs.empty()) ops << " none";
      for (int s : signs) ops << " " << (s > 0 ? "+R" : "-R");
    }
    out.push_back({"linearized operators vs displayed form" + suffix,
                   cmp.operators_match() ? CheckStatus::Pass : CheckStatus::Known, "matching curvature signs:" + ops.str()});
  }
  return out;
}

bool predicted_kernel(const Section& s) {
  for (const auto& [key, f] : s.parts()) {
    if (key.rho) return false;
    for (int k : f.degrees()) {
      if (!f.part(k).is_closed() || key.q * 2 != k) return false;
    }
  }
  return true;
}

std::vector<Check> susy_checks() {
  std::vector<Check> out;
  out.push_back(guarded("Q^2 = (i/r) rho d on sampled sections", [] {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      SectionSampler sm{static_cast<int>(1 + seed % 5), 2, seed};
      Section s(sm.n);
      for (int k = 0; k <= std::min(sm.n, 3); ++k) {
        s += Section::term(Rational(static_cast<int>(seed % 3), 2), sm.random_form(k, 2 * k));
        s += Section::term(Rational(k), sm.random_form(k, 2 * k + 1), true);
      }
      if (q_squared(s) != q_squared_closed_form(s)) return check("Q^2 = (i/r) rho d on sampled sections", false, "seed " + std::to_string(seed));
    }
    return check("Q^2 = (i/r) rho d on sampled sections", true);
  }));
  out.push_back(guarded("Q s = 0 iff forms closed and r-exponent = deg/2", [] {
    int kernel = 0;
    const int samples = 120;
    for (int j = 0; j < samples; ++j) {
      SectionSampler sm{1 + j % 5, 2, static_cast<std::uint64_t>(1000 + j)};
      Section s(sm.n);
      int parts = 1 + j % 3;
      for (int p = 0; p < parts; ++p) {
        int k = (j + p) % (sm.n + 1);
        bool closed = (j / 3 + p) % 2 == 0;
        bool right_q = (j / 5 + p) % 3 != 0;
        auto stream = static_cast<std::uint64_t>(10 * p);
        PolyForm f = closed ? sm.random_closed_form(k, stream) : sm.random_form(k, stream);
        s += Section::term(right_q ? Rational(k, 2) : Rational(k + 1, 2), f);
      }
      bool predicted = predicted_kernel(s);
      kernel += predicted ? 1 : 0;
      if (is_supersymmetric(s) != predicted) {
        return check("Q s = 0 iff forms closed and r-exponent = deg/2", false, "sample " + std::to_string(j) + ": " + s.str());
      }
    }
    return check("Q s = 0 iff forms closed and r-exponent = deg/2", true,
                 std::to_string(samples) + " sections, " + std::to_string(kernel) + " in the kernel");
  }));
  out.push_back(guarded("Q raises the weight by one", [] {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      SectionSampler sm{3, 2, seed};
      int k = static_cast<int>(seed % 3);
      Section s = Section::term(Rational(static_cast<int>(seed % 4)), sm.random_form(k, 0));
      Section q = apply_Q(s);
      if (q.is_zero()) continue;
      std::set<int> expected;
      for (int g : grade(s)) expected.insert((g + 1) % 4);
      if (grade(q) != expected) return check("Q raises the weight by one", false, "seed " + std::to_string(seed));
    }
    return check("Q raises the weight by one", true);
  }));
  out.push_back(guarded("closed forms round-trip through supersymmetric sections", [] {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      SectionSampler sm{4, 2, seed};
      std::vector<CocycleTerm> c;
      for (int k = 0; k <= 4; ++k) c.push_back({TwoPiPower{Rational(1), Rational(-k, 2)}, sm.random_closed_form(k, static_cast<std::uint64_t>(k))});
      std::erase_if(c, [](const CocycleTerm& t) { return t.form.is_zero(); });
      Section s = from_closed_form(c);
      if (!is_supersymmetric(s) || to_cocycle(s) != c) {
        return check("closed forms round-trip through supersymmetric sections", false, "seed " + std::to_string(seed));
      }
    }
    return check("closed forms round-trip through supersymmetric sections", true);
  }));
  out.push_back(guarded("products of supersymmetric sections map to wedge products", [] {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      SectionSampler sm{3, 1, seed};
      Section a = Section::term(Rational(1, 2), sm.random_closed_form(1, 0));
      Section b = Section::term(Rational(1), sm.random_closed_form(2, 1));
      if (a.is_zero() || b.is_zero()) continue;
      if (to_cocycle(a * b) != cocycle_product(to_cocycle(a), to_cocycle(b))) {
        return check("products of supersymmetric sections map to wedge products", false, "seed " + std::to_string(seed));
      }
    }
    return check("products of supersymmetric sections map to wedge products", true);
  }));
  return out;
}

std::vector<Check> series_checks() {
  std::vector<Check> out;
  auto report = verify_exponential_forms(8);
  out.push_back(check("sinh(x/2)/(x/2) = exp(-sum 2 zeta(2k) x^{2k} / (2k (2 pi i)^{2k})) to x^8", report.sinh_half_ok()));
  out.push_back(check("cosh(x/2) = exp(-sum 2 lambda(2k) x^{2k} / (2k (2 pi i)^{2k})) to x^8", report.cosh_half_ok()));
  out.push_back({"cosh(x) reading of the lambda exponential", report.cosh_ok() ? CheckStatus::Pass : CheckStatus::Known,
                 report.cosh_mismatch ? "differs at order " + std::to_string(*report.cosh_mismatch) + "; cosh(x/2) is the consistent reading" : ""});
  out.push_back(guarded("log((x/2)/tanh(x/2)) = sum 2 (zeta - lambda)(2k) x^{2k} / (2k (2 pi i)^{2k}), k <= 4", [] {
    return check("log((x/2)/tanh(x/2)) = sum 2 (zeta - lambda)(2k) x^{2k} / (2k (2 pi i)^{2k}), k <= 4",
                 l_series(8).log() == log_l_series_from_zeta(8));
  }));
  out.push_back(guarded("zeta(2k)/(2 pi i)^{2k} = -B_2k / (2 (2k)!), k <= 6", [] {
    for (int k = 1; k <= 6; ++k) {
      Rational expected = -bernoulli(2 * k) / (2 * Rational(factorial(2 * k)));
      PiValue z = zeta_even(2 * k);
      Rational from_pi = z.coeff * pow(Rational(-1, 4), k);
      if (zeta_over_2pii(2 * k) != expected || z.power != 2 * k || from_pi != expected) {
        return check("zeta(2k)/(2 pi i)^{2k} = -B_2k / (2 (2k)!), k <= 6", false, "k = " + std::to_string(k));
      }
    }
    return check("zeta(2k)/(2 pi i)^{2k} = -B_2k / (2 (2k)!), k <= 6", true);
  }));
  out.push_back(guarded("zeta(2k) against 10^6-term summation, k <= 6", [] {
    double worst = 0;
    for (int k = 1; k <= 6; ++k) {
      double direct = power_sum_direct(2 * k, 0.0, 1000000, true);
      worst = std::max(worst, std::abs(direct - zeta_even(2 * k).to_double()));
    }
    std::ostringstream d;
    d << "max error " << worst;
    return check("zeta(2k) against 10^6-term summation, k <= 6", worst < 1e-12, d.str());
  }));
  out.push_back(guarded("L_1 = p1/3, L_2 = (7 p2 - p1^2)/45", [] {
    auto L = l_polynomials(2);
    bool ok = L[0].coefficient({1, 0}) == Rational(1, 3) && L[0].terms().size() == 1 &&
              L[1].coefficient({0, 1}) == Rational(7, 45) && L[1].coefficient({2, 0}) == Rational(-1, 45) &&
              L[1].terms().size() == 2;
    return check("L_1 = p1/3, L_2 = (7 p2 - p1^2)/45", ok, L[0].str() + "; " + L[1].str());
  }));
  out.push_back(guarded("Pontryagin classes and characters convert back and forth, K = 4", [] {
    auto total = l_class(4, ClassKind::Pontryagin);
    return check("Pontryagin classes and characters convert back and forth, K = 4",
                 powersums_to_pontryagin(pontryagin_to_powersums(total)) == total &&
                     powersums_to_pontryagin(l_class(4, ClassKind::Character)) == total);
  }));
  return out;
}

std::vector<Check> zeta_checks() {
  std::vector<Check> out;
  out.push_back(guarded("regularized product of (2 pi k / r)^n is r^{n/2}, n <= 8", [] {
    for (int n = 1; n <= 8; ++n) {
      if (regularized_product_power(n).exponent != Rational(n, 2)) {
        return check("regularized product of (2 pi k / r)^n is r^{n/2}, n <= 8", false, "n = " + std::to_string(n));
      }
    }
    return check("regularized product of (2 pi k / r)^n is r^{n/2}, n <= 8", true);
  }));
  out.push_back(guarded("half-integer regularized product is 2^{n/2}, n <= 8", [] {
    for (int n = 1; n <= 8; ++n) {
      LogValue expected{0, Rational(n, 2), 0};
      if (regularized_product(n, Rational(1, 2)).log != expected) {
        return check("half-integer regularized product is 2^{n/2}, n <= 8", false, "n = " + std::to_string(n));
      }
    }
    return check("half-integer regularized product is 2^{n/2}, n <= 8", true);
  }));
  for (auto bc : {BoundaryCondition::Periodic, BoundaryCondition::Antiperiodic}) {
    std::string name = "Tr d^{-2k} against 10^5 modes, k <= 3, " + to_string(bc);
    out.push_back(guarded(name, [&] {
      double worst = 0;
      for (int k = 1; k <= 3; ++k) {
        double exact = trace_inv_power(bc, 2 * k).convert_to<double>();
        worst = std::max(worst, std::abs(trace_mode_sum(bc, 2 * k, 100000, true) - exact));
      }
      std::ostringstream d;
      d << "max error " << worst;
      return check(name, worst < 1e-8, d.str());
    }));
  }
  out.push_back(guarded("odd-power traces vanish on the corpus curvature", [] {
    for (int n = 2; n <= 5; ++n) concrete_scaled_traces(corpus_curvature(n, 6), 3);
    return check("odd-power traces vanish on the corpus curvature", true);
  }));
  out.push_back(guarded("sdet equals the (x/2)/tanh(x/2) class in ph, n <= 8, K <= 4", [] {
    for (int n = 1; n <= 8; ++n) {
      for (int K = 1; K <= 4; ++K) {
        if (sdet_formal(n, K) != l_class(K, ClassKind::Character)) {
          return check("sdet equals the (x/2)/tanh(x/2) class in ph, n <= 8, K <= 4", false,
                       "n = " + std::to_string(n) + ", K = " + std::to_string(K));
        }
      }
    }
    return check("sdet equals the (x/2)/tanh(x/2) class in ph, n <= 8, K <= 4", true);
  }));
  out.push_back(guarded("periodic-periodic sdet is 1", [] {
    for (int K = 1; K <= 4; ++K) {
      if (sdet_formal(4, K, true) != GradedPolynomial::constant(ClassKind::Character, K, 1)) {
        return check("periodic-periodic sdet is 1", false, "K = " + std::to_string(K));
      }
    }
    return check("periodic-periodic sdet is 1", true);
  }));
  out.push_back(guarded("concrete sdet equals formal sdet on the n = 4 corpus", [] {
    auto R = corpus_curvature(4, 8);
    bool ok = sdet_concrete(R, 2) == evaluate_on_curvature(sdet_formal(4, 2), R) &&
              !(sdet_concrete(R, 2) == GrassmannElement(1));
    return check("concrete sdet equals formal sdet on the n = 4 corpus", ok);
  }));
  out.push_back(guarded("sdet in Pontryagin classes vs Hirzebruch L_1, L_2", [] {
    auto in_p = sdet_formal(4, 2).part(1) + sdet_formal(4, 2).part(2);
    in_p = powersums_to_pontryagin(in_p);
    auto L = l_polynomials(2);
    bool direct = in_p.part(1) == L[0] && in_p.part(2) == L[1];
    std::vector<GradedPolynomial> scaled;
    for (int k = 1; k <= 2; ++k) scaled.push_back(pow(Rational(4), k) * GradedPolynomial::generator(ClassKind::Pontryagin, 2, k));
    auto rescaled = in_p.substitute(scaled);
    bool after = rescaled.part(1) == L[0] && rescaled.part(2) == L[1];
    return Check{"sdet in Pontryagin classes vs Hirzebruch L_1, L_2", direct ? CheckStatus::Pass : CheckStatus::Known,
                 in_p.str() + (after ? "; equals L_1 + L_2 after p_k -> 4^k p_k" : "")};
  }));
  return out;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Known: return "KNOWN";
  }
  return "";
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

std::vector<std::string> suite_names() { return {"grassmann", "susy", "series", "zeta"}; }

SuiteReport run_suite(const std::string& suite) {
  if (suite == "grassmann") return {suite, grassmann_checks()};
  if (suite == "susy") return {suite, susy_checks()};
  if (suite == "series") return {suite, series_checks()};
  if (suite == "zeta") return {suite, zeta_checks()};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<SuiteReport> run_suites(const std::string& selection) {
  if (selection != "all") return {run_suite(selection)};
  std::vector<SuiteReport> out;
  for (const auto& s : suite_names()) out.push_back(run_suite(s));
  return out;
}

nlohmann::json to_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    out.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
  }
  return out;
}

}  // namespace supersdet
