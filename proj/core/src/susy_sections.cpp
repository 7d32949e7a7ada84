#include "supersdet/susy_sections.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <ostream>
#include <random>
#include <stdexcept>

namespace supersdet {

namespace {

const GaussRational kI = GaussRational::i();

GaussRational small_coefficient(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-3, 3);
  int re = 0;
  while (re == 0) re = pick(rng);
  int im = pick(rng) % 2 == 0 ? 0 : pick(rng);
  return {Rational(re), Rational(im)};
}

std::vector<int> random_subset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

}  // namespace

Section Section::term(const Rational& q, const PolyForm& alpha, bool rho) {
  Section out(alpha.dimension());
  out.add(SectionKey{q, rho}, alpha);
  return out;
}

void Section::add(const SectionKey& key, const PolyForm& f) {
  if (f.is_zero()) return;
  if (n_ == 0) n_ = f.dimension();
  auto [it, inserted] = parts_.try_emplace(key, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

bool Section::depends_on_rho() const {
  for (const auto& [key, f] : parts_) {
    if (key.rho) return true;
  }
  return false;
}

Section& Section::operator+=(const Section& o) {
  for (const auto& [key, f] : o.parts_) add(key, f);
  return *this;
}

Section& Section::operator-=(const Section& o) {
  for (const auto& [key, f] : o.parts_) add(key, -f);
  return *this;
}

Section operator*(const GaussRational& c, const Section& s) {
  Section out(s.n_);
  for (const auto& [key, f] : s.parts_) out.add(key, c * f);
  return out;
}

Section operator*(const Section& a, const Section& b) {
  Section out(a.n_ != 0 ? a.n_ : b.n_);
  for (const auto& [ka, fa] : a.parts_) {
    for (const auto& [kb, fb] : b.parts_) {
      if (ka.rho && kb.rho) continue;
      // Moving rho' left past alpha costs (-1)^{deg alpha}.
      PolyForm left = kb.rho ? fa.scale_by_degree([](int k) { return GaussRational(k % 2 == 0 ? 1 : -1); }) : fa;
      out.add(SectionKey{ka.q + kb.q, ka.rho || kb.rho}, left * fb);
    }
  }
  return out;
}

std::string Section::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [key, f] : parts_) {
    if (!out.empty()) out += " + ";
    out += "r^" + to_string(key.q) + (key.rho ? " rho" : "") + " (x) (" + f.str() + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Section& s) { return os << s.str(); }

Section apply_Q(const Section& s) {
  Section out(s.dimension());
  for (const auto& [key, f] : s.parts()) {
    if (key.rho) {
      // -d(rho beta) = rho d beta; the other two terms carry rho twice.
      out += Section::term(key.q, f.d(), true);
      continue;
    }
    Rational q = key.q;
    out += Section::term(q - 1, f.scale_by_degree([&q](int k) { return kI * GaussRational(2 * q - k); }), true);
    out -= Section::term(q, f.d());
  }
  return out;
}

bool is_supersymmetric(const Section& s) { return apply_Q(s).is_zero(); }

Section q_squared(const Section& s) { return apply_Q(apply_Q(s)); }

Section q_squared_closed_form(const Section& s) {
  Section out(s.dimension());
  for (const auto& [key, f] : s.parts()) {
    if (key.rho) continue;
    out += Section::term(key.q - 1, kI * f.d(), true);
  }
  return out;
}

std::set<int> grade(const Section& s) {
  std::set<int> out;
  for (const auto& [key, f] : s.parts()) {
    for (int k : f.degrees()) out.insert((k + (key.rho ? 1 : 0)) % 4);
  }
  return out;
}

std::string TwoPiPower::str() const {
  std::string c = to_string(coeff);
  if (exponent == 0) return c;
  return c + "*(2pi)^" + to_string(exponent);
}

std::vector<CocycleTerm> to_cocycle(const Section& s) {
  if (!is_supersymmetric(s)) throw std::domain_error("to_cocycle: section is not supersymmetric");
  std::vector<CocycleTerm> out;
  for (const auto& [key, f] : s.parts()) {
    if (key.rho) continue;
    out.push_back({TwoPiPower{Rational(1), -key.q}, f});
  }
  return out;
}

Section from_closed_form(const std::vector<CocycleTerm>& cocycle) {
  Section out;
  for (const auto& [scale, form] : cocycle) {
    if (form.is_zero()) continue;
    if (!form.is_closed()) throw std::domain_error("from_closed_form: form is not closed");
    int k = form.degree();
    if (scale.exponent != Rational(-k, 2)) {
      throw std::domain_error("from_closed_form: (2pi) exponent does not match the degree");
    }
    out += Section::term(Rational(k, 2), GaussRational(Rational(1) / scale.coeff) * form);
  }
  return out;
}

std::vector<CocycleTerm> cocycle_product(const std::vector<CocycleTerm>& a, const std::vector<CocycleTerm>& b) {
  std::vector<CocycleTerm> out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      PolyForm w = x.form * y.form;
      if (!w.is_zero()) out.push_back({x.scale * y.scale, w});
    }
  }
  return out;
}

nlohmann::json cocycle_json(const std::vector<CocycleTerm>& cocycle) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [scale, form] : cocycle) {
    for (const auto& [key, c] : form.terms()) {
      GaussRational v = GaussRational(scale.coeff) * c;
      nlohmann::json t;
      t["coeff_num"] = numerator(v.re).str();
      t["coeff_den"] = denominator(v.re).str();
      if (!v.is_real()) {
        t["coeff_im_num"] = numerator(v.im).str();
        t["coeff_im_den"] = denominator(v.im).str();
      }
      t["two_pi_exponent"] = to_string(scale.exponent);
      t["monomial"] = key.powers;
      t["form_indices"] = key.dx;
      out.push_back(t);
    }
  }
  return out;
}

PolyForm SectionSampler::random_form(int degree, std::uint64_t stream) const {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + stream);
  std::uniform_int_distribution<int> count(1, 3);
  PolyForm out(n);
  if (degree < 0 || degree > n) return out;
  int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> powers(n, 0);
    std::uniform_int_distribution<int> deg(0, max_poly_degree);
    std::uniform_int_distribution<int> var(0, n - 1);
    for (int d = deg(rng); d > 0; --d) powers[var(rng)] += 1;
    out += PolyForm::monomial(n, small_coefficient(rng), powers, random_subset(rng, n, degree));
  }
  return out;
}

PolyForm SectionSampler::random_closed_form(int degree, std::uint64_t stream) const {
  std::mt19937_64 rng(seed * 0xC2B2AE3D27D4EB4FULL + stream);
  PolyForm out = PolyForm::monomial(n, small_coefficient(rng), std::vector<int>(n, 0), random_subset(rng, n, degree));
  if (degree > 0) out += random_form(degree - 1, stream ^ 0x5bd1e995ULL).d();
  return out;
}

}  // namespace supersdet
