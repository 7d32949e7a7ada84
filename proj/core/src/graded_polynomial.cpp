#include "supersdet/graded_polynomial.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>

namespace supersdet {

std::string symbol_prefix(ClassKind kind) { return kind == ClassKind::Pontryagin ? "p" : "ph"; }

GradedPolynomial::GradedPolynomial(ClassKind kind, int K) : kind_(kind), K_(K) {
  if (K < 0) throw std::invalid_argument("GradedPolynomial: negative truncation");
}

GradedPolynomial GradedPolynomial::constant(ClassKind kind, int K, const Rational& c) {
  GradedPolynomial out(kind, K);
  out.add(Monomial(static_cast<std::size_t>(K), 0), c);
  return out;
}

GradedPolynomial GradedPolynomial::generator(ClassKind kind, int K, int i) {
  if (i < 1 || i > K) throw std::invalid_argument("GradedPolynomial: generator index out of range");
  GradedPolynomial out(kind, K);
  Monomial m(static_cast<std::size_t>(K), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  out.add(m, 1);
  return out;
}

int GradedPolynomial::weight(const Monomial& m) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
  return w;
}

void GradedPolynomial::add(const Monomial& m, const Rational& c) {
  if (c == 0 || weight(m) > K_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GradedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedPolynomial GradedPolynomial::part(int w) const {
  GradedPolynomial out(kind_, K_);
  for (const auto& [m, c] : terms_) {
    if (weight(m) == w) out.add(m, c);
  }
  return out;
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
  if (o.kind_ != kind_ || o.K_ != K_) throw std::invalid_argument("GradedPolynomial: incompatible operands");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
  if (o.kind_ != kind_ || o.K_ != K_) throw std::invalid_argument("GradedPolynomial: incompatible operands");
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
  if (a.kind_ != b.kind_ || a.K_ != b.K_) throw std::invalid_argument("GradedPolynomial: incompatible operands");
  GradedPolynomial out(a.kind_, a.K_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      GradedPolynomial::Monomial m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add(m, ca * cb);
    }
  }
  return out;
}

GradedPolynomial operator*(const Rational& c, const GradedPolynomial& a) {
  GradedPolynomial out(a.kind_, a.K_);
  for (const auto& [m, v] : a.terms_) out.add(m, c * v);
  return out;
}

GradedPolynomial GradedPolynomial::exp() const {
  if (coefficient(Monomial(static_cast<std::size_t>(K_), 0)) != 0) {
    throw std::domain_error("GradedPolynomial::exp: constant term must vanish");
  }
  GradedPolynomial sum = constant(kind_, K_, 1);
  GradedPolynomial p = sum;
  for (int m = 1; m <= K_; ++m) {
    p = Rational(1, m) * (p * *this);
    sum += p;
  }
  return sum;
}

GradedPolynomial GradedPolynomial::substitute(const std::vector<GradedPolynomial>& images) const {
  if (static_cast<int>(images.size()) != K_) throw std::invalid_argument("substitute: need K images");
  ClassKind target = images.empty() ? kind_ : images[0].kind_;
  GradedPolynomial out(target, K_);
  for (const auto& [m, c] : terms_) {
    GradedPolynomial term = constant(target, K_, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) term = term * images[i];
    }
    out += term;
  }
  return out;
}

Rational GradedPolynomial::pair(const std::map<Monomial, Rational>& numbers) const {
  Rational out = 0;
  for (const auto& [m, c] : terms_) {
    auto it = numbers.find(m);
    if (it != numbers.end()) out += c * it->second;
  }
  return out;
}

std::string monomial_name(ClassKind kind, const GradedPolynomial::Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += symbol_prefix(kind) + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

GradedPolynomial::Monomial parse_class_monomial(ClassKind kind, int K, const std::string& text) {
  GradedPolynomial::Monomial m(static_cast<std::size_t>(K), 0);
  if (text == "1") return m;
  std::string prefix = symbol_prefix(kind);
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    std::string factor = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? text.size() : end + 1;
    if (factor.compare(0, prefix.size(), prefix) != 0) {
      throw std::invalid_argument("bad class monomial '" + text + "'");
    }
    std::string rest = factor.substr(prefix.size());
    std::size_t caret = rest.find('^');
    std::string idx = rest.substr(0, caret);
    std::string exp = caret == std::string::npos ? "1" : rest.substr(caret + 1);
    auto digits = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(idx) || !digits(exp)) throw std::invalid_argument("bad class monomial '" + text + "'");
    int i = std::stoi(idx);
    if (i < 1 || i > K) throw std::invalid_argument("class index out of range in '" + text + "'");
    m[static_cast<std::size_t>(i - 1)] += std::stoi(exp);
  }
  return m;
}

std::string GradedPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return weight(a.first) < weight(b.first); });
  std::string out;
  for (const auto& [m, c] : ordered) {
    std::string name = monomial_name(kind_, m);
    Rational a = abs(c);
    std::string piece = name == "1" ? to_string(a) : (a == 1 ? name : to_string(a) + "*" + name);
    if (out.empty()) out = c < 0 ? "-" + piece : piece;
    else out += (c < 0 ? " - " : " + ") + piece;
  }
  return out;
}

nlohmann::json GradedPolynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    out.push_back({{"monomial", m}, {"num", numerator(c).str()}, {"den", denominator(c).str()}});
  }
  return out;
}

}  // namespace supersdet
