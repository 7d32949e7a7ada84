#include "supersdet/grassmann.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace supersdet {

namespace {

bool is_jet(const std::string& name) { return name.find('.') != std::string::npos; }

// Sorts `odd` in place; returns the permutation sign, or 0 if a name repeats.
int canonicalize_odd(OddMonomial& odd) {
  int sign = 1;
  for (std::size_t i = 1; i < odd.size(); ++i) {
    for (std::size_t j = i; j > 0 && odd[j - 1] >= odd[j]; --j) {
      if (odd[j - 1] == odd[j]) return 0;
      std::swap(odd[j - 1], odd[j]);
      sign = -sign;
    }
  }
  return sign;
}

// Product of two sorted odd monomials; returns sign (0 if they overlap).
int merge_odd(const OddMonomial& a, const OddMonomial& b, OddMonomial& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int inversions = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      inversions += static_cast<int>(a.size() - i);
      out.push_back(b[j++]);
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) out.push_back(b[j++]);
  return (inversions % 2 == 0) ? 1 : -1;
}

void add_exponents(EvenMonomial& into, const EvenMonomial& from) {
  for (const auto& [name, e] : from) {
    int& slot = into[name];
    slot += e;
    if (slot == 0) into.erase(name);
  }
}

std::string render_monomial(const TermKey& key) {
  std::string out;
  auto append = [&out](const std::string& s) {
    if (!out.empty()) out += "*";
    out += s;
  };
  for (const auto& name : key.odd) append(name);
  for (const auto& [name, e] : key.even) append(e == 1 ? name : name + "^" + std::to_string(e));
  return out;
}

}  // namespace

GrassmannElement::GrassmannElement(int c) : GrassmannElement(GaussRational(c)) {}

GrassmannElement::GrassmannElement(GaussRational c) {
  if (!c.is_zero()) terms_.emplace(TermKey{}, std::move(c));
}

GrassmannElement GrassmannElement::odd(const std::string& name) {
  return term(1, {name}, {});
}

GrassmannElement GrassmannElement::even(const std::string& name, int power) {
  if (power == 0) return GrassmannElement(1);
  return term(1, {}, {{name, power}});
}

GrassmannElement GrassmannElement::term(GaussRational coeff, OddMonomial odd, EvenMonomial even) {
  GrassmannElement out;
  int sign = canonicalize_odd(odd);
  if (sign == 0 || coeff.is_zero()) return out;
  for (auto it = even.begin(); it != even.end();) {
    it = (it->second == 0) ? even.erase(it) : std::next(it);
  }
  out.add_term(TermKey{std::move(odd), std::move(even)}, sign == 1 ? coeff : -coeff);
  return out;
}

void GrassmannElement::add_term(const TermKey& key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Parity GrassmannElement::parity() const {
  bool even = false;
  bool odd = false;
  for (const auto& [key, c] : terms_) {
    (key.odd.size() % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

GaussRational GrassmannElement::coefficient(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? GaussRational{} : it->second;
}

GrassmannElement GrassmannElement::body() const {
  GrassmannElement out;
  for (const auto& [key, c] : terms_) {
    if (key.odd.empty()) out.add_term(key, c);
  }
  return out;
}

bool GrassmannElement::mentions(const std::string& name) const {
  for (const auto& [key, c] : terms_) {
    if (std::find(key.odd.begin(), key.odd.end(), name) != key.odd.end()) return true;
    if (key.even.count(name) != 0) return true;
  }
  return false;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const GaussRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, value] : terms_) value *= c;
  return *this;
}

GrassmannElement& GrassmannElement::operator*=(const GrassmannElement& o) {
  *this = *this * o;
  return *this;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement out;
  OddMonomial merged;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      int sign = merge_odd(ka.odd, kb.odd, merged);
      if (sign == 0) continue;
      TermKey key{merged, ka.even};
      add_exponents(key.even, kb.even);
      GaussRational c = ca * cb;
      out.add_term(key, sign == 1 ? c : -c);
    }
  }
  return out;
}

GrassmannElement operator-(const GrassmannElement& a) {
  GrassmannElement out = a;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

GrassmannElement GrassmannElement::inverse() const {
  GrassmannElement lead = body();
  if (lead.terms_.size() != 1) {
    throw std::domain_error("inverse: odd-free part must be a single monomial, got " + lead.str());
  }
  const auto& [key, c] = *lead.terms_.begin();
  EvenMonomial inv_even;
  for (const auto& [name, e] : key.even) inv_even[name] = -e;
  GrassmannElement lead_inv = term(c.inverse(), {}, inv_even);
  // (L + N)^-1 = L^-1 * sum_k (-N L^-1)^k, N nilpotent.
  GrassmannElement ratio = -((*this - lead) * lead_inv);
  GrassmannElement sum = 1;
  GrassmannElement p = 1;
  for (std::size_t k = 0; k < 64; ++k) {
    p = p * ratio;
    if (p.is_zero()) return lead_inv * sum;
    sum += p;
  }
  throw std::domain_error("inverse: correction is not nilpotent");
}

std::string GrassmannElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string mono = render_monomial(key);
    std::string coeff = to_string(c);
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (c == GaussRational(1)) {
      piece = mono;
    } else if (c == GaussRational(-1)) {
      piece = "-" + mono;
    } else {
      piece = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GrassmannElement& g) { return os << g.str(); }

GrassmannElement power(const GrassmannElement& x, unsigned n) {
  GrassmannElement out = 1;
  for (unsigned k = 0; k < n; ++k) out = out * x;
  return out;
}

GrassmannElement exp_nilpotent(const GrassmannElement& x) {
  GrassmannElement sum = 1;
  GrassmannElement p = 1;
  for (unsigned k = 1; k < 128; ++k) {
    p = p * x * GaussRational(Rational(1, k));
    if (p.is_zero()) return sum;
    sum += p;
  }
  throw std::domain_error("exp_nilpotent: argument is not nilpotent");
}

GrassmannElement d_odd(const GrassmannElement& f, const std::string& name) {
  GrassmannElement out;
  for (const auto& [key, c] : f.terms()) {
    auto it = std::find(key.odd.begin(), key.odd.end(), name);
    if (it == key.odd.end()) continue;
    auto pos = static_cast<std::size_t>(it - key.odd.begin());
    OddMonomial rest = key.odd;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
    out += GrassmannElement::term(pos % 2 == 0 ? c : -c, rest, key.even);
  }
  return out;
}

GrassmannElement d_even(const GrassmannElement& f, const std::string& name) {
  GrassmannElement out;
  for (const auto& [key, c] : f.terms()) {
    auto it = key.even.find(name);
    if (it == key.even.end()) continue;
    int e = it->second;
    EvenMonomial even = key.even;
    even[name] = e - 1;
    out += GrassmannElement::term(c * GaussRational(e), key.odd, even);
  }
  return out;
}

GrassmannElement d_time(const GrassmannElement& f) {
  GrassmannElement out;
  for (const auto& [key, c] : f.terms()) {
    for (const auto& [name, e] : key.even) {
      if (name != "t" && !is_jet(name)) continue;
      EvenMonomial even = key.even;
      even[name] = e - 1;
      if (name != "t") even[name + "'"] += 1;
      out += GrassmannElement::term(c * GaussRational(e), key.odd, even);
    }
    for (std::size_t pos = 0; pos < key.odd.size(); ++pos) {
      if (!is_jet(key.odd[pos])) continue;
      OddMonomial odd = key.odd;
      odd[pos] += "'";
      // Even derivation: replace in place, then canonicalize (term() sorts with sign).
      out += GrassmannElement::term(c, odd, key.even);
    }
  }
  return out;
}

GrassmannElement berezin(const GrassmannElement& f, const std::vector<std::string>& vars) {
  GrassmannElement out;
  for (const auto& [key, c] : f.terms()) {
    bool all = std::all_of(vars.begin(), vars.end(), [&](const std::string& v) {
      return std::find(key.odd.begin(), key.odd.end(), v) != key.odd.end();
    });
    if (!all) continue;
    // Move vars to the front in the given order, counting transpositions.
    OddMonomial rest;
    for (const auto& name : key.odd) {
      if (std::find(vars.begin(), vars.end(), name) == vars.end()) rest.push_back(name);
    }
    OddMonomial arranged = vars;
    arranged.insert(arranged.end(), rest.begin(), rest.end());
    OddMonomial sorted = arranged;
    int sign = canonicalize_odd(sorted);
    // arranged = sign * sorted, so sorted-term coefficient c contributes sign*c.
    out += GrassmannElement::term(sign == 1 ? c : -c, rest, key.even);
  }
  return out;
}

GrassmannElement substitute(const GrassmannElement& f,
                            const std::map<std::string, GrassmannElement>& even_images,
                            const std::map<std::string, GrassmannElement>& odd_images) {
  std::map<std::string, GrassmannElement> inverses;
  GrassmannElement out;
  for (const auto& [key, c] : f.terms()) {
    GrassmannElement value = c;
    for (const auto& name : key.odd) {
      auto it = odd_images.find(name);
      value = value * (it == odd_images.end() ? GrassmannElement::odd(name) : it->second);
    }
    for (const auto& [name, e] : key.even) {
      auto it = even_images.find(name);
      if (it == even_images.end()) {
        value = value * GrassmannElement::even(name, e);
        continue;
      }
      if (e > 0) {
        value = value * power(it->second, static_cast<unsigned>(e));
      } else {
        auto inv = inverses.find(name);
        if (inv == inverses.end()) inv = inverses.emplace(name, it->second.inverse()).first;
        value = value * power(inv->second, static_cast<unsigned>(-e));
      }
    }
    out += value;
  }
  return out;
}

}  // namespace supersdet
