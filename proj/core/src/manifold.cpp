#include "supersdet/manifold.hpp"

#include "supersdet/multiplicative_sequence.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace supersdet {

using json = nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& path, const std::string& message) {
  throw ManifoldError(ManifoldError::Kind::Parse, path, message);
}

[[noreturn]] void validation_error(const std::string& path, const std::string& message) {
  throw ManifoldError(ManifoldError::Kind::Validation, path, message);
}

const json& require(const json& doc, const std::string& key, const std::string& path) {
  if (!doc.is_object()) parse_error(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) parse_error(path + "/" + key, "missing field");
  return *it;
}

int read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) parse_error(path, "expected an integer");
  return v.get<int>();
}

std::string read_string(const json& v, const std::string& path) {
  if (!v.is_string()) parse_error(path, "expected a string");
  return v.get<std::string>();
}

Rational read_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception&) {
      parse_error(path, "bad rational '" + v.get<std::string>() + "'");
    }
  }
  parse_error(path, "expected an integer or a rational string");
}

BigInt read_bigint(const json& v, const std::string& path) {
  Rational q = read_rational(v, path);
  if (denominator(q) != 1) parse_error(path, "expected an integer");
  return numerator(q);
}

json rational_json(const Rational& q) {
  if (denominator(q) == 1 && abs(q) < Rational(1000000000)) return numerator(q).convert_to<std::int64_t>();
  return to_string(q);
}

CohomologyModel::Vector read_vector(const CohomologyModel& M, const json& list, const std::string& path) {
  if (!list.is_array()) parse_error(path, "expected an array");
  CohomologyModel::Vector v = M.zero();
  for (std::size_t t = 0; t < list.size(); ++t) {
    std::string p = path + "/" + std::to_string(t);
    std::string b = read_string(require(list[t], "basis", p), p + "/basis");
    int idx = M.index_of(b);
    if (idx < 0) parse_error(p + "/basis", "unknown basis element '" + b + "'");
    v[static_cast<std::size_t>(idx)] += read_rational(require(list[t], "coeff", p), p + "/coeff");
  }
  return v;
}

json vector_json(const CohomologyModel& M, const CohomologyModel::Vector& v) {
  json out = json::array();
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v[l] != 0) out.push_back({{"basis", M.basis[l].name}, {"coeff", rational_json(v[l])}});
  }
  return out;
}

bool is_zero(const CohomologyModel::Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

CohomologyModel::Vector add(CohomologyModel::Vector a, const CohomologyModel::Vector& b, const Rational& c = 1) {
  for (std::size_t l = 0; l < a.size(); ++l) a[l] += c * b[l];
  return a;
}

// Exponent vectors of length k for the partitions of k.
std::vector<GradedPolynomial::Monomial> partitions(int k) {
  std::vector<GradedPolynomial::Monomial> out;
  GradedPolynomial::Monomial m(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int remaining, int largest) {
    if (remaining == 0) {
      out.push_back(m);
      return;
    }
    for (int i = std::min(remaining, largest); i >= 1; --i) {
      ++m[static_cast<std::size_t>(i - 1)];
      rec(remaining - i, i);
      --m[static_cast<std::size_t>(i - 1)];
    }
  };
  rec(k, k);
  return out;
}

}  // namespace

ManifoldError::ManifoldError(Kind kind, std::string path, const std::string& message)
    : std::runtime_error((kind == Kind::Parse ? "parse error" : "validation error") +
                         (path.empty() ? std::string() : " at " + path) + ": " + message),
      kind_(kind),
      path_(std::move(path)) {}

void PontryaginData::validate() const {
  if (dimension < 0 || dimension % 4 != 0) validation_error("/dimension", "dimension must be a nonnegative multiple of 4");
  for (const auto& [m, c] : numbers) {
    if (static_cast<int>(m.size()) != k() || GradedPolynomial::weight(m) != k()) {
      validation_error("/pontryagin_numbers", "monomial " + monomial_name(ClassKind::Pontryagin, m) + " does not have weight " + std::to_string(k()));
    }
  }
}

PontryaginData PontryaginData::point() { return {"pt", 0, {{GradedPolynomial::Monomial{}, Rational(1)}}, 1}; }

int CohomologyModel::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].name == basis_name) return static_cast<int>(i);
  }
  return -1;
}

int CohomologyModel::unit_index() const {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].degree == 0) return static_cast<int>(i);
  }
  return -1;
}

CohomologyModel::Vector CohomologyModel::unit() const { return element(unit_index()); }

CohomologyModel::Vector CohomologyModel::element(int i) const {
  Vector v = zero();
  v.at(static_cast<std::size_t>(i)) = 1;
  return v;
}

CohomologyModel::Vector CohomologyModel::multiply(const Vector& x, const Vector& y) const {
  int u = unit_index();
  Vector out = zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      Rational c = x[i] * y[j];
      if (static_cast<int>(i) == u) {
        out[j] += c;
      } else if (static_cast<int>(j) == u) {
        out[i] += c;
      } else {
        auto it = products.find({static_cast<int>(i), static_cast<int>(j)});
        if (it != products.end()) out = add(out, it->second, c);
      }
    }
  }
  return out;
}

CohomologyModel::Vector CohomologyModel::power(const Vector& x, int e) const {
  Vector out = unit();
  for (int t = 0; t < e; ++t) out = multiply(out, x);
  return out;
}

Rational CohomologyModel::integrate(const Vector& x) const { return x.at(static_cast<std::size_t>(fundamental)); }

CohomologyModel::Vector CohomologyModel::part(const Vector& x, int d) const {
  Vector out = zero();
  for (std::size_t l = 0; l < x.size(); ++l) {
    if (basis[l].degree == d) out[l] = x[l];
  }
  return out;
}

CohomologyModel::Vector CohomologyModel::evaluate(const GradedPolynomial& in_p) const {
  Vector out = zero();
  for (const auto& [m, c] : in_p.terms()) {
    Vector t = unit();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      auto it = pontryagin.find(static_cast<int>(i + 1));
      if (it == pontryagin.end()) {
        t = zero();
        break;
      }
      t = multiply(t, power(it->second, m[i]));
    }
    out = add(out, t, c);
  }
  return out;
}

PontryaginData CohomologyModel::pontryagin_data() const {
  PontryaginData out{name, dimension, {}, signature};
  if (dimension % 4 != 0) return out;
  int k = dimension / 4;
  for (const auto& m : partitions(k)) {
    GradedPolynomial mono = GradedPolynomial::constant(ClassKind::Pontryagin, k, 1);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) mono = mono * GradedPolynomial::generator(ClassKind::Pontryagin, k, static_cast<int>(i + 1));
    }
    out.numbers[m] = integrate(evaluate(mono));
  }
  return out;
}

void CohomologyModel::validate() const {
  std::set<std::string> names;
  int units = 0;
  int tops = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& b = basis[i];
    std::string p = "/basis/" + std::to_string(i);
    if (b.name.empty() || !names.insert(b.name).second) validation_error(p + "/name", "duplicate or empty basis name '" + b.name + "'");
    if (b.degree < 0 || b.degree > dimension) validation_error(p + "/degree", "degree outside [0, dimension]");
    if (b.degree == 0) ++units;
    if (b.degree == dimension) ++tops;
  }
  if (units != 1) validation_error("/basis", "need exactly one basis element of degree 0");
  if (tops != 1) validation_error("/basis", "need exactly one basis element of top degree");
  if (fundamental < 0 || basis[static_cast<std::size_t>(fundamental)].degree != dimension) {
    validation_error("/fundamental", "fundamental class must have top degree");
  }
  int u = unit_index();
  auto nm = [&](std::size_t i) { return basis[i].name; };
  for (const auto& [ij, v] : products) {
    auto [i, j] = ij;
    std::string pair = "(" + nm(static_cast<std::size_t>(i)) + ", " + nm(static_cast<std::size_t>(j)) + ")";
    int d = basis[static_cast<std::size_t>(i)].degree + basis[static_cast<std::size_t>(j)].degree;
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (v[l] != 0 && basis[l].degree != d) validation_error("/products", "product " + pair + " is not homogeneous of degree " + std::to_string(d));
    }
    if ((i == u || j == u) && v != element(i == u ? j : i)) validation_error("/products", "product " + pair + " contradicts the unit");
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vector ab = multiply(element(static_cast<int>(i)), element(static_cast<int>(j)));
      Vector ba = multiply(element(static_cast<int>(j)), element(static_cast<int>(i)));
      Rational sign = (basis[i].degree * basis[j].degree) % 2 == 0 ? 1 : -1;
      if (ab != add(zero(), ba, sign)) validation_error("/products", "graded commutativity fails on (" + nm(i) + ", " + nm(j) + ")");
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Vector ab = multiply(element(static_cast<int>(i)), element(static_cast<int>(j)));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Vector left = multiply(ab, element(static_cast<int>(k)));
        Vector right = multiply(element(static_cast<int>(i)), multiply(element(static_cast<int>(j)), element(static_cast<int>(k))));
        if (left != right) validation_error("/products", "associativity fails on (" + nm(i) + ", " + nm(j) + ", " + nm(k) + ")");
      }
    }
  }
  for (const auto& [i, v] : pontryagin) {
    std::string p = "/pontryagin_classes/p" + std::to_string(i);
    for (std::size_t l = 0; l < v.size(); ++l) {
      if (v[l] != 0 && basis[l].degree != 4 * i) validation_error(p, "p" + std::to_string(i) + " must have degree " + std::to_string(4 * i));
    }
  }
}

Manifold load_manifold(const json& doc) {
  if (!doc.is_object()) parse_error("", "expected an object");
  std::string name = read_string(require(doc, "name", ""), "/name");
  int dimension = read_int(require(doc, "dimension", ""), "/dimension");
  std::string kind = read_string(require(doc, "kind", ""), "/kind");
  BigInt signature = read_bigint(require(doc, "signature", ""), "/signature");
  if (dimension < 0) parse_error("/dimension", "dimension must be nonnegative");

  if (kind == "pontryagin_numbers") {
    PontryaginData M{name, dimension, {}, signature};
    const json& nums = require(doc, "pontryagin_numbers", "");
    if (!nums.is_object()) parse_error("/pontryagin_numbers", "expected an object");
    if (dimension % 4 != 0) validation_error("/dimension", "dimension must be a multiple of 4");
    for (const auto& [key, value] : nums.items()) {
      std::string p = "/pontryagin_numbers/" + key;
      GradedPolynomial::Monomial m;
      try {
        m = parse_class_monomial(ClassKind::Pontryagin, M.k(), key);
      } catch (const std::exception& e) {
        parse_error(p, e.what());
      }
      M.numbers[m] = read_rational(value, p);
    }
    M.validate();
    return M;
  }
  if (kind != "cohomology_model") parse_error("/kind", "expected \"pontryagin_numbers\" or \"cohomology_model\"");

  CohomologyModel M;
  M.name = name;
  M.dimension = dimension;
  M.signature = signature;
  const json& basis = require(doc, "basis", "");
  if (!basis.is_array()) parse_error("/basis", "expected an array");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string p = "/basis/" + std::to_string(i);
    M.basis.push_back({read_string(require(basis[i], "name", p), p + "/name"), read_int(require(basis[i], "degree", p), p + "/degree")});
  }
  if (doc.contains("products")) {
    const json& prods = doc["products"];
    if (!prods.is_array()) parse_error("/products", "expected an array");
    for (std::size_t t = 0; t < prods.size(); ++t) {
      std::string p = "/products/" + std::to_string(t);
      std::string l = read_string(require(prods[t], "left", p), p + "/left");
      std::string r = read_string(require(prods[t], "right", p), p + "/right");
      int i = M.index_of(l);
      int j = M.index_of(r);
      if (i < 0) parse_error(p + "/left", "unknown basis element '" + l + "'");
      if (j < 0) parse_error(p + "/right", "unknown basis element '" + r + "'");
      if (M.products.count({i, j})) parse_error(p, "duplicate product");
      M.products[{i, j}] = read_vector(M, require(prods[t], "result", p), p + "/result");
    }
  }
  // Products listed in one order only are completed by graded commutativity.
  auto listed = M.products;
  for (const auto& [ij, v] : listed) {
    std::pair<int, int> ji{ij.second, ij.first};
    if (M.products.count(ji)) continue;
    int di = M.basis[static_cast<std::size_t>(ij.first)].degree;
    int dj = M.basis[static_cast<std::size_t>(ij.second)].degree;
    M.products[ji] = add(M.zero(), v, (di * dj) % 2 == 0 ? 1 : -1);
  }
  std::string fund = read_string(require(doc, "fundamental", ""), "/fundamental");
  M.fundamental = M.index_of(fund);
  if (M.fundamental < 0) parse_error("/fundamental", "unknown basis element '" + fund + "'");
  if (doc.contains("pontryagin_classes")) {
    const json& pc = doc["pontryagin_classes"];
    if (!pc.is_object()) parse_error("/pontryagin_classes", "expected an object");
    for (const auto& [key, value] : pc.items()) {
      std::string p = "/pontryagin_classes/" + key;
      auto m = [&] {
        try {
          return parse_class_monomial(ClassKind::Pontryagin, std::max(1, dimension / 4), key);
        } catch (const std::exception& e) {
          parse_error(p, e.what());
        }
      }();
      int i = 0;
      for (std::size_t q = 0; q < m.size(); ++q) {
        if (m[q] != 0) i = (m[q] == 1 && i == 0) ? static_cast<int>(q + 1) : -1;
      }
      if (i <= 0) parse_error(p, "expected a single class p_i");
      M.pontryagin[i] = read_vector(M, value, p);
    }
  }
  M.validate();
  return M;
}

Manifold load_manifold_source(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.compare(0, prefix.size(), prefix) == 0) return builtin_manifold(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw std::runtime_error("cannot open manifold file '" + source + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error("", e.what());
  }
  return load_manifold(doc);
}

PontryaginData pontryagin_data(const Manifold& m) {
  if (const auto* p = std::get_if<PontryaginData>(&m)) return *p;
  return std::get<CohomologyModel>(m).pontryagin_data();
}

json manifold_to_json(const Manifold& m) {
  json out;
  if (const auto* p = std::get_if<PontryaginData>(&m)) {
    out["name"] = p->name;
    out["dimension"] = p->dimension;
    out["kind"] = "pontryagin_numbers";
    json nums = json::object();
    for (const auto& [mono, c] : p->numbers) nums[monomial_name(ClassKind::Pontryagin, mono)] = rational_json(c);
    out["pontryagin_numbers"] = nums;
    out["signature"] = rational_json(Rational(p->signature));
    return out;
  }
  const auto& M = std::get<CohomologyModel>(m);
  out["name"] = M.name;
  out["dimension"] = M.dimension;
  out["kind"] = "cohomology_model";
  out["signature"] = rational_json(Rational(M.signature));
  out["basis"] = json::array();
  for (const auto& b : M.basis) out["basis"].push_back({{"name", b.name}, {"degree", b.degree}});
  out["products"] = json::array();
  for (const auto& [ij, v] : M.products) {
    if (ij.first > ij.second || is_zero(v)) continue;
    out["products"].push_back({{"left", M.basis[static_cast<std::size_t>(ij.first)].name},
                               {"right", M.basis[static_cast<std::size_t>(ij.second)].name},
                               {"result", vector_json(M, v)}});
  }
  out["fundamental"] = M.basis[static_cast<std::size_t>(M.fundamental)].name;
  json pc = json::object();
  for (const auto& [i, v] : M.pontryagin) pc["p" + std::to_string(i)] = vector_json(M, v);
  out["pontryagin_classes"] = pc;
  return out;
}

Rational l_genus(const PontryaginData& M, std::vector<std::string>* warnings) {
  M.validate();
  int k = M.k();
  if (k == 0) return M.numbers.count({}) ? M.numbers.at({}) : Rational(0);
  GradedPolynomial L = l_polynomials(k)[static_cast<std::size_t>(k - 1)];
  if (warnings) {
    for (const auto& [m, c] : L.terms()) {
      if (!M.numbers.count(m)) {
        warnings->push_back("missing Pontryagin number " + monomial_name(ClassKind::Pontryagin, m) + " treated as 0");
      }
    }
  }
  return L.pair(M.numbers);
}

CohomologyModel::Vector parse_class(const CohomologyModel& M, const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty class expression");
  CohomologyModel::Vector out = M.zero();
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("bad class expression '" + text + "'");
    }
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end;
    if (term.empty() || term.back() == '*') throw std::invalid_argument("bad class expression '" + text + "'");
    CohomologyModel::Vector t = add(M.zero(), M.unit(), sign);
    std::stringstream ss(term);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
      if (factor.empty()) throw std::invalid_argument("bad class expression '" + text + "'");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        t = add(M.zero(), t, parse_rational(factor));
        continue;
      }
      std::size_t caret = factor.find('^');
      std::string base = factor.substr(0, caret);
      int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
      int idx = M.index_of(base);
      if (idx < 0) throw std::invalid_argument("unknown basis element '" + base + "'");
      if (e < 0) throw std::invalid_argument("negative power in '" + text + "'");
      t = M.multiply(t, M.power(M.element(idx), e));
    }
    out = add(out, t);
  }
  return out;
}

Rational pushforward(const CohomologyModel::Vector& s, const CohomologyModel& M) {
  int k = M.dimension / 4;
  GradedPolynomial L = GradedPolynomial::constant(ClassKind::Pontryagin, std::max(k, 1), 1);
  if (k >= 1) {
    for (const auto& Lj : l_polynomials(k)) L += Lj;
  }
  return M.integrate(M.multiply(s, M.evaluate(L)));
}

PontryaginData product_manifold(const PontryaginData& M, const PontryaginData& N) {
  M.validate();
  N.validate();
  int km = M.k();
  int kn = N.k();
  int k = km + kn;
  using Mono = GradedPolynomial::Monomial;
  using Split = std::pair<Mono, Mono>;
  PontryaginData out{M.name + "x" + N.name, M.dimension + N.dimension, {}, M.signature * N.signature};
  for (const auto& lambda : partitions(k)) {
    // Expand prod_i p_i(MxN)^{lambda_i} with p_i = sum_a p_a(M) p_{i-a}(N).
    std::map<Split, Rational> acc{{{Mono(static_cast<std::size_t>(km), 0), Mono(static_cast<std::size_t>(kn), 0)}, Rational(1)}};
    for (int i = 1; i <= k; ++i) {
      for (int e = 0; e < lambda[static_cast<std::size_t>(i - 1)]; ++e) {
        std::map<Split, Rational> next;
        for (const auto& [split, c] : acc) {
          for (int a = std::max(0, i - kn); a <= std::min(i, km); ++a) {
            Split s = split;
            if (a > 0) ++s.first[static_cast<std::size_t>(a - 1)];
            if (i - a > 0) ++s.second[static_cast<std::size_t>(i - a - 1)];
            if (GradedPolynomial::weight(s.first) > km || GradedPolynomial::weight(s.second) > kn) continue;
            next[s] += c;
          }
        }
        acc = std::move(next);
      }
    }
    Rational value = 0;
    for (const auto& [split, c] : acc) {
      auto a = M.numbers.find(split.first);
      auto b = N.numbers.find(split.second);
      if (a != M.numbers.end() && b != N.numbers.end()) value += c * a->second * b->second;
    }
    out.numbers[lambda] = value;
  }
  return out;
}

CohomologyModel product_model(const CohomologyModel& M, const CohomologyModel& N) {
  CohomologyModel P;
  P.name = M.name + "x" + N.name;
  P.dimension = M.dimension + N.dimension;
  P.signature = M.signature * N.signature;
  int um = M.unit_index();
  int un = N.unit_index();
  std::size_t nn = N.basis.size();
  auto idx = [&](std::size_t a, std::size_t b) { return a * nn + b; };
  for (std::size_t a = 0; a < M.basis.size(); ++a) {
    for (std::size_t b = 0; b < nn; ++b) {
      std::string left = static_cast<int>(a) == um ? "" : M.basis[a].name + "_1";
      std::string right = static_cast<int>(b) == un ? "" : N.basis[b].name + "_2";
      std::string name = left.empty() ? (right.empty() ? "1" : right) : (right.empty() ? left : left + "*" + right);
      P.basis.push_back({name, M.basis[a].degree + N.basis[b].degree});
    }
  }
  auto tensor = [&](const CohomologyModel::Vector& x, const CohomologyModel::Vector& y) {
    CohomologyModel::Vector out = P.zero();
    for (std::size_t a = 0; a < x.size(); ++a) {
      for (std::size_t b = 0; b < y.size(); ++b) out[idx(a, b)] += x[a] * y[b];
    }
    return out;
  };
  for (std::size_t a = 0; a < M.basis.size(); ++a) {
    for (std::size_t b = 0; b < nn; ++b) {
      for (std::size_t c = 0; c < M.basis.size(); ++c) {
        for (std::size_t d = 0; d < nn; ++d) {
          if (idx(a, b) == static_cast<std::size_t>(P.unit_index()) || idx(c, d) == static_cast<std::size_t>(P.unit_index())) continue;
          auto ac = M.multiply(M.element(static_cast<int>(a)), M.element(static_cast<int>(c)));
          auto bd = N.multiply(N.element(static_cast<int>(b)), N.element(static_cast<int>(d)));
          auto v = tensor(ac, bd);
          if (is_zero(v)) continue;
          Rational sign = (N.basis[b].degree * M.basis[c].degree) % 2 == 0 ? 1 : -1;
          P.products[{static_cast<int>(idx(a, b)), static_cast<int>(idx(c, d))}] = add(P.zero(), v, sign);
        }
      }
    }
  }
  P.fundamental = static_cast<int>(idx(static_cast<std::size_t>(M.fundamental), static_cast<std::size_t>(N.fundamental)));
  for (int i = 1; i <= P.dimension / 4; ++i) {
    CohomologyModel::Vector v = P.zero();
    for (int a = 0; a <= i; ++a) {
      auto pm = a == 0 ? M.unit() : (M.pontryagin.count(a) ? M.pontryagin.at(a) : M.zero());
      auto pn = i - a == 0 ? N.unit() : (N.pontryagin.count(i - a) ? N.pontryagin.at(i - a) : N.zero());
      v = add(v, tensor(pm, pn));
    }
    if (!is_zero(v)) P.pontryagin[i] = v;
  }
  return P;
}

}  // namespace supersdet
