#include "supersdet/linearized_action.hpp"

#include "supersdet/super_group.hpp"

#include <algorithm>
#include <functional>

namespace supersdet {

namespace {

struct Jet {
  std::string name;
  std::string base;
  int order = 0;
  bool odd = false;
};

Jet parse_jet(const std::string& name, bool odd) {
  auto prime = name.find('\'');
  Jet j{name, name.substr(0, prime), 0, odd};
  if (prime != std::string::npos) j.order = static_cast<int>(name.size() - prime);
  return j;
}

std::string with_order(const std::string& base, int order) { return base + std::string(order, '\''); }

bool is_field(const std::string& name) { return name.find('.') != std::string::npos; }

std::string family_of(const std::string& base) { return base.substr(0, base.find('.')); }

// Normal form of a single term; `fields` holds the two field factors in the
// order their product is written, `rest` the remaining even monomial.
GrassmannElement normalize_pair(const GaussRational& c, Jet f, Jet s, const EvenMonomial& rest) {
  int total = f.order + s.order;
  GaussRational coeff = c;
  if (f.base > s.base) {
    if (s.order % 2 == 1) coeff = -coeff;
    f.order = total;
    s.order = 0;
  } else {
    if (f.order % 2 == 1) coeff = -coeff;
    f.order = 0;
    s.order = total;
    if (f.base == s.base && (f.odd ? total % 2 == 0 : total % 2 == 1)) return {};
  }
  OddMonomial odd;
  EvenMonomial even = rest;
  for (const Jet* j : {&f, &s}) {
    std::string name = with_order(j->base, j->order);
    if (j->odd) odd.push_back(name);
    else even[name] += 1;
  }
  return GrassmannElement::term(coeff, odd, even);
}

GrassmannElement superfield(int j) {
  GrassmannElement th1 = GrassmannElement::odd(sym::theta1);
  GrassmannElement th2 = GrassmannElement::odd(sym::theta2);
  return GrassmannElement::even(field_symbol("a", j)) + th1 * GrassmannElement::odd(field_symbol("eta1", j)) +
         th2 * GrassmannElement::odd(field_symbol("eta2", j)) +
         th1 * th2 * GrassmannElement::even(field_symbol("G", j));
}

GrassmannElement field(const std::string& family, int j, int order) {
  std::string name = field_symbol(family, j, order);
  return (family == "eta1" || family == "eta2") ? GrassmannElement::odd(name) : GrassmannElement::even(name);
}

// sum_jk R_jk x_k y_j for generators produced by x(k), y(j).
GrassmannElement curvature_pairing(int n, const std::function<GrassmannElement(int)>& x,
                                   const std::function<GrassmannElement(int)>& y) {
  GrassmannElement out;
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) out += curvature_entry(j, k) * x(k) * y(j);
  }
  return out;
}

std::array<GrassmannElement, 6> structures(int n) {
  std::array<GrassmannElement, 6> s;
  for (int j = 1; j <= n; ++j) {
    s[0] += field("a", j, 1) * field("a", j, 1);
    s[1] += field("eta1", j, 0) * field("eta1", j, 1);
    s[2] += field("eta2", j, 1) * field("eta2", j, 0);
    s[5] += field("G", j, 0) * field("G", j, 0);
  }
  s[3] = curvature_pairing(n, [](int k) { return field("a", k, 0); }, [](int j) { return field("a", j, 1); });
  s[4] = curvature_pairing(n, [](int k) { return field("eta2", k, 0); }, [](int j) { return field("eta2", j, 0); });
  for (auto& e : s) e = total_derivative_normal_form(e);
  return s;
}

// Coefficients c with target == sum_i c_i basis_i, for bases with disjoint
// support; zero basis elements get coefficient 0.
std::vector<GaussRational> decompose_disjoint(const GrassmannElement& target,
                                              const std::vector<GrassmannElement>& basis) {
  std::vector<GaussRational> c(basis.size());
  GrassmannElement rebuilt;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    const auto& [key, value] = *basis[i].terms().begin();
    c[i] = target.coefficient(key) / value;
    rebuilt += c[i] * basis[i];
  }
  if (!(rebuilt == target)) {
    throw StructuralError("decompose: residual terms " + (target - rebuilt).str());
  }
  return c;
}

GrassmannElement sector(const GrassmannElement& normal_form, const std::string& family) {
  GrassmannElement out;
  for (const auto& [key, c] : normal_form.terms()) {
    bool in = false;
    for (const auto& name : key.odd) in = in || family_of(name) == family;
    for (const auto& [name, e] : key.even) in = in || (is_field(name) && family_of(name) == family);
    if (in) out += GrassmannElement::term(c, key.odd, key.even);
  }
  return out;
}

ComponentOperator unit_operator(const std::string& family, int order, bool curvature) {
  ComponentOperator op{family, BoundaryCondition::Periodic, std::vector<GaussRational>(order + 1),
                       std::vector<GaussRational>(order + 1)};
  (curvature ? op.curv : op.id)[order] = 1;
  return op;
}

constexpr int kMaxOrder = 2;

std::pair<ComponentOperator, GaussRational> extract_operator(const GrassmannElement& sec,
                                                             const std::string& family, int n) {
  std::vector<GrassmannElement> basis;
  for (int m = 0; m <= kMaxOrder; ++m) {
    basis.push_back(quadratic_form(unit_operator(family, m, false), n));
    basis.push_back(quadratic_form(unit_operator(family, m, true), n));
  }
  std::vector<GaussRational> c = decompose_disjoint(sec, basis);
  int top = -1;
  for (int m = kMaxOrder; m >= 0 && top < 0; --m) {
    if (!c[2 * m].is_zero()) top = m;
  }
  if (top < 0) throw StructuralError("extract_operator: sector " + family + " has no leading term");
  GaussRational lambda = c[2 * top];
  ComponentOperator op{family, BoundaryCondition::Periodic, {}, {}};
  for (int m = 0; m <= top; ++m) {
    op.id.push_back(c[2 * m] / lambda);
    op.curv.push_back(c[2 * m + 1] / lambda);
  }
  return {op, lambda};
}

std::string render_coeff(const GaussRational& c, const std::string& symbol) {
  if (symbol.empty()) return to_string(c);
  if (c == GaussRational(1)) return symbol;
  if (c == GaussRational(-1)) return "-" + symbol;
  return to_string(c) + " " + symbol;
}

}  // namespace

GrassmannElement curvature_entry(int j, int k) {
  if (j == k) return {};
  if (j > k) return -curvature_entry(k, j);
  return GrassmannElement::even("R_" + std::to_string(j) + "_" + std::to_string(k));
}

std::string field_symbol(const std::string& family, int j, int order) {
  return with_order(family + "." + std::to_string(j), order);
}

GrassmannElement total_derivative_normal_form(const GrassmannElement& lagrangian) {
  GrassmannElement out;
  for (const auto& [key, c] : lagrangian.terms()) {
    std::vector<Jet> fields;
    EvenMonomial rest;
    for (const auto& name : key.odd) {
      if (!is_field(name)) throw StructuralError("normal form: stray odd generator " + name);
      fields.push_back(parse_jet(name, true));
    }
    for (const auto& [name, e] : key.even) {
      if (!is_field(name)) {
        rest[name] = e;
        continue;
      }
      for (int k = 0; k < e; ++k) fields.push_back(parse_jet(name, false));
    }
    if (fields.size() != 2) {
      throw StructuralError("normal form: term is not quadratic in the fields");
    }
    if (fields[0].odd != fields[1].odd) {
      throw StructuralError("normal form: mixed-parity pairing");
    }
    out += normalize_pair(c, fields[0], fields[1], rest);
  }
  return out;
}

GrassmannElement lagrangian_from_shape(const LagrangianShape& shape, int n) {
  auto s = structures(n);
  GrassmannElement out;
  for (std::size_t i = 0; i < s.size(); ++i) out += shape.coeff[i] * s[i];
  return out;
}

LagrangianShape decompose_lagrangian(const GrassmannElement& normal_form, int n) {
  auto s = structures(n);
  auto c = decompose_disjoint(normal_form, {s.begin(), s.end()});
  LagrangianShape shape;
  std::copy(c.begin(), c.end(), shape.coeff.begin());
  return shape;
}

ComponentOperator ComponentOperator::with_curvature_sign(int sign) const {
  ComponentOperator out = *this;
  for (auto& c : out.curv) c = sign * c;
  return out;
}

std::string ComponentOperator::str() const {
  std::string out;
  for (int m = order(); m >= 0; --m) {
    std::string d = m == 0 ? "" : (m == 1 ? "d" : "d^" + std::to_string(m));
    for (const auto& [c, mat] : {std::pair{id[m], std::string()}, std::pair{curv[m], std::string("R")}}) {
      if (c.is_zero()) continue;
      std::string sym = mat.empty() ? d : (d.empty() ? mat : mat + " " + d);
      std::string piece = render_coeff(c, sym.empty() ? "Id" : sym);
      if (out.empty()) out = piece;
      else if (piece[0] == '-') out += " - " + piece.substr(1);
      else out += " + " + piece;
    }
  }
  return out.empty() ? "0" : out;
}

GrassmannElement quadratic_form(const ComponentOperator& op, int n) {
  GrassmannElement out;
  for (int j = 1; j <= n; ++j) {
    GrassmannElement df;
    for (int m = 0; m <= op.order(); ++m) {
      df += op.id[m] * field(op.family, j, m);
      for (int k = 1; k <= n; ++k) df += op.curv[m] * curvature_entry(j, k) * field(op.family, k, m);
    }
    out += field(op.family, j, 0) * df;
  }
  return total_derivative_normal_form(out);
}

LinearizedAction expand_linearized_action(int n) {
  if (n < 1) throw std::invalid_argument("expand_linearized_action: n must be positive");
  LinearizedAction out;
  out.n = n;
  GrassmannElement th1 = GrassmannElement::odd(sym::theta1);
  std::vector<GrassmannElement> dv;
  for (int j = 1; j <= n; ++j) dv.push_back(superfield(j));
  for (int j = 1; j <= n; ++j) {
    GrassmannElement d1 = apply_D(1, dv[j - 1]);
    for (int k = 1; k <= n; ++k) d1 += th1 * curvature_entry(j, k) * dv[k - 1];
    out.integrand += d1 * apply_D(2, dv[j - 1]);
  }
  out.lagrangian = berezin(out.integrand, {sym::theta1, sym::theta2});
  out.normal_form = total_derivative_normal_form(out.lagrangian);
  out.shape = decompose_lagrangian(out.normal_form, n);

  // dv(mu(p)) = dv(p) with mu = lattice translation after r+r-.
  SuperPoint hol = act_time_reversal(TimeReversal::r_plus() * TimeReversal::r_minus(),
                                     SuperPoint::generic_r12());
  std::map<std::string, GrassmannElement> images{{sym::theta1, hol.odd[0]}, {sym::theta2, hol.odd[1]}};
  GrassmannElement probe = superfield(1);
  for (const auto& [key, c] : probe.terms()) {
    OddMonomial thetas;
    std::string family;
    for (const auto& name : key.odd) {
      if (is_field(name)) family = family_of(name);
      else thetas.push_back(name);
    }
    for (const auto& [name, e] : key.even) family = family_of(name);
    GrassmannElement mono = GrassmannElement::term(c, thetas, {});
    bool fixed = substitute(mono, {}, images) == mono;
    out.boundary[family] = fixed ? BoundaryCondition::Periodic : BoundaryCondition::Antiperiodic;
  }

  for (const std::string family : {"a", "eta1", "eta2"}) {
    auto [op, lambda] = extract_operator(sector(out.normal_form, family), family, n);
    op.boundary = out.boundary.at(family);
    out.operators.push_back(op);
    out.prefactor[family] = lambda;
  }
  return out;
}

LagrangianShape reference_shape() {
  GaussRational i = GaussRational::i();
  return LagrangianShape{{GaussRational(1), -i, i, -i, GaussRational(1), GaussRational(1)}};
}

std::vector<ComponentOperator> reference_operators() {
  GaussRational i = GaussRational::i();
  return {
      {"a", BoundaryCondition::Periodic, {0, 0, 1}, {0, -i, 0}},
      {"eta1", BoundaryCondition::Periodic, {0, 1}, {0, 0}},
      {"eta2", BoundaryCondition::Antiperiodic, {0, 1}, {i, 0}},
  };
}

std::map<std::string, BoundaryCondition> reference_boundary() {
  return {{"a", BoundaryCondition::Periodic},
          {"eta1", BoundaryCondition::Periodic},
          {"eta2", BoundaryCondition::Antiperiodic},
          {"G", BoundaryCondition::Antiperiodic}};
}

bool ActionComparison::lagrangian_match() const {
  return std::all_of(structures.begin(), structures.end(), [](const auto& s) { return s.match; });
}

bool ActionComparison::operators_match() const {
  for (const auto& ref : reference_operators()) {
    auto it = operator_signs.find(ref.family);
    if (it == operator_signs.end()) return false;
    if (std::find(it->second.begin(), it->second.end(), curvature_sign) == it->second.end()) return false;
  }
  return true;
}

ActionComparison compare_with_reference(const LinearizedAction& action) {
  LagrangianShape ref = reference_shape();
  ActionComparison best;
  int best_count = -1;
  for (int eps : {1, -1}) {
    for (int sigma : {1, -1}) {
      ActionComparison cmp;
      cmp.global_sign = eps;
      cmp.curvature_sign = sigma;
      int count = 0;
      for (std::size_t s = 0; s < ref.coeff.size(); ++s) {
        int sign = eps * (LagrangianShape::kCurvature[s] ? sigma : 1);
        GaussRational computed = sign * action.shape.coeff[s];
        bool match = computed == ref.coeff[s];
        count += match ? 1 : 0;
        cmp.structures.push_back({LagrangianShape::kNames[s], computed, ref.coeff[s], match});
      }
      if (count > best_count) {
        best_count = count;
        best = cmp;
      }
    }
  }
  for (const auto& ref_op : reference_operators()) {
    auto& signs = best.operator_signs[ref_op.family];
    for (const auto& op : action.operators) {
      if (op.family != ref_op.family) continue;
      for (int sigma : {1, -1}) {
        ComponentOperator flipped = op.with_curvature_sign(sigma);
        if (flipped.id == ref_op.id && flipped.curv == ref_op.curv) signs.push_back(sigma);
      }
    }
  }
  best.boundary_match = action.boundary == reference_boundary();
  return best;
}

}  // namespace supersdet
