#include "supersdet/poly_form.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace supersdet {

namespace {

// Sorts indices in place; returns the permutation sign or 0 on repetition.
int sort_indices(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

// All exponent vectors of length n with total degree <= max_deg.
void exponent_vectors(int n, int max_deg, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.push_back(cur);
    return;
  }
  int used = std::accumulate(cur.begin(), cur.end(), 0);
  for (int e = 0; e + used <= max_deg; ++e) {
    cur.push_back(e);
    exponent_vectors(n, max_deg, cur, out);
    cur.pop_back();
  }
}

void index_subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    index_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

PolyForm PolyForm::constant(int n, const GaussRational& c) {
  return monomial(n, c, std::vector<int>(n, 0), {});
}

PolyForm PolyForm::monomial(int n, const GaussRational& c, std::vector<int> powers, std::vector<int> dx) {
  if (static_cast<int>(powers.size()) != n) throw std::invalid_argument("PolyForm: wrong exponent count");
  for (int i : dx) {
    if (i < 1 || i > n) throw std::invalid_argument("PolyForm: dx index out of range");
  }
  PolyForm out(n);
  int sign = sort_indices(dx);
  if (sign == 0) return out;
  out.add(FormKey{std::move(powers), std::move(dx)}, sign == 1 ? c : -c);
  return out;
}

PolyForm PolyForm::x(int n, int i) {
  std::vector<int> p(n, 0);
  p.at(i - 1) = 1;
  return monomial(n, 1, p, {});
}

PolyForm PolyForm::dx(int n, int i) { return monomial(n, 1, std::vector<int>(n, 0), {i}); }

void PolyForm::add(const FormKey& key, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::set<int> PolyForm::degrees() const {
  std::set<int> out;
  for (const auto& [key, c] : terms_) out.insert(static_cast<int>(key.dx.size()));
  return out;
}

int PolyForm::degree() const {
  auto d = degrees();
  if (d.size() != 1) throw std::domain_error("PolyForm::degree: form is not homogeneous");
  return *d.begin();
}

int PolyForm::polynomial_degree() const {
  int out = 0;
  for (const auto& [key, c] : terms_) {
    out = std::max(out, std::accumulate(key.powers.begin(), key.powers.end(), 0));
  }
  return out;
}

PolyForm PolyForm::part(int k) const {
  PolyForm out(n_);
  for (const auto& [key, c] : terms_) {
    if (static_cast<int>(key.dx.size()) == k) out.add(key, c);
  }
  return out;
}

PolyForm PolyForm::d() const {
  PolyForm out(n_);
  for (const auto& [key, c] : terms_) {
    for (int i = 1; i <= n_; ++i) {
      int e = key.powers[i - 1];
      if (e == 0 || std::find(key.dx.begin(), key.dx.end(), i) != key.dx.end()) continue;
      std::vector<int> powers = key.powers;
      powers[i - 1] -= 1;
      std::vector<int> dx{i};
      dx.insert(dx.end(), key.dx.begin(), key.dx.end());
      out += monomial(n_, c * GaussRational(e), powers, dx);
    }
  }
  return out;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("PolyForm: dimension mismatch");
  for (const auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("PolyForm: dimension mismatch");
  for (const auto& [key, c] : o.terms_) add(key, -c);
  return *this;
}

PolyForm operator*(const GaussRational& c, const PolyForm& a) {
  PolyForm out(a.n_);
  for (const auto& [key, v] : a.terms_) out.add(key, c * v);
  return out;
}

PolyForm operator*(const PolyForm& a, const PolyForm& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("PolyForm: dimension mismatch");
  PolyForm out(a.n_);
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      std::vector<int> powers = ka.powers;
      for (std::size_t i = 0; i < powers.size(); ++i) powers[i] += kb.powers[i];
      std::vector<int> dx = ka.dx;
      dx.insert(dx.end(), kb.dx.begin(), kb.dx.end());
      out += PolyForm::monomial(a.n_, ca * cb, powers, dx);
    }
  }
  return out;
}

std::string PolyForm::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string mono;
    auto append = [&mono](const std::string& s, const char* sep) {
      if (!mono.empty()) mono += sep;
      mono += s;
    };
    for (std::size_t i = 0; i < key.powers.size(); ++i) {
      int e = key.powers[i];
      if (e == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      append(e == 1 ? v : v + "^" + std::to_string(e), "*");
    }
    std::string wedge;
    for (int i : key.dx) wedge += (wedge.empty() ? "" : "^") + std::string("dx") + std::to_string(i);
    if (!wedge.empty()) append(wedge, "*");
    std::string piece;
    if (mono.empty()) piece = to_string(c);
    else if (c == GaussRational(1)) piece = mono;
    else if (c == GaussRational(-1)) piece = "-" + mono;
    else piece = to_string(c) + "*" + mono;
    if (out.empty()) out = piece;
    else if (piece[0] == '-') out += " - " + piece.substr(1);
    else out += " + " + piece;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PolyForm& f) { return os << f.str(); }

std::optional<std::vector<GaussRational>> solve_linear(std::vector<std::vector<GaussRational>> a,
                                                       std::vector<GaussRational> b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    GaussRational inv = a[row][col].inverse();
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      GaussRational f = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
      b[r] -= f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!b[r].is_zero()) return std::nullopt;
  }
  std::vector<GaussRational> x(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
  return x;
}

std::optional<PolyForm> find_primitive(const PolyForm& omega) {
  int n = omega.dimension();
  if (omega.is_zero()) return PolyForm(n);
  auto degs = omega.degrees();
  int k = *degs.rbegin();
  if (degs.size() != 1 || k == 0) return std::nullopt;
  std::vector<std::vector<int>> powers;
  std::vector<int> cur;
  exponent_vectors(n, omega.polynomial_degree() + 1, cur, powers);
  std::vector<std::vector<int>> subsets;
  index_subsets(n, k - 1, 1, cur, subsets);

  std::vector<PolyForm> basis;
  std::vector<PolyForm> images;
  for (const auto& p : powers) {
    for (const auto& s : subsets) {
      PolyForm b = PolyForm::monomial(n, 1, p, s);
      PolyForm db = b.d();
      if (db.is_zero()) continue;
      basis.push_back(b);
      images.push_back(db);
    }
  }
  std::map<FormKey, std::size_t> row_of;
  for (const auto& [key, c] : omega.terms()) row_of.try_emplace(key, row_of.size());
  for (const auto& img : images) {
    for (const auto& [key, c] : img.terms()) row_of.try_emplace(key, row_of.size());
  }
  std::vector<std::vector<GaussRational>> a(row_of.size(), std::vector<GaussRational>(images.size()));
  std::vector<GaussRational> rhs(row_of.size());
  for (std::size_t j = 0; j < images.size(); ++j) {
    for (const auto& [key, c] : images[j].terms()) a[row_of[key]][j] = c;
  }
  for (const auto& [key, c] : omega.terms()) rhs[row_of[key]] = c;
  auto x = solve_linear(std::move(a), std::move(rhs));
  if (!x) return std::nullopt;
  PolyForm beta(n);
  for (std::size_t j = 0; j < basis.size(); ++j) beta += (*x)[j] * basis[j];
  return beta;
}

bool is_exact(const PolyForm& omega) { return find_primitive(omega).has_value(); }

bool cohomologous(const PolyForm& a, const PolyForm& b) {
  PolyForm diff = a - b;
  for (int k : diff.degrees()) {
    if (!is_exact(diff.part(k))) return false;
  }
  return true;
}

}  // namespace supersdet
