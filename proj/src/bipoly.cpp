#include "descartes/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descartes {

BiPoly::BiPoly(std::vector<Poly> ascending_in_main) : coeffs_(std::move(ascending_in_main)) { trim(); }

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly BiPoly::from_terms(std::span<const Term> terms) {
  int top = -1;
  for (const auto& t : terms) top = std::max(top, t.main_power);
  std::vector<Poly> c(static_cast<std::size_t>(top + 1));
  for (const auto& t : terms) c[static_cast<std::size_t>(t.main_power)] += Poly::monomial(t.coeff, t.secondary_power);
  return BiPoly(std::move(c));
}

BiPoly BiPoly::from_terms(std::initializer_list<Term> terms) {
  return from_terms(std::span<const Term>(terms.begin(), terms.size()));
}

BiPoly BiPoly::in_main(const Poly& p) {
  std::vector<Poly> c;
  for (const auto& a : p.coeffs()) c.push_back(Poly::constant(a));
  return BiPoly(std::move(c));
}

BiPoly BiPoly::in_secondary(const Poly& q) { return BiPoly(std::vector<Poly>{q}); }

int BiPoly::secondary_degree() const {
  int d = -1;
  for (const auto& c : coeffs_) d = std::max(d, c.degree());
  return d;
}

Poly BiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly BiPoly::at_secondary(const Rational& w) const {
  std::vector<Rational> c;
  c.reserve(coeffs_.size());
  for (const auto& p : coeffs_) c.push_back(p(w));
  return Poly(std::move(c));
}

Poly BiPoly::at_main(const Rational& t) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Rational BiPoly::operator()(const Rational& t, const Rational& w) const { return at_secondary(w)(t); }

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Poly> c(static_cast<std::size_t>(a.degree() + b.degree() + 1));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  return BiPoly(std::move(c));
}

BiPoly operator*(const BiPoly& a, const Rational& k) {
  std::vector<Poly> c = a.coeffs();
  for (auto& p : c) p *= k;
  return BiPoly(std::move(c));
}

BiPoly derivative_main(const BiPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Poly> c;
  for (int i = 1; i <= f.degree(); ++i) c.push_back(f.coeff(i) * Rational(i));
  return BiPoly(std::move(c));
}

BiPoly derivative_secondary(const BiPoly& f) {
  std::vector<Poly> c;
  for (const auto& p : f.coeffs()) c.push_back(derivative(p));
  return BiPoly(std::move(c));
}

BiPoly swap_variables(const BiPoly& f) {
  std::vector<BiPoly::Term> terms;
  for (int i = 0; i <= f.degree(); ++i) {
    const Poly& c = f.coeffs()[static_cast<std::size_t>(i)];
    for (int j = 0; j <= c.degree(); ++j)
      if (sgn(c.coeff(j)) != 0) terms.push_back({c.coeff(j), j, i});
  }
  return BiPoly::from_terms(terms);
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("bareiss_determinant: matrix not square");
  bool negate = false;
  Poly prev = Poly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_div(num, prev);
      }
      m[i][k] = Poly{};
    }
    prev = m[k][k];
  }
  Poly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

Poly resultant(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int m = f.degree();
  const int n = g.degree();
  if (m == 0 && n == 0) return Poly::constant(1);
  if (m == 0) return pow(f.coeff(0), static_cast<unsigned>(n));
  if (n == 0) return pow(g.coeff(0), static_cast<unsigned>(m));
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size));
  // Rows 0..n-1 carry f shifted, rows n..n+m-1 carry g; columns run from
  // the highest power of the main variable down to the constant.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = f.coeff(i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = g.coeff(i);
  return bareiss_determinant(std::move(s));
}

BiPoly interpolate_bivariate(const std::function<Rational(const Rational&, const Rational&)>& f,
                             int main_degree, int secondary_degree) {
  std::vector<Rational> t_nodes;
  std::vector<Rational> w_nodes;
  for (int i = 0; i <= main_degree; ++i) t_nodes.emplace_back(i);
  for (int j = 0; j <= secondary_degree; ++j) w_nodes.emplace_back(j);
  // For each w node, interpolate in t; then interpolate each t-coefficient in w.
  std::vector<Poly> slices;
  for (const auto& w : w_nodes) {
    std::vector<Rational> ys;
    for (const auto& t : t_nodes) ys.push_back(f(t, w));
    slices.push_back(interpolate(t_nodes, ys));
  }
  std::vector<Poly> coeffs;
  for (int i = 0; i <= main_degree; ++i) {
    std::vector<Rational> ys;
    for (const auto& s : slices) ys.push_back(s.coeff(i));
    coeffs.push_back(interpolate(w_nodes, ys));
  }
  return BiPoly(std::move(coeffs));
}

std::string to_string(const BiPoly& f, const std::string& main_var, const std::string& secondary_var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const Poly c = f.coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c, secondary_var) << ")";
    if (i > 0) os << "*" << main_var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace descartes
