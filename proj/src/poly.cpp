#include "descartes/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace descartes {

Poly::Poly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly::Poly(std::initializer_list<Rational> ascending) : coeffs_(ascending) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1, 1); }

Poly Poly::from_leading(std::span<const Rational> leading_first) {
  return Poly(std::vector<Rational>(leading_first.rbegin(), leading_first.rend()));
}

Poly Poly::from_leading(std::initializer_list<Rational> leading_first) {
  return from_leading(std::span<const Rational>(leading_first.begin(), leading_first.size()));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::vector<Rational> Poly::leading_first() const { return {coeffs_.rbegin(), coeffs_.rend()}; }

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) { return *this = mul(*this, other); }

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly add(const Poly& p, const Poly& q) { return Poly(p) += q; }

Poly mul(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rational> r(a.size() + b.size() - 1);
  Rational t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      t = a[i] * b[j];
      r[i + j] += t;
    }
  }
  return Poly(std::move(r));
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly base = p;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Rational& lb = b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] / lb;
    if (sgn(q) == 0) continue;
    quo[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = monic(a);
  Poly y = monic(b);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return x;
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> d(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) d[static_cast<std::size_t>(i - 1)] = p.coeff(i) * i;
  return Poly(std::move(d));
}

Poly reflect(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(std::move(c));
}

Poly reciprocal(const Poly& p) {
  std::vector<Rational> c = p.coeffs();
  std::reverse(c.begin(), c.end());
  return Poly(std::move(c));
}

Poly compose(const Poly& p, const Poly& q) {
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Poly::constant(*it);
  return acc;
}

Poly scale_compose(const Poly& p, const Rational& eps) {
  if (sgn(eps) <= 0) throw std::invalid_argument("scale_compose needs eps > 0");
  std::vector<Rational> c = p.coeffs();
  Rational factor = 1;
  for (int i = p.degree(); i >= 0; --i) {
    c[static_cast<std::size_t>(i)] *= factor;
    factor *= eps;
  }
  return Poly(std::move(c));
}

std::vector<SquareFreeFactor> square_free_decompose(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;
  // Yun: b = p / g, c = p' / g, d = c - b'; then repeatedly split off gcd(b, d).
  Poly f = monic(p);
  Poly df = derivative(f);
  Poly g = gcd(f, df);
  Poly b = exact_div(f, g);
  Poly c = exact_div(df, g);
  Poly d = c - derivative(b);
  int m = 1;
  while (b.degree() > 0) {
    Poly a = gcd(b, d);
    if (a.degree() > 0) out.push_back({monic(a), m});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
    ++m;
  }
  return out;
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("square-free part of the zero polynomial");
  return monic(exact_div(p, gcd(p, derivative(p))));
}

bool is_square_free(const Poly& p) { return !p.is_zero() && gcd(p, derivative(p)).degree() == 0; }

Poly from_roots(std::span<const RealRoot> real_roots, std::span<const ComplexPair> complex_pairs,
                const Rational& lead) {
  if (sgn(lead) == 0) throw std::invalid_argument("from_roots: zero leading coefficient");
  Poly result = Poly::constant(lead);
  for (const auto& r : real_roots) {
    if (r.multiplicity < 1) throw std::invalid_argument("from_roots: multiplicity must be positive");
    result = result * pow(Poly{-r.value, 1}, static_cast<unsigned>(r.multiplicity));
  }
  for (const auto& pair : complex_pairs) {
    if (sgn(pair.imag_sq) <= 0)
      throw std::invalid_argument("from_roots: complex pair needs imag_sq > 0, got " + to_text(pair.imag_sq));
    result = result * Poly{pair.re * pair.re + pair.imag_sq, -2 * pair.re, 1};
  }
  return result;
}

std::string to_string(const Poly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (sgn(c) == 0) continue;
    Rational mag = abs_value(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0) {
      os << to_text(mag);
    } else {
      if (!unit) os << to_text(mag) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<std::string> to_texts(const Poly& p) {
  std::vector<std::string> out;
  for (int i = p.degree(); i >= 0; --i) out.push_back(to_text(p.coeff(i)));
  return out;
}

Poly from_texts(std::span<const std::string> leading_first) {
  std::vector<Rational> c;
  c.reserve(leading_first.size());
  for (const auto& s : leading_first) c.push_back(parse_rational(s));
  return Poly::from_leading(c);
}

Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Poly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis = Poly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw std::invalid_argument("interpolate: repeated node");
      basis = basis * Poly{-xs[j], 1};
      denom *= xs[i] - xs[j];
    }
    result += basis * Rational(ys[i] / denom);
  }
  return result;
}

}  // namespace descartes
