#include "descartes/paperchecks.hpp"
#include "descartes/rootcount.hpp"
#include "descartes/sampling.hpp"
#include "descartes/signs.hpp"

#include <algorithm>
#include <numeric>

namespace descartes {

namespace {

constexpr std::size_t kMaxFailures = 8;

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  bool check(bool ok, const std::string& label, const std::string& expected, const std::string& computed,
             const std::string& tolerance = "exact") {
    ++r_.assertions;
    if (!ok) {
      r_.pass = false;
      if (r_.failures.size() < kMaxFailures) r_.failures.push_back({label, expected, computed, tolerance});
    }
    return ok;
  }
  bool equal(const std::string& label, const Rational& expected, const Rational& computed) {
    return check(expected == computed, label, to_text(expected), to_text(computed));
  }
  bool equal(const std::string& label, const Poly& expected, const Poly& computed) {
    return check(expected == computed, label, to_string(expected), to_string(computed));
  }
  bool equal(const std::string& label, const BiPoly& expected, const BiPoly& computed) {
    return check(expected == computed, label, to_string(expected), to_string(computed));
  }
  bool positive(const std::string& label, const Rational& v) { return check(sgn(v) > 0, label, "> 0", to_text(v)); }
  bool negative(const std::string& label, const Rational& v) { return check(sgn(v) < 0, label, "< 0", to_text(v)); }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }
  CheckResult finish() { return std::move(r_); }

 private:
  CheckResult r_;
};

std::string at(std::initializer_list<std::pair<const char*, Rational>> values) {
  std::string out = "at";
  for (const auto& [name, v] : values) out += std::string(" ") + name + "=" + to_text(v);
  return out;
}

// x + c
Poly xp(const Rational& c) { return Poly{c, 1}; }
// a*x + b
Poly lin(const Rational& a, const Rational& b) { return Poly{b, a}; }
Poly lead(std::initializer_list<Rational> c) { return Poly::from_leading(c); }

RationalSampler sampler(std::uint64_t seed, const char* name) { return RationalSampler(mix_seed(seed, name_hash(name))); }

// ---- exact linear algebra ----

using Matrix = std::vector<std::vector<Rational>>;

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

int rank(Matrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// ---- structural Jacobians ----

// base^mult, with d(base)/d(param_k) = partial[k] (empty: no dependence).
struct Factor {
  Poly base;
  unsigned mult;
  std::vector<Poly> partial;
};

std::vector<Poly> param_partials(const std::vector<Factor>& fs, std::size_t params) {
  std::vector<Poly> out(params);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].partial.empty()) continue;
    Poly rest = Poly::constant(fs[i].mult) * pow(fs[i].base, fs[i].mult - 1);
    for (std::size_t j = 0; j < fs.size(); ++j)
      if (j != i) rest *= pow(fs[j].base, fs[j].mult);
    for (std::size_t k = 0; k < params; ++k)
      if (!fs[i].partial[k].is_zero()) out[k] += rest * fs[i].partial[k];
  }
  return out;
}

// Rows are coefficient indices, columns are the polynomials.
Matrix coefficient_matrix(const std::vector<Poly>& columns, const std::vector<int>& rows) {
  Matrix m(rows.size(), std::vector<Rational>(columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < columns.size(); ++c) m[r][c] = columns[c].coeff(rows[r]);
  return m;
}

std::vector<Factor> sextic_family(const Rational& u, const Rational& w, const Rational& xi) {
  const Poly zero, one = Poly::constant(1), minus = Poly::constant(-1);
  return {{xp(u), 6, {one, zero, zero}}, {xp(-w), 2, {zero, minus, zero}}, {xp(-xi), 1, {zero, zero, minus}}};
}

// Compares computed values to c * printed for a single global c = +-1 fixed
// at the first point with a nonzero printed value.
class SignedMatch {
 public:
  SignedMatch(Recorder& rec, std::string name) : rec_(rec), name_(std::move(name)) {}
  void add(const std::string& where, const Rational& printed, const Rational& computed) {
    if (sign_ == 0 && sgn(printed) != 0) sign_ = (computed == -printed && computed != printed) ? -1 : 1;
    const Rational expected = sign_ == 0 ? printed : Rational(sign_ * printed);
    rec_.equal(name_ + " " + where, expected, computed);
  }
  std::string convention() const {
    return name_ + (sign_ < 0 ? ": matches the printed form times -1" : ": matches the printed form");
  }

 private:
  Recorder& rec_;
  std::string name_;
  int sign_ = 0;
};

// ---- exact sign of a polynomial at an isolated algebraic number ----

// `square_free` has a unique root in the open interval `iv` (sign change at
// the ends). Returns the sign of f at that root.
int sign_at_root(const Poly& square_free, IsolatingInterval iv, const Poly& f) {
  if (f.is_zero()) return 0;
  if (iv.lo == iv.hi) return f.sign_at(iv.lo);
  const Poly g = gcd(square_free, f);
  if (g.degree() >= 1 && sturm_count(g, iv.lo, iv.hi) == 1) return 0;
  const Poly fs = square_free_part(f);
  for (;;) {
    const bool ends_clear = fs.sign_at(iv.lo) != 0 && fs.sign_at(iv.hi) != 0;
    if (ends_clear && sturm_count(fs, iv.lo, iv.hi) == 0) return f.sign_at(iv.lo);
    iv = bisect_once(square_free, iv);
  }
}

}  // namespace

// ---------------------------------------------------------------------------

CheckResult check_identity_lemma10(int points, std::uint64_t seed) {
  if (points < 1) throw std::invalid_argument("points must be at least 1");
  Recorder rec("check_identity_lemma10");
  auto rng = sampler(seed, "check_identity_lemma10");
  for (int p = 0; p < points; ++p) {
    std::vector<Rational> u(6);
    for (auto& ui : u) ui = p == 0 ? Rational(1) : rng.positive(4, 32);
    const Rational sum = std::accumulate(u.begin(), u.end(), Rational(0));
    const Rational xi = (sum + 1) / 3;
    Poly poly = pow(xp(-xi), 3);
    Rational prod = 1, inv = 0, ratios = 0;
    for (int i = 0; i < 6; ++i) {
      poly *= xp(u[i]);
      prod *= u[i];
      inv += 1 / u[i];
      for (int j = 0; j < 6; ++j)
        if (i != j) ratios += u[i] / u[j];
    }
    const Rational x_term = prod * ratios, y_term = prod * inv;
    const Rational big_xi = -3 * prod + x_term + y_term;
    const Rational a1 = poly.coeff(1);
    std::string where = "point " + std::to_string(p) + " u=(";
    for (int i = 0; i < 6; ++i) where += (i ? "," : "") + to_text(u[i]);
    where += ")";
    rec.equal("a8 " + where, -1, poly.coeff(8));
    rec.equal("27 a1 " + where, -big_xi * (sum + 1) * (sum + 1), 27 * a1);
    rec.positive("Xi " + where, big_xi);
    rec.negative("a1 " + where, a1);
  }
  rec.note(std::to_string(points) + " points, u_i in (0,4], first point all u_i = 1");
  return rec.finish();
}

Lemma12Determinants lemma12_determinants(const Rational& u, const Rational& w, const Rational& xi) {
  if (sgn(u) <= 0 || sgn(w) <= 0 || sgn(xi) <= 0) throw std::domain_error("family needs u, w, xi > 0");
  const auto cols = param_partials(sextic_family(u, w, xi), 3);
  return {determinant(coefficient_matrix(cols, {8, 7, 1})), determinant(coefficient_matrix(cols, {8, 7, 4})),
          determinant(coefficient_matrix(cols, {8, 7, 5}))};
}

CheckResult check_jacobians(int points, std::uint64_t seed) {
  if (points < 1) throw std::invalid_argument("points must be at least 1");
  Recorder rec("check_jacobians");
  auto rng = sampler(seed, "check_jacobians");
  const Poly zero, one = Poly::constant(1), minus = Poly::constant(-1), minus_x = Poly{0, -1};

  // Parameters (xi, eta, w, u); S = x^2 + A x + B and the cubic Delta fixed.
  SignedMatch d1(rec, "dagger det J1"), d2(rec, "dagger det J2"), s1(rec, "star det J1"), s2(rec, "star det J2");
  for (int p = 0; p < points; ++p) {
    const Rational u = rng.positive(4), v = rng.positive(4), w = rng.positive(4), a = rng.positive(4),
                   b = rng.positive(4), xi = rng.positive(4);
    const Rational eta = xi * xi / 4 + rng.positive(4);
    const std::string where = at({{"u", u}, {"v", v}, {"w", w}, {"A", a}, {"B", b}, {"xi", xi}, {"eta", eta}});
    const Poly s = lead({1, a, b});
    const Factor quad{lead({1, -xi, eta}), 1, {minus_x, one, zero, zero}};
    const Factor lin_w{xp(-w), 1, {zero, zero, minus, zero}};

    const Rational common = (-eta - w * w + w * xi) * (xi * u + eta + u * u);
    const Rational pi = -2 * v * (w + u) * common;
    const Rational m = -4 * u * u * (w + u) * common;

    const auto dagger = param_partials(
        {{xp(u), 2, {zero, zero, zero, one}}, {xp(v), 2, {}}, {s, 1, {}}, quad, lin_w}, 4);
    const Rational f1 = a * a * u * u * v + 2 * a * a * u * v * v + 2 * a * u * u * v * v + a * u * v * v * v +
                        2 * a * b * u * u + 5 * a * b * u * v + 2 * a * b * v * v + 3 * b * u * u * v +
                        2 * b * u * v * v + b * v * v * v + 2 * b * b * u + b * b * v;
    const Rational f2 = a * a * u * v + a * u * u * v + 2 * a * u * v * v + 2 * a * b * u + a * b * v +
                        2 * b * u * u + 4 * b * u * v + 2 * b * v * v;
    d1.add(where, f1 * pi, determinant(coefficient_matrix(dagger, {8, 7, 1, 4})));
    d2.add(where, f2 * pi, determinant(coefficient_matrix(dagger, {8, 7, 1, 5})));

    const auto star = param_partials({{xp(u), 4, {zero, zero, zero, one}}, {s, 1, {}}, quad, lin_w}, 4);
    const Rational g1 = 3 * a * a * u * u + 3 * a * u * u * u + 9 * a * b * u + 6 * b * u * u + 3 * b * b;
    const Rational g2 = a * a * u + 3 * a * u * u + 3 * a * b + 8 * b * u;
    s1.add(where, g1 * m, determinant(coefficient_matrix(star, {8, 7, 1, 4})));
    s2.add(where, g2 * m, determinant(coefficient_matrix(star, {8, 7, 1, 5})));
  }
  for (const auto* sm : {&d1, &d2, &s1, &s2}) rec.note(sm->convention());

  // (x+u)^6 (x-w)^2 (x-xi), columns (u, w, xi).
  SignedMatch j1(rec, "sextic det J1*"), j4(rec, "sextic det J4*"), j5(rec, "sextic det J5*");
  for (int p = 0; p < points; ++p) {
    const bool example = p == 0;
    const Rational u = example ? Rational(1) : rng.positive(4);
    const Rational w = example ? Rational(2) : rng.positive(4);
    const Rational xi = example ? Rational(3) : rng.positive(4);
    const std::string where = at({{"u", u}, {"w", w}, {"xi", xi}});
    const auto d = lemma12_determinants(u, w, xi);
    const Rational tail = (u + w) * (xi - w) * (xi + u);
    j1.add(where, -12 * u * u * u * u * (u - 5 * w) * tail, d.j1);
    j4.add(where, -60 * u * (2 * u - w) * tail, d.j4);
    // The printed J5* carries one more factor u than a degree-4 determinant can.
    j5.add(where, -12 * (5 * u - w) * tail, d.j5);
    const auto scaled = lemma12_determinants(2 * u, 2 * w, 2 * xi);
    rec.equal("J1* homogeneous of degree 8 " + where, 256 * d.j1, scaled.j1);
    rec.equal("J4* homogeneous of degree 5 " + where, 32 * d.j4, scaled.j4);
    rec.equal("J5* homogeneous of degree 4 " + where, 16 * d.j5, scaled.j5);
  }
  for (const auto* sm : {&j1, &j4, &j5}) rec.note(sm->convention());
  rec.note("J5* printed with an extra factor u (degree 5); compared with that factor removed");

  // Degenerate lines of the sextic family.
  for (int p = 0; p < points; ++p) {
    const Rational w = rng.positive(4), xi = rng.positive(4), u = rng.positive(4);
    const Poly a = pow(xp(5 * w), 6) * pow(xp(-w), 2) * xp(-xi);
    rec.equal("u=5w a3 " + at({{"w", w}, {"xi", xi}}), -2500 * power(w, 5) * (5 * w + xi), a.coeff(3));
    const Poly b = pow(xp(w / 2), 6) * pow(xp(-w), 2) * xp(-xi);
    rec.equal("u=w/2 a1 " + at({{"w", w}, {"xi", xi}}), -power(w, 7) * (10 * xi - w) / 64, b.coeff(1));
    rec.equal("u=w/2 a8 " + at({{"w", w}, {"xi", xi}}), w - xi, b.coeff(8));
    const Poly c = pow(xp(u), 6) * pow(xp(-5 * u), 2) * xp(-xi);
    rec.equal("w=5u a6 " + at({{"u", u}, {"xi", xi}}), 20 * u * u * (u + xi), c.coeff(6));
  }
  rec.note(std::to_string(points) + " points per family; partials from the factored form");
  return rec.finish();
}

// ---------------------------------------------------------------------------

namespace {

Poly case_a(const Rational& s, const Rational& t, const Rational& w) {
  return pow(xp(1), 5) * lin(s, 1) * pow(lin(t, -1), 2) * lin(w, -1);
}
Poly case_b(const Rational& big_t, const Rational& big_s, const Rational& w) {
  return pow(xp(1), 4) * pow(lead({big_t, big_s, -1}), 2) * lin(w, -1);
}
// dP/dT for case_b.
Poly case_b_dt(const Rational& big_t, const Rational& big_s, const Rational& w) {
  return pow(xp(1), 4) * Rational(2) * lead({big_t, big_s, -1}) * Poly::monomial(1, 2) * lin(w, -1);
}
Poly case_c(const Rational& s, const Rational& t, const Rational& w) {
  return pow(xp(1), 3) * pow(lin(s, 1), 3) * pow(lin(t, -1), 2) * lin(w, -1);
}

}  // namespace

CheckResult check_case_formulas(int points, std::uint64_t seed) {
  if (points < 1) throw std::invalid_argument("points must be at least 1");
  Recorder rec("check_case_formulas");
  auto rng = sampler(seed, "check_case_formulas");

  for (int p = 0; p < points; ++p) {
    // Negative roots -1 (x5) and -1/s.
    const Rational t = rng.positive(10), w = rng.positive(10), s_free = rng.positive(10);
    const std::string where = at({{"t", t}, {"w", w}});
    rec.equal("(5,1) a1 " + where, w + 2 * t - s_free - 5, case_a(s_free, t, w).coeff(1));
    const Rational s = w + 2 * t - 5;
    const Poly pa = case_a(s, t, w);
    const Rational a32 = -2 * t + 5, a31 = -(2 * t - 5) * (2 * t - 5), a30 = -2 * t * t * t + 20 * t * t - 50 * t + 40;
    const Rational a42 = t * t - 10 * t + 10, a41 = 2 * t * t * t - 25 * t * t + 70 * t - 50,
                   a40 = -10 * t * t * t + 55 * t * t - 100 * t + 45;
    rec.equal("(5,1) a1 at s0 " + where, 0, pa.coeff(1));
    rec.equal("(5,1) a3 " + where, a32 * w * w + a31 * w + a30, pa.coeff(3));
    rec.equal("(5,1) a4 " + where, a42 * w * w + a41 * w + a40, pa.coeff(4));
    rec.equal("(5,1) a32 w^2 + a31 w " + where, w * (-2 * t + 5) * s, a32 * w * w + a31 * w);
    rec.equal("(5,1) a41 " + where, (2 * t - 5) * a42, a41);
    rec.equal("(5,1) a4 = s w a42 + a40 " + where, s * w * a42 + a40, pa.coeff(4));
    const Rational a8t = pa.coeff(8) / t;
    rec.equal("(5,1) a8/t expanded " + where,
              10 * t * t * w + 5 * t * w * w - 2 * t * t - 29 * t * w - 2 * w * w + 5 * t + 10 * w, a8t);
    rec.equal("(5,1) a8/t factored " + where, (5 * t - 2) * w * s + t * (5 - 2 * t), a8t);
    const Rational a6s = 10 * t * t - 20 * t + 5, a6d = -5 * (t - 1) * (4 * t * t - 9 * t + 1);
    rec.equal("(5,1) a6 " + where, a6s * w * s + a6d, pa.coeff(6));
  }

  for (int p = 0; p < points; ++p) {
    // Double roots from T x^2 + S x - 1.
    const Rational big_t = rng.positive(10), w = rng.positive(10), s_free = rng.uniform(-8, 8);
    const std::string where = at({{"T", big_t}, {"w", w}});
    rec.equal("(4,2) a1 " + where, w + 2 * s_free - 4, case_b(big_t, s_free, w).coeff(1));
    const Rational s = (4 - w) / 2;
    const Poly pb = case_b(big_t, s, w);
    rec.equal("(4,2) a8/T " + where, (4 * w - 1) * big_t + 4 * w - w * w, pb.coeff(8) / big_t);
    const Rational a52 = w - 4, a51 = -4 * w * w + 10 * w - 16, a50 = Rational(3, 2) * w * w * w - 9 * w * w + 16 * w - 12;
    rec.equal("(4,2) a5 " + where, a52 * big_t * big_t + a51 * big_t + a50, pb.coeff(5));
    rec.equal("(4,2) a5 at T=0 " + where, a50, case_b(0, s, w).coeff(5));
    const Poly db = case_b_dt(big_t, s, w);
    rec.equal("(4,2) da5/dT " + where, (2 * w - 8) * big_t - 4 * w * w + 10 * w - 16, db.coeff(5));
    rec.equal("(4,2) da4/dT " + where, -w * w - 2 * big_t - 4, db.coeff(4));
    if (4 * w == 1) continue;
    const Rational t0 = (w * w - 4 * w) / (4 * w - 1);
    const Rational den = 2 * (4 * w - 1) * (4 * w - 1);
    const Rational c = 6 * power(w, 5) - 40 * power(w, 4) + 85 * power(w, 3) - 54 * w * w + 32 * w - 8;
    const Rational d = 8 * power(w, 5) - 32 * power(w, 4) + 54 * power(w, 3) - 85 * w * w + 40 * w - 6;
    const Poly p0 = case_b(t0, s, w);
    rec.equal("(4,2) a8 at T0 " + at({{"w", w}}), 0, p0.coeff(8));
    rec.equal("(4,2) a5 at T0 " + at({{"w", w}}), 3 * c / den, p0.coeff(5));
    rec.equal("(4,2) a4 at T0 " + at({{"w", w}}), 3 * d / den, p0.coeff(4));
    rec.equal("(4,2) da5/dT at T0 " + at({{"w", w}}),
              -2 * (7 * w * w * w - 14 * w * w + 21 * w - 8) / (4 * w - 1), case_b_dt(t0, s, w).coeff(5));
  }
  {
    const Rational big_t = rng.positive(10);
    rec.equal("(4,2) a8 at w=1/4 " + at({{"T", big_t}}), 15 * big_t / 16,
              case_b(big_t, (4 - Rational(1, 4)) / 2, Rational(1, 4)).coeff(8));
    rec.note("(4,2) at w = 1/4: a8 = 15T/16, positive for T > 0");
  }

  const BiPoly& h = h_star();
  for (int p = 0; p < points; ++p) {
    // Triple roots -1 and -1/s.
    const Rational t = rng.positive(10), w = rng.positive(10), s_free = rng.positive(10);
    const std::string where = at({{"t", t}, {"w", w}});
    rec.equal("(3,3) a1 " + where, w + 2 * t - 3 * s_free - 3, case_c(s_free, t, w).coeff(1));
    const Rational s0 = (w + 2 * t - 3) / 3;
    const Poly pc = case_c(s0, t, w);
    const Rational hv = h(t, w);
    rec.equal("(3,3) a1 at s0 " + where, 0, pc.coeff(1));
    rec.equal("(3,3) 27 a8 " + where, t * (w + 2 * t - 3) * (w + 2 * t - 3) * hv, 27 * pc.coeff(8));
    rec.equal("(3,3) 27 a5 = a5* " + where, a5_star()(t, w), 27 * pc.coeff(5));
    rec.equal("(3,3) 27 a4 = a4* " + where, a4_star()(t, w), 27 * pc.coeff(4));
    rec.equal("(3,3) H* in w " + where, (3 * t - 2) * w * w + (6 * t * t - 5 * t + 6) * w - 2 * t * (t - Rational(3, 2)),
              hv);
    rec.equal("(3,3) H* in t " + where, (6 * w - 2) * t * t + (3 * w * w - 5 * w + 3) * t - 2 * w * (w - 3), hv);
  }
  rec.note("printed a5*, a4* are 27 times the coefficients at s = s0");

  // Divided polynomials of (x+1)^l (x+v)^m (x+w)^n (x-t)^2 (x-h).
  struct Triple {
    unsigned l, m, n;
  };
  for (const Triple tr : {Triple{4, 1, 1}, Triple{3, 2, 1}, Triple{2, 2, 2}}) {
    const std::string name = "(" + std::to_string(tr.l) + "," + std::to_string(tr.m) + "," + std::to_string(tr.n) + ")";
    for (int p = 0; p < points; ++p) {
      const Rational v = rng.positive(8), w = rng.positive(8), t = p == 0 ? Rational(2) : rng.positive(8),
                     hh = rng.positive(8);
      const std::string where = at({{"v", v}, {"w", w}, {"t", t}});
      const Poly full = pow(xp(1), tr.l) * pow(xp(v), tr.m) * pow(xp(w), tr.n) * pow(xp(-t), 2) * xp(-hh);
      const Poly divided = exact_div(full, xp(1) * xp(v) * xp(w) * xp(-t) * xp(-hh));
      rec.equal(name + " divided form " + where,
                pow(xp(1), tr.l - 1) * pow(xp(v), tr.m - 1) * pow(xp(w), tr.n - 1) * xp(-t), divided);
      Rational a, b, c, d;
      if (tr.l == 4) {
        a = 3 - t, b = 3 - 3 * t, c = 1 - 3 * t, d = -t;
      } else if (tr.l == 3) {
        a = 2 + v - t, b = 1 + 2 * v - (2 + v) * t, c = v - (1 + 2 * v) * t, d = -v * t;
      } else {
        a = 1 + v + w - t, b = v + (1 + v) * w - (1 + v + w) * t, c = v * w - (v + (1 + v) * w) * t, d = -v * w * t;
      }
      rec.equal(name + " coefficients " + where, lead({1, a, b, c, d}), divided);
    }
  }
  {
    // (4,1,1): a = c = 0 needs t = 3 and t = 1/3; b = 0, d = ac gives t = 1 against t^2 - 3t + 1 = 0.
    const Poly t = Poly::x();
    const Poly a = lead({-1, 3}), b = lead({-3, 3}), c = lead({-3, 1}), d = lead({-1, 0});
    rec.equal("(4,1,1) root of a", 0, a(3));
    rec.equal("(4,1,1) root of c", 0, c(Rational(1, 3)));
    rec.equal("(4,1,1) root of b", 0, b(1));
    rec.equal("(4,1,1) d - ac", lead({-3, 9, -3}), d - a * c);
    rec.check(sgn(lead({1, -3, 1})(1)) != 0, "(4,1,1) t = 1 is not a root of t^2 - 3t + 1", "nonzero", "nonzero");
  }
  for (int p = 0; p < points; ++p) {
    const Rational v = rng.uniform(0, 8), w = rng.uniform(0, 8);
    const std::string where = at({{"v", v}, {"w", w}});
    // (3,2,1)
    {
      const Rational t = (1 + 2 * v) / (2 + v);
      const Rational a = 2 + v - t, b = 1 + 2 * v - (2 + v) * t, c = v - (1 + 2 * v) * t, d = -v * t;
      rec.equal("(3,2,1) b at t-bullet " + where, 0, b);
      const Rational closed = 3 * (v * v + v + 1) * (v * v + v + 1) / ((2 + v) * (2 + v));
      rec.equal("(3,2,1) d - ac at t-bullet " + where, closed, d - a * c);
      rec.positive("(3,2,1) d - ac positive " + where, closed);
      const Rational ta = 2 + v;
      rec.equal("(3,2,1) c on a = 0 " + where, -2 * (v + 1) * (v + 1), v - (1 + 2 * v) * ta);
    }
    // (2,2,2)
    {
      const Rational t = (v * w + v + w) / (1 + v + w);
      const Rational a = 1 + v + w - t, b = v + (1 + v) * w - (1 + v + w) * t, c = v * w - (v + (1 + v) * w) * t,
                     d = -v * w * t;
      rec.equal("(2,2,2) b at t-delta " + where, 0, b);
      const Rational closed =
          (w * w + w + 1) * (v * v + v + 1) * (v * v + v * w + w * w) / ((1 + v + w) * (1 + v + w));
      rec.equal("(2,2,2) d - ac at t-delta " + where, closed, d - a * c);
      if (sgn(v) > 0 || sgn(w) > 0) rec.positive("(2,2,2) d - ac positive " + where, closed);
      const Rational ta = 1 + v + w;
      rec.equal("(2,2,2) c on a = 0 " + where, -(v + 1) * (w + 1) * (v + w), v * w - (v + (1 + v) * w) * ta);
    }
  }
  rec.note("(2,2,2): on a = 0, c = -(v+1)(w+1)(v+w), so a = c = 0 also allows v = -w");
  rec.note(std::to_string(points) + " points per family");
  return rec.finish();
}

// ---------------------------------------------------------------------------

CheckResult check_resultants() {
  Recorder rec("check_resultants");
  const BiPoly& h = h_star();
  const BiPoly& a5 = a5_star();
  const BiPoly& a4 = a4_star();

  // Derive the printed bivariate forms from the (3,3) product.
  auto coeff_at_s0 = [](int k) {
    return [k](const Rational& t, const Rational& w) -> Rational { return 27 * case_c((w + 2 * t - 3) / 3, t, w).coeff(k); };
  };
  const BiPoly d5 = interpolate_bivariate(coeff_at_s0(5), 5, 4);
  const BiPoly d4 = interpolate_bivariate(coeff_at_s0(4), 4, 4);
  const BiPoly d8 = interpolate_bivariate(coeff_at_s0(8), 5, 4);
  rec.equal("a5* from the product", a5, d5);
  rec.equal("a4* from the product", a4, d4);
  const BiPoly lin_tw = BiPoly::from_terms({{1, 0, 1}, {2, 1, 0}, {-3, 0, 0}});
  rec.equal("27 a8 = t (w+2t-3)^2 H*", BiPoly::from_terms({{1, 1, 0}}) * lin_tw * lin_tw * h, d8);
  for (const auto& [t, w] : std::vector<std::pair<Rational, Rational>>{
           {Rational(7, 5), Rational(13, 3)}, {Rational(-9, 4), Rational(5, 7)}, {Rational(11, 2), Rational(-3, 8)}}) {
    const std::string where = at({{"t", t}, {"w", w}});
    rec.equal("interpolant a5* off grid " + where, coeff_at_s0(5)(t, w), d5(t, w));
    rec.equal("interpolant a4* off grid " + where, coeff_at_s0(4)(t, w), d4(t, w));
    rec.equal("interpolant 27 a8 off grid " + where, coeff_at_s0(8)(t, w), d8(t, w));
  }

  const Poly x = Poly::x();
  const Poly q = lead({1, -1, 1});
  auto compare = [&](const std::string& name, const Poly& expected, const Poly& computed) {
    if (computed == -expected && computed != expected) {
      rec.check(true, name, to_string(expected), to_string(computed));
      rec.note(name + ": equal up to the global sign -1");
    } else {
      rec.equal(name, expected, computed);
    }
  };

  // H* as a quadratic in w and in t.
  const BiPoly hw = swap_variables(h);
  const Poly b2 = lead({3, -2}), b1 = lead({6, -5, 6}), b0 = Rational(-2) * x * lead({1, Rational(-3, 2)});
  rec.equal("H* b2", b2, hw.coeff(2));
  rec.equal("H* b1", b1, hw.coeff(1));
  rec.equal("H* b0", b0, hw.coeff(0));
  compare("Delta_w", Rational(9) * lead({2, -3, 2}) * lead({2, 1, 2}), b1 * b1 - Rational(4) * b0 * b2);
  const Poly c2 = lead({6, -2}), c1 = lead({3, -5, 3}), c0 = Rational(-2) * x * lead({1, -3});
  rec.equal("H* c2", c2, h.coeff(2));
  rec.equal("H* c1", c1, h.coeff(1));
  rec.equal("H* c0", c0, h.coeff(0));
  compare("Delta_t", Rational(9) * lead({1, 5, 1}) * lead({1, -3, 1}), c1 * c1 - Rational(4) * c0 * c2);

  // The seven resultant factorizations.
  const BiPoly a5w = swap_variables(a5);
  const Poly rw1 = lead({32, 16, -80, 184, -142, -63});
  const Poly rw2 = lead({10, -80, 365, -928, 1564, -1788, 1345, -668, 208, -40, 4});
  compare("Rw = Res(a5*, da5*/dw, w)", Rational(2125764) * lead({2, -3}) * rw1 * rw2,
          resultant(a5w, derivative_main(a5w)));
  const Poly rsharp = lead({5, -16, 40, -23, 61, -16, -2});
  compare("Rb = Res(H*, a5*, t)", Rational(-52488) * x * lead({1, -3}) * rsharp * q * q, resultant(h, a5));
  const Poly rt1 = lead({5, 50, 100, -2513, 10781, -25932, 46604, -70411, 86678, -82706, 65264, -43104, 16896});
  const Poly rt2 = lead({8, 154, -68, -239, -352});
  compare("Rt = Res(a5*, da5*/dt, t)", Rational(2176782336) * lead({1, -3}) * rt1 * rt2,
          resultant(a5, derivative_main(a5)));
  const Poly db = lead({9, 48, 82, 56, 205}), ds = lead({3, 14, -63, 51, -82});
  compare("Res(a4*, da4*/dt, t)", Rational(170061120) * db * ds * q * q, resultant(a4, derivative_main(a4)));
  const Poly rdelta = lead({2, 16, -61, 23, -40, 16, -5});
  compare("Res(a4*, H*, t)", Rational(-26244) * rdelta * q * q, resultant(a4, h));

  // Slices and boundary values.
  rec.equal("a5* at w=0", Rational(-4) * x * lead({2, 6, -21, 36, -27}), a5.at_secondary(0));
  rec.equal("a5* at t=3/2", lead({-30, Rational(-45, 2), 0, Rational(-243, 4)}), a5.at_main(Rational(3, 2)));
  rec.equal("a5* at t=2", lead({-1, -43, -60, -22, -328}), a5.at_main(2));
  rec.equal("a5* at w=3", Rational(-4) * x * x * lead({2, 0, 15, 90}), a5.at_secondary(3));
  rec.equal("a5* leading coefficient in t", Poly::constant(-8), a5.coeff(a5.degree()));
  rec.equal("a5* constant term in t", Rational(3) * x * lead({1, -3}) * lead({1, 2, -6}), a5.coeff(0));
  rec.equal("a4* at w=0", lead({-20, 66, -135, 108, -81}), a4.at_secondary(0));
  rec.equal("a4* at t=0", lead({1, 15, -54, 54, -81}), a4.at_main(0));
  rec.equal("a4* leading coefficient in t", Poly::constant(-20), a4.coeff(a4.degree()));
  rec.equal("H* at w=3", x * lead({16, 15}), h.at_secondary(3));
  rec.equal("H* at t=2/3", lead({Rational(16, 3), Rational(10, 9)}), h.at_main(Rational(2, 3)));
  rec.equal("H* at w=1/3", lead({Rational(5, 3), Rational(16, 9)}), h.at_secondary(Rational(1, 3)));
  rec.equal("H* at (0,3)", 0, h(0, 3));
  rec.equal("a5* at (0,3)", 0, a5(0, 3));
  rec.note("a5*, a4*, 27 a8 recovered by interpolation on integer grids (t-degree <= 5, w-degree <= 4)");
  return rec.finish();
}

// ---------------------------------------------------------------------------

namespace {

bool is_exact_text(const std::string& s) { return s.find('.') == std::string::npos; }

// Midpoints of the real roots of p refined to within eps, in increasing order.
std::vector<Rational> refined_roots(const Poly& p, const Rational& eps) {
  const Poly sf = square_free_part(p);
  std::vector<Rational> out;
  for (const auto& iv : isolate_real_roots(sf)) out.push_back(iv.lo == iv.hi ? iv.lo : refine_root(sf, iv, eps));
  return out;
}

void check_ordering(Recorder& rec, const std::string& name, std::vector<std::pair<std::string, Rational>> chain,
                    const Rational& eps) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& [ln, lv] = chain[i];
    const auto& [rn, rv] = chain[i + 1];
    rec.check(lv + eps < rv - eps, name + ": " + ln + " < " + rn, ln + " < " + rn,
              to_decimal(lv, 6) + " vs " + to_decimal(rv, 6), "separated by " + to_text(2 * eps));
  }
}

}  // namespace

namespace {

int record_digit_claims(Recorder& rec, const std::vector<DigitClaim>& claims) {
  int digit_assertions = 0;
  for (const auto& claim : claims) {
    const Poly sf = square_free_part(claim.poly);
    const auto ivs = isolate_real_roots(sf);
    rec.check(ivs.size() == claim.roots.size(), claim.name + " real root count", std::to_string(claim.roots.size()),
              std::to_string(ivs.size()));
    if (ivs.size() != claim.roots.size()) continue;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      const std::string& text = claim.roots[i];
      const Rational printed = parse_rational(text);
      const std::string label = claim.name + " root " + std::to_string(i + 1) + " (" + claim.context + ")";
      ++digit_assertions;
      if (is_exact_text(text)) {
        const bool inside = ivs[i].lo == ivs[i].hi ? printed == ivs[i].lo : (ivs[i].lo < printed && printed < ivs[i].hi);
        rec.check(inside && sgn(claim.poly(printed)) == 0, label, text, inside ? "not a root" : "other root");
        continue;
      }
      const Rational tol = digit_tolerance(text);
      const Rational eps = tol / 100;
      const Rational mid = ivs[i].lo == ivs[i].hi ? ivs[i].lo : refine_root(sf, ivs[i], eps);
      rec.check(abs_value(mid - printed) + eps <= tol, label, text,
                to_decimal(mid, static_cast<int>(text.size() - text.find('.') + 1)), to_text(tol));
    }
  }
  return digit_assertions;
}

}  // namespace

CheckResult check_digit_claims(const std::vector<DigitClaim>& claims) {
  Recorder rec("check_digit_claims");
  record_digit_claims(rec, claims);
  return rec.finish();
}

CheckResult check_root_digits() {
  Recorder rec("check_root_digits");
  const int digit_assertions = record_digit_claims(rec, digit_claims());
  rec.note(std::to_string(digit_assertions) + " printed root values; tolerance 5*10^-k for k printed decimals");

  const Rational eps = make_rational(1, 1000000);
  const auto t_a5 = refined_roots(a5_star().at_secondary(4), eps);
  const auto t_h = refined_roots(h_star().at_secondary(4), eps);
  const auto t_a4 = refined_roots(a4_star().at_secondary(4), eps);
  if (t_a5.size() == 3 && t_h.size() == 2 && t_a4.size() == 2) {
    check_ordering(rec, "w=4", {{"t1", t_a5[0]}, {"t-", t_h[0]}, {"t2", t_a5[1]}, {"t+", t_h[1]}, {"t3", t_a5[2]}},
                   eps);
    check_ordering(rec, "w=4", {{"h-", t_h[0]}, {"A-", t_a4[0]}, {"h+", t_h[1]}, {"A+", t_a4[1]}}, eps);
    rec.check(sgn(t_h[1]) > 0 && sgn(t_a4[0]) < 0, "w=4: A- < 0 <= h+", "A- < 0 < h+",
              to_decimal(t_a4[0], 6) + ", " + to_decimal(t_h[1], 6));
  } else {
    rec.check(false, "w=4 root counts", "3, 2, 2",
              std::to_string(t_a5.size()) + ", " + std::to_string(t_h.size()) + ", " + std::to_string(t_a4.size()));
  }

  // Largest real roots of Rw and Rb, exactly.
  const auto largest_is = [&](const std::string& name, const Poly& p, const Rational& r) {
    const Poly sf = square_free_part(p);
    const bool root = sgn(p(r)) == 0;
    const Rational bound = cauchy_bound(sf);
    const int above = root ? sturm_count(exact_div(sf, xp(-r)), r, bound) : 0;
    rec.check(root && above == 0, "largest real root of " + name, to_text(r),
              root ? std::to_string(above) + " root(s) above" : "not a root");
  };
  largest_is("Rw", lead({2, -3}) * lead({32, 16, -80, 184, -142, -63}) *
                       lead({10, -80, 365, -928, 1564, -1788, 1345, -668, 208, -40, 4}),
             Rational(3, 2));
  largest_is("Rb", Poly::x() * lead({1, -3}) * lead({5, -16, 40, -23, 61, -16, -2}) * pow(lead({1, -1, 1}), 2),
             Rational(3));

  // a8/t = (5t-2) w s + t (5-2t) in the (5,1) case is nonnegative on [2/5, 5/2].
  rec.equal("5t - 2 vanishes at 2/5", 0, lead({5, -2})(Rational(2, 5)));
  rec.equal("t(5 - 2t) vanishes at 5/2", 0, lead({-2, 5, 0})(Rational(5, 2)));
  for (int i = 0; i <= 21; ++i) {
    const Rational t = Rational(2, 5) + (Rational(5, 2) - Rational(2, 5)) * i / 21;
    for (const Rational& s : {Rational(1, 16), Rational(1), Rational(7)}) {
      const Rational w = s - 2 * t + 5;
      if (sgn(w) <= 0) continue;
      const Rational a8t = case_a(s, t, w).coeff(8) / t;
      rec.check(sgn(a8t) >= 0, "a8/t >= 0 " + at({{"t", t}, {"w", w}}), ">= 0", to_text(a8t));
    }
  }
  rec.check(sgn(case_a(1, Rational(1, 5), 1 - Rational(2, 5) + 5).coeff(8)) < 0, "a8 < 0 below 2/5 at t=1/5, s=1",
            "< 0", "sign");
  return rec.finish();
}

// ---------------------------------------------------------------------------

CheckResult check_sign_chains(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  Recorder rec("check_sign_chains");
  auto rng = sampler(seed, "check_sign_chains");
  const SignPattern grabiner = SignPattern::parse("++-++");
  const SignPattern sigma0 = SignPattern::parse("+----++++-");

  auto pattern_of = [](const Poly& p) -> std::optional<SignPattern> {
    for (const auto& c : p.coeffs())
      if (sgn(c) == 0) return std::nullopt;
    return sign_pattern_of(p);
  };

  // Quartics with pattern ++-++ and exactly two simple positive roots.
  {
    int accepted = 0;
    std::int64_t attempts = 0;
    while (accepted < samples && attempts < 2000LL * samples) {
      ++attempts;
      const Rational u = rng.positive(4), v = rng.positive(4), b = rng.uniform(-8, 8), c = rng.uniform(-8, 8);
      if (u == v) continue;
      const Poly p = xp(-u) * xp(-v) * lead({1, b, c});
      const auto pat = pattern_of(p);
      if (!pat || !(*pat == grabiner)) continue;
      const RootReport rep = root_report(p);
      if (rep.pos_mult != 2 || rep.distinct_positive() != 2) continue;
      ++accepted;
      const std::string where = at({{"u", u}, {"v", v}, {"b", b}, {"c", c}});
      rec.check(rep.neg_mult == 2 && rep.distinct_negative() == 2, "quartic two negative roots " + where, "2",
                std::to_string(rep.neg_mult));
      rec.negative("quartic P(-(u+v)/2) " + where, p(-(u + v) / 2));
    }
    rec.check(accepted == samples, "quartic samples accepted", std::to_string(samples), std::to_string(accepted));
    rec.note("quartic: " + std::to_string(accepted) + " accepted of " + std::to_string(attempts) + " drawn");
  }

  // P1 (x - w)(x^2 + b1 x + b0) never has pattern sigma0; the chain when a8 < 0.
  {
    int chains = 0;
    for (int k = 0; k < samples; ++k) {
      Poly p1 = Poly::constant(1);
      Rational roots = 0;
      for (int i = 0; i < 6; ++i) {
        const Rational r = rng.positive(4);
        p1 *= xp(r);
        roots += r;
      }
      const Rational b1 = rng.uniform(0, 4);
      const Rational b0 = b1 * b1 / 4 + rng.positive(4);
      const Rational w = k % 2 == 0 ? roots + b1 + rng.positive(8) : rng.positive(16);
      const Poly gamma = p1 * xp(-w);
      const Poly p = gamma * lead({1, b1, b0});
      const std::string where = "sample " + std::to_string(k) + " " + at({{"w", w}, {"b1", b1}, {"b0", b0}});
      bool alphas = true;
      for (const auto& a : p1.coeffs()) alphas = alphas && sgn(a) > 0;
      rec.check(alphas, "P1 coefficients positive " + where, "all > 0", "some <= 0");
      const auto pat = pattern_of(p);
      rec.check(!pat || !(*pat == sigma0), "pattern differs from sigma0 " + where, "not sigma0", "sigma0");
      if (sgn(p.coeff(8)) >= 0) continue;
      ++chains;
      rec.equal("a8 = gamma6 + b1 " + where, gamma.coeff(6) + b1, p.coeff(8));
      bool all_negative = true;
      for (int j = 0; j <= 6; ++j) all_negative = all_negative && sgn(gamma.coeff(j)) < 0;
      rec.check(all_negative, "gamma_j < 0 for j <= 6 " + where, "all < 0", "some >= 0");
      for (int j = 2; j <= 4; ++j) rec.negative("a" + std::to_string(j) + " " + where, p.coeff(j));
    }
    rec.note("sextic chain: " + std::to_string(chains) + " of " + std::to_string(samples) + " samples had a8 < 0");
  }

  // (x+u)^6 (x-w)^3 on 6u - 3w = -1.
  {
    const Poly u_of_w = lead({Rational(1, 2), Rational(-1, 6)});
    rec.equal("u - 2w on the line", lead({Rational(-3, 2), Rational(-1, 6)}), u_of_w - lead({2, 0}));
    for (int k = 0; k < samples; ++k) {
      const Rational w = rng.positive(8);
      const Rational u = u_of_w(w);
      const Poly p = pow(xp(u), 6) * pow(xp(-w), 3);
      const std::string where = at({{"w", w}});
      rec.equal("a8 on the line " + where, -1, p.coeff(8));
      rec.equal("a1 " + where, 3 * power(u, 5) * w * w * (u - 2 * w), p.coeff(1));
      rec.negative("u - 2w " + where, u - 2 * w);
    }
  }

  // Hyperbolic polynomials without a root at 0.
  {
    int with_zero = 0;
    for (int k = 0; k < samples; ++k) {
      std::vector<RealRoot> roots;
      int degree = 0;
      const int target = static_cast<int>(rng.integer(2, 9));
      while (degree < target) {
        Rational r = rng.uniform(-6, 6, 16);
        if (sgn(r) == 0) continue;
        const int m = static_cast<int>(rng.integer(1, std::min(3, target - degree)));
        if (std::any_of(roots.begin(), roots.end(), [&](const RealRoot& x) { return x.value == r; })) continue;
        roots.push_back({r, m});
        degree += m;
        if (degree + m <= target && rng.integer(0, 2) == 0 &&
            std::none_of(roots.begin(), roots.end(), [&](const RealRoot& x) { return x.value == -r; })) {
          roots.push_back({-r, m});
          degree += m;
        }
      }
      const Poly p = from_roots(roots, {});
      const auto& c = p.coeffs();
      int pos = 0, neg = 0;
      for (const auto& r : roots) (sgn(r.value) > 0 ? pos : neg) += r.multiplicity;
      const std::string where = "sample " + std::to_string(k) + " " + to_string(p);
      bool has_zero = false;
      for (std::size_t j = 1; j + 1 < c.size(); ++j) {
        if (sgn(c[j]) != 0) continue;
        has_zero = true;
        rec.check(sgn(c[j + 1]) != 0 && sgn(c[j - 1]) != 0, "no consecutive zeros " + where, "isolated zero",
                  "x^" + std::to_string(j));
        rec.check(sgn(c[j + 1]) * sgn(c[j - 1]) < 0, "zero between opposite signs " + where, "opposite",
                  "x^" + std::to_string(j));
      }
      with_zero += has_zero;
      auto changes = [](const Poly& q) {
        int n = 0, last = 0;
        for (const auto& a : q.coeffs()) {
          if (sgn(a) == 0) continue;
          if (last != 0 && sgn(a) != last) ++n;
          last = sgn(a);
        }
        return n;
      };
      rec.check(changes(p) == pos, "positive roots = sign changes " + where, std::to_string(pos),
                std::to_string(changes(p)));
      rec.check(changes(reflect(p)) == neg, "negative roots = sign changes of P(-x) " + where, std::to_string(neg),
                std::to_string(changes(reflect(p))));
    }
    rec.note("hyperbolic: " + std::to_string(with_zero) + " of " + std::to_string(samples) +
             " samples had a vanishing coefficient");
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------

CheckResult check_lemma11() {
  Recorder rec("check_lemma11");
  // Positive solutions scale to u = 1; a8 is homogeneous of degree 1, so a
  // solution with a8 = -1 and u > 0 exists iff one with u = 1 has a8 < 0.
  // With Q = (x+1)^6 (x-w)^2 one has a_k = q_{k-1}(w) - xi q_k(w).
  const Poly w = Poly::x();
  // q_k(w): coefficients of (x+1)^6 (x^2 - 2w x + w^2).
  const Poly sextic = pow(xp(1), 6);
  auto e = [&](int i) { return i < 0 ? Rational(0) : sextic.coeff(i); };
  std::vector<Poly> q(9);
  for (int k = 0; k <= 8; ++k) q[k] = Poly::constant(e(k - 2)) + Rational(-2) * e(k - 1) * w + e(k) * w * w;
  auto coeff_a = [&](int k) { return BiPoly({k >= 1 ? q[k - 1] : Poly(), -q[k]}); };
  const BiPoly a1 = coeff_a(1);
  const Poly a8_numer_base = q[7];  // a8 = q7 - xi q8, q8 = 1

  struct Expected {
    int j;
    Poly resultant;
  };
  for (const auto& [j, expected] : {Expected{4, Rational(-3) * w * lead({35, -60, 27, -4})},
                                    Expected{5, Rational(-6) * w * lead({14, -40, 25, -5})}}) {
    const std::string sys = "{a8=-1, a1=0, a" + std::to_string(j) + "=0}";
    const Poly r = resultant(a1, coeff_a(j));
    if (r.is_zero()) throw EliminationDegenerate("resultant vanishes identically for " + sys);
    rec.equal(sys + " resultant in w", expected, r);
    const Poly sf = square_free_part(r);
    int positive_w = 0;
    for (const auto& iv : isolate_real_roots(sf)) {
      if (sgn(iv.hi) <= 0) continue;  // w <= 0
      ++positive_w;
      const std::string where = sys + " root w in (" + to_decimal(iv.lo, 6) + ", " + to_decimal(iv.hi, 6) + ")";
      const int s1 = sign_at_root(sf, iv, q[1]);
      if (s1 == 0) {
        if (sign_at_root(sf, iv, q[0]) == 0) throw EliminationDegenerate("a1 vanishes identically in xi for " + sys);
        rec.check(true, where + ": no xi solves a1 = 0", "no solution", "no solution");
        continue;
      }
      // xi = q0 / q1; a8 = (q7 q1 - q0) / q1.
      const int s_xi = sign_at_root(sf, iv, q[0]) * s1;
      const int s_a8 = sign_at_root(sf, iv, a8_numer_base * q[1] - q[0]) * s1;
      const bool nonpositive = s_xi <= 0 || s_a8 >= 0;
      rec.check(nonpositive, where + ": nonpositive component", "xi <= 0 or a8 >= 0 at u = 1",
                "sign(xi)=" + std::to_string(s_xi) + " sign(a8)=" + std::to_string(s_a8));
      rec.note(where + ": sign(xi)=" + std::to_string(s_xi) + ", sign(a8 at u=1)=" + std::to_string(s_a8) +
               (s_a8 > 0 ? ", so a8 = -1 forces u < 0" : ""));
    }
    rec.note(sys + ": " + std::to_string(positive_w) + " positive root(s) w of the resultant");
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------

namespace {

// Columns dP/dr_i = -m_i P/(x - r_i) for P = prod (x - r_i)^m_i.
std::vector<Poly> root_partials(const std::vector<RealRoot>& roots) {
  const Poly p = from_roots(roots, {});
  std::vector<Poly> cols;
  for (const auto& r : roots) cols.push_back(Rational(-r.multiplicity) * exact_div(p, xp(-r.value)));
  return cols;
}

// x^s Q for s = count-1, ..., 0 with Q = P / prod (x - r_i).
std::vector<Poly> shifted_generators(const std::vector<RealRoot>& roots) {
  Poly q = from_roots(roots, {});
  for (const auto& r : roots) q = exact_div(q, xp(-r.value));
  std::vector<Poly> cols;
  for (int s = static_cast<int>(roots.size()) - 1; s >= 0; --s) cols.push_back(Poly::monomial(1, s) * q);
  return cols;
}

std::vector<int> composition(RationalSampler& rng, int total, int parts) {
  std::vector<int> m(parts, 1);
  for (int i = parts; i < total; ++i) ++m[rng.integer(0, parts - 1)];
  return m;
}

}  // namespace

CheckResult check_ranks(int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  Recorder rec("check_ranks");
  auto rng = sampler(seed, "check_ranks");

  auto distinct_roots = [&](int k, bool positive_only) {
    std::vector<Rational> r;
    while (static_cast<int>(r.size()) < k) {
      Rational v = positive_only ? rng.positive(6, 16) : rng.uniform(-6, 6, 16);
      if (sgn(v) == 0 || std::find(r.begin(), r.end(), v) != r.end()) continue;
      r.push_back(v);
    }
    return r;
  };

  for (int k = 0; k < samples; ++k) {
    // Four distinct roots: rank of d(a8, a7, a_j)/d(roots) is 3.
    {
      const auto r = distinct_roots(4, false);
      const auto m = composition(rng, 9, 4);
      std::vector<RealRoot> roots;
      for (int i = 0; i < 4; ++i) roots.push_back({r[i], m[i]});
      const std::string where = "four roots " + to_string(from_roots(roots, {}));
      for (int j : {1, 4, 5}) {
        const int rj = rank(coefficient_matrix(root_partials(roots), {8, 7, j}));
        const int rg = rank(coefficient_matrix(shifted_generators(roots), {8, 7, j}));
        rec.check(rj == 3, "rank J (a" + std::to_string(j) + ") " + where, "3", std::to_string(rj));
        rec.check(rj == rg, "rank J = rank of generators (a" + std::to_string(j) + ") " + where, std::to_string(rj),
                  std::to_string(rg));
      }
    }
    // Five distinct roots (x+u)^l (x+v)^m (x+w)^n (x-t)^2 (x-h): rank 4.
    {
      const auto r = distinct_roots(5, true);
      static const int triples[3][3] = {{4, 1, 1}, {3, 2, 1}, {2, 2, 2}};
      const auto& tr = triples[k % 3];
      const std::vector<RealRoot> roots{{-r[0], tr[0]}, {-r[1], tr[1]}, {-r[2], tr[2]}, {r[3], 2}, {r[4], 1}};
      const std::string where = "five roots " + to_string(from_roots(roots, {}));
      for (int j : {4, 5}) {
        const int rj = rank(coefficient_matrix(root_partials(roots), {8, 7, j, 1}));
        const int rg = rank(coefficient_matrix(shifted_generators(roots), {8, 7, j, 1}));
        rec.check(rj == 4, "rank J (a" + std::to_string(j) + ", a1) " + where, "4", std::to_string(rj));
        rec.check(rj == rg, "rank J = rank of generators (a" + std::to_string(j) + ") " + where, std::to_string(rj),
                  std::to_string(rg));
      }
    }
    // Six distinct roots: rank 4.
    {
      const auto r = distinct_roots(6, false);
      const auto m = composition(rng, 9, 6);
      std::vector<RealRoot> roots;
      for (int i = 0; i < 6; ++i) roots.push_back({r[i], m[i]});
      const std::string where = "six roots " + to_string(from_roots(roots, {}));
      for (int j : {4, 5}) {
        const int rj = rank(coefficient_matrix(root_partials(roots), {8, 7, j, 1}));
        const int rg = rank(coefficient_matrix(shifted_generators(roots), {8, 7, j, 1}));
        rec.check(rj == 4, "rank J (a" + std::to_string(j) + ", a1) " + where, "4", std::to_string(rj));
        rec.check(rj == rg, "rank J = rank of generators (a" + std::to_string(j) + ") " + where, std::to_string(rj),
                  std::to_string(rg));
      }
    }
  }
  rec.note(std::to_string(samples) + " samples per root configuration");
  return rec.finish();
}

}  // namespace descartes
