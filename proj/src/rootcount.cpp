#include "descartes/rootcount.hpp"

#include <algorithm>

namespace descartes {

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// A point strictly inside (lo, hi) where p does not vanish. Tries the
// midpoint first, then other simple fractions of the interval.
Rational nonvanishing_split(const Poly& p, const Rational& lo, const Rational& hi) {
  const Rational width = hi - lo;
  for (int den = 2;; ++den) {
    for (int num = 1; num < den; ++num) {
      Rational x = lo + width * make_rational(num, den);
      if (p.sign_at(x) != 0) return x;
    }
  }
}

void isolate_in(const Poly& p, const SturmChain& chain, const Rational& lo, const Rational& hi, int vlo, int vhi,
                std::vector<IsolatingInterval>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = nonvanishing_split(p, lo, hi);
  int vmid = chain.variations(mid);
  isolate_in(p, chain, lo, mid, vlo, vmid, out);
  isolate_in(p, chain, mid, hi, vmid, vhi, out);
}

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

}  // namespace

SturmChain::SturmChain(const Poly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  Poly d = derivative(p);
  if (d.is_zero()) return;
  chain_.push_back(d);
  for (;;) {
    const Poly& a = chain_[chain_.size() - 2];
    const Poly& b = chain_.back();
    Poly r = divmod(a, b).remainder;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmChain::variations(const Rational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(q.sign_at(x));
  return count_variations(s);
}

int SturmChain::variations_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sign(q.leading()));
  return count_variations(s);
}

int SturmChain::variations_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.degree() % 2 == 0 ? sign(q.leading()) : -sign(q.leading()));
  return count_variations(s);
}

int sturm_count(const Poly& p, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: need lo < hi");
  if (!is_square_free(p)) throw std::invalid_argument("sturm_count: polynomial is not square-free");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) throw std::invalid_argument("sturm_count: polynomial vanishes at an endpoint");
  SturmChain chain(p);
  return chain.variations(lo) - chain.variations(hi);
}

Rational cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound of the zero polynomial");
  Rational best = 0;
  const Rational& lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_value(p.coeff(i) / lead);
    if (r > best) best = r;
  }
  return best + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of the zero polynomial");
  std::vector<IsolatingInterval> out;
  if (p.degree() == 0) return out;
  Poly f = p;
  bool zero_root = false;
  if (sgn(f.coeff(0)) == 0) {
    zero_root = true;
    f = exact_div(f, Poly::x());
  }
  SturmChain chain(f);
  Rational bound = cauchy_bound(f);
  if (f.degree() > 0) {
    const int vneg = chain.variations(-bound);
    const int vzero = chain.variations(0);
    const int vpos = chain.variations(bound);
    isolate_in(f, chain, -bound, 0, vneg, vzero, out);
    if (zero_root) out.push_back({0, 0});
    isolate_in(f, chain, 0, bound, vzero, vpos, out);
  } else if (zero_root) {
    out.push_back({0, 0});
  }
  // p itself vanishes at 0; move endpoints off it.
  if (zero_root)
    for (auto& iv : out)
      while (iv.lo != iv.hi && (sgn(iv.lo) == 0 || sgn(iv.hi) == 0)) iv = bisect_once(f, iv);
  return out;
}

IsolatingInterval bisect_once(const Poly& square_free, const IsolatingInterval& iv) {
  if (iv.lo == iv.hi) return iv;
  Rational mid = (iv.lo + iv.hi) / 2;
  const int smid = square_free.sign_at(mid);
  if (smid == 0) {
    // Root found exactly; shrink to a tiny interval around it that keeps
    // a strict sign change with nonzero endpoints.
    Rational half = (iv.hi - iv.lo) / 4;
    Rational lo = mid - half;
    Rational hi = mid + half;
    while (square_free.sign_at(lo) == 0 || square_free.sign_at(hi) == 0 ||
           square_free.sign_at(lo) == square_free.sign_at(hi)) {
      half /= 2;
      lo = mid - half;
      hi = mid + half;
    }
    return {lo, hi};
  }
  if (smid == square_free.sign_at(iv.lo)) return {mid, iv.hi};
  return {iv.lo, mid};
}

RootReport root_report(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("root_report of the zero polynomial");
  RootReport report;
  report.degree = p.degree();
  Poly f = p;
  while (f.degree() > 0 && sgn(f.coeff(0)) == 0) {
    f = exact_div(f, Poly::x());
    ++report.zero_mult;
  }
  for (const auto& [factor, mult] : square_free_decompose(f)) {
    // factor(0) != 0 because all factors of x were removed above.
    for (const auto& iv : isolate_real_roots(factor)) {
      RealRootInfo info{iv, mult, sign(iv.lo) >= 0 ? 1 : -1, factor};
      (info.sign > 0 ? report.pos_mult : report.neg_mult) += mult;
      report.roots.push_back(std::move(info));
    }
  }
  // Roots of different factors may share intervals; refine until disjoint.
  auto by_lo = [](const RealRootInfo& a, const RealRootInfo& b) { return a.interval.lo < b.interval.lo; };
  std::sort(report.roots.begin(), report.roots.end(), by_lo);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < report.roots.size(); ++i) {
      auto& a = report.roots[i];
      auto& b = report.roots[i + 1];
      if (overlaps(a.interval, b.interval)) {
        a.interval = bisect_once(a.factor, a.interval);
        b.interval = bisect_once(b.factor, b.interval);
        changed = true;
      }
    }
    if (changed) std::sort(report.roots.begin(), report.roots.end(), by_lo);
  }
  const int real = report.pos_mult + report.neg_mult + report.zero_mult;
  report.complex_pairs = (report.degree - real) / 2;
  return report;
}

bool RootReport::all_nonzero_real_roots_simple() const {
  return std::all_of(roots.begin(), roots.end(), [](const RealRootInfo& r) { return r.multiplicity == 1; });
}

int RootReport::distinct_positive() const {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [](const RealRootInfo& r) { return r.sign > 0; }));
}

int RootReport::distinct_negative() const {
  return static_cast<int>(std::count_if(roots.begin(), roots.end(), [](const RealRootInfo& r) { return r.sign < 0; }));
}

Rational refine_root(const Poly& p, const IsolatingInterval& iv, const Rational& tol) {
  if (sgn(tol) <= 0) throw std::invalid_argument("refine_root: tolerance must be positive");
  if (iv.lo == iv.hi) {
    if (p.sign_at(iv.lo) != 0) throw std::invalid_argument("refine_root: degenerate interval is not a root");
    return iv.lo;
  }
  const Poly f = square_free_part(p);
  int slo = f.sign_at(iv.lo);
  const int shi = f.sign_at(iv.hi);
  if (slo == 0) return iv.lo;
  if (shi == 0) return iv.hi;
  if (slo == shi) throw std::invalid_argument("refine_root: interval does not bracket a sign change");
  Rational lo = iv.lo;
  Rational hi = iv.hi;
  while (hi - lo >= 2 * tol) {
    Rational mid = (lo + hi) / 2;
    const int s = f.sign_at(mid);
    if (s == 0) return mid;
    if (s == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace descartes
