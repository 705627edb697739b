#pragma once

#include "descartes/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace descartes {

struct IsolatingInterval {
  Rational lo;
  Rational hi;
};

/// Sturm chain p, p', -rem(p, p'), ... ending at the last nonzero remainder.
class SturmChain {
 public:
  explicit SturmChain(const Poly& p);

  const std::vector<Poly>& chain() const { return chain_; }
  /// Number of sign changes of the chain evaluated at x (zeros skipped).
  int variations(const Rational& x) const;
  /// Sign changes at -infinity / +infinity.
  int variations_at_minus_infinity() const;
  int variations_at_plus_infinity() const;

 private:
  std::vector<Poly> chain_;
};

/// Number of distinct real roots of a square-free p in (lo, hi].
/// Throws std::invalid_argument if p is not square-free, if p vanishes at an
/// endpoint or if lo >= hi.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// 1 + max |a_i / a_d|: every root lies strictly inside (-B, B).
Rational cauchy_bound(const Poly& p);

struct RealRootInfo {
  IsolatingInterval interval;  // the root lies in the open interval
  int multiplicity;
  int sign;                    // -1, 0 or +1
  Poly factor;                 // square-free factor vanishing at the root
};

/// Multiplicity-exact root census of a nonzero polynomial.
struct RootReport {
  int degree = 0;
  int pos_mult = 0;
  int neg_mult = 0;
  int zero_mult = 0;
  int complex_pairs = 0;
  /// Distinct nonzero real roots in increasing order, pairwise disjoint
  /// intervals. A root at 0 is reported only through zero_mult.
  std::vector<RealRootInfo> roots;

  bool all_nonzero_real_roots_simple() const;
  int distinct_positive() const;
  int distinct_negative() const;
};

/// Throws std::invalid_argument for the zero polynomial.
RootReport root_report(const Poly& p);

/// Roots of a square-free polynomial p in sorted order, each isolated in an
/// open interval (lo, hi) with p(lo) * p(hi) < 0. A root at 0 is returned as
/// the degenerate interval [0, 0].
std::vector<IsolatingInterval> isolate_real_roots(const Poly& p);

/// Bisects `iv` until it is shorter than 2 * tol and returns its midpoint,
/// which is then within tol of the root. Works on the square-free part of p.
/// Throws std::invalid_argument if the square-free part does not change sign
/// across the interval or tol <= 0.
Rational refine_root(const Poly& p, const IsolatingInterval& iv, const Rational& tol);

/// Halves an isolating interval of the square-free `p`, keeping the root.
IsolatingInterval bisect_once(const Poly& square_free, const IsolatingInterval& iv);

}  // namespace descartes
