#pragma once

#include "descartes/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace descartes {

/// Dense univariate polynomial over Q, coefficients ascending by power.
///
/// The zero polynomial is the empty coefficient vector and has degree -1.
/// Every constructor and arithmetic result trims leading zeros, so the
/// leading coefficient of a nonzero polynomial is never zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> ascending);
  Poly(std::initializer_list<Rational> ascending);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int power);
  /// The identity polynomial x.
  static Poly x();
  /// Builds from coefficients listed leading-first, the reading order of
  /// sign patterns: `from_leading({1, -2, -3, 10})` is x^3-2x^2-3x+10.
  static Poly from_leading(std::span<const Rational> leading_first);
  static Poly from_leading(std::initializer_list<Rational> leading_first);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;

  std::vector<Rational> leading_first() const;

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sign((*this)(x)); }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
inline Poly operator*(Poly a, const Rational& c) { return a *= c; }
inline Poly operator*(const Rational& c, Poly a) { return a *= c; }

Poly pow(const Poly& p, unsigned exponent);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws std::domain_error for a zero divisor.
DivMod divmod(const Poly& a, const Poly& b);

/// Division that must be exact; throws std::domain_error otherwise.
Poly exact_div(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

Poly monic(const Poly& p);

Poly derivative(const Poly& p);

/// p(-x).
Poly reflect(const Poly& p);

/// x^deg p(1/x): the coefficient sequence read backwards.
Poly reciprocal(const Poly& p);

/// p(q(x)).
Poly compose(const Poly& p, const Poly& q);

/// eps^deg(p) * p(x/eps). Roots are scaled by eps and the degree is kept.
/// Throws std::invalid_argument unless eps > 0.
Poly scale_compose(const Poly& p, const Rational& eps);

struct SquareFreeFactor {
  Poly factor;  // monic, square-free
  int multiplicity;
};

/// p = lc(p) * prod factor_i^m_i with pairwise coprime square-free monic
/// factors, listed by increasing multiplicity (Yun's algorithm). Throws
/// std::invalid_argument for the zero polynomial.
std::vector<SquareFreeFactor> square_free_decompose(const Poly& p);

/// Square-free part p / gcd(p, p'), made monic.
Poly square_free_part(const Poly& p);

bool is_square_free(const Poly& p);

/// A conjugate pair re ± i*sqrt(imag_sq), contributing the real quadratic
/// factor x^2 - 2*re*x + re^2 + imag_sq.
struct ComplexPair {
  Rational re;
  Rational imag_sq;
};

struct RealRoot {
  Rational value;
  int multiplicity = 1;
};

/// lead * prod (x - r)^m * prod ((x - re)^2 + imag_sq).
/// Throws std::invalid_argument for imag_sq <= 0, lead == 0 or m < 1.
Poly from_roots(std::span<const RealRoot> real_roots, std::span<const ComplexPair> complex_pairs,
                const Rational& lead = 1);

/// Human-readable form such as "x^3 - 2*x^2 - 3*x + 10" (variable name configurable).
std::string to_string(const Poly& p, const std::string& var = "x");

/// Leading-first coefficient texts, the wire form used in JSON.
std::vector<std::string> to_texts(const Poly& p);
Poly from_texts(std::span<const std::string> leading_first);

/// Lagrange interpolation through (xs[i], ys[i]); the nodes must be distinct.
Poly interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace descartes
