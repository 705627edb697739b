#pragma once

#include "descartes/poly.hpp"

#include <functional>
#include <span>
#include <vector>

namespace descartes {

/// Polynomial in a main variable whose coefficients are polynomials in a
/// secondary variable: sum_i coeffs[i](w) * t^i with t main, w secondary.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<Poly> ascending_in_main);

  struct Term {
    Rational coeff;
    int main_power;
    int secondary_power;
  };
  static BiPoly from_terms(std::span<const Term> terms);
  static BiPoly from_terms(std::initializer_list<Term> terms);
  /// Embeds p(t) with constant coefficients in w.
  static BiPoly in_main(const Poly& p);
  /// Embeds q(w) as a constant in t.
  static BiPoly in_secondary(const Poly& q);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int secondary_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  Poly coeff(int i) const;

  /// Fix the secondary variable: a polynomial in the main variable.
  Poly at_secondary(const Rational& w) const;
  /// Fix the main variable: a polynomial in the secondary variable.
  Poly at_main(const Rational& t) const;
  Rational operator()(const Rational& t, const Rational& w) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);

  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void trim();
  std::vector<Poly> coeffs_;
};

inline BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
inline BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const Rational& c);

BiPoly derivative_main(const BiPoly& f);
BiPoly derivative_secondary(const BiPoly& f);

/// Exchanges the roles of the two variables.
BiPoly swap_variables(const BiPoly& f);

/// Resultant in the main variable: the determinant of the Sylvester matrix
/// of f and g, a polynomial in the secondary variable. Computed by
/// fraction-free (Bareiss) elimination over Q[w]. Throws
/// std::invalid_argument if either input is zero.
Poly resultant(const BiPoly& f, const BiPoly& g);

/// Determinant of a square matrix over Q[w] by Bareiss elimination.
Poly bareiss_determinant(std::vector<std::vector<Poly>> m);

/// Recovers the unique bivariate polynomial with main degree <= main_degree
/// and secondary degree <= secondary_degree that agrees with `f` on a grid
/// of integer nodes. Exact whenever `f` is such a polynomial.
BiPoly interpolate_bivariate(const std::function<Rational(const Rational&, const Rational&)>& f,
                             int main_degree, int secondary_degree);

std::string to_string(const BiPoly& f, const std::string& main_var = "t",
                      const std::string& secondary_var = "w");

}  // namespace descartes
