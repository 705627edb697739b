#pragma once

#include "descartes/bipoly.hpp"
#include "descartes/poly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace descartes {

/// One checked statement. `tolerance` is "exact" for identities.
struct Assertion {
  std::string label;
  std::string expected;
  std::string computed;
  std::string tolerance;
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::int64_t assertions = 0;
  std::vector<Assertion> failures;  // first few mismatches, verbatim
  std::vector<std::string> notes;   // point counts, conventions, corrections
};

struct PaperConfig {
  std::uint64_t seed = 0;
  /// Overrides every per-check point/sample count when set.
  std::optional<int> points;
};

class EliminationDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 27 a1 at xi = (sum u + 1)/3 for (x+u1)...(x+u6)(x-xi)^3, Xi > 0, a1 < 0.
CheckResult check_identity_lemma10(int points, std::uint64_t seed = 0);

/// Structural Jacobian determinants of the (u,v)-doubled, u-quadrupled and
/// (x+u)^6 (x-w)^2 (x-xi) families against their closed forms.
CheckResult check_jacobians(int points, std::uint64_t seed = 0);

/// Coefficient formulas of the three negative-multiplicity cases and of the
/// divided polynomials used by the rank arguments.
CheckResult check_case_formulas(int points, std::uint64_t seed = 0);

/// The seven resultant/discriminant factorizations and the stated slices.
CheckResult check_resultants();

/// Printed root values, orderings and the rational thresholds 2/5, 5/2.
CheckResult check_root_digits();

/// Randomized sign-chain properties (quartic, sextic-times-cubic, the a8
/// line, hyperbolic coefficient sequences).
CheckResult check_sign_chains(int samples, std::uint64_t seed = 0);

/// Exact elimination for {a8=-1, a1=0, a4=0} and {a8=-1, a1=0, a5=0} on
/// (x+u)^6 (x-w)^2 (x-xi). Throws EliminationDegenerate if a resultant
/// vanishes identically.
CheckResult check_lemma11();

/// Exact ranks of the coefficient Jacobians for four, five and six distinct
/// real roots.
CheckResult check_ranks(int samples, std::uint64_t seed = 0);

/// Determinants (J1*, J4*, J5*) of d(a8, a7, a_j)/d(u, w, xi) for
/// (x+u)^6 (x-w)^2 (x-xi). Throws std::domain_error unless u, w, xi > 0.
struct Lemma12Determinants {
  Rational j1, j4, j5;
};
Lemma12Determinants lemma12_determinants(const Rational& u, const Rational& w, const Rational& xi);

/// A printed list of real roots. An empty list claims there are none.
/// Texts with a '/' or without a decimal point are exact claims.
struct DigitClaim {
  std::string name;
  Poly poly;
  std::vector<std::string> roots;
  std::string context;
};
const std::vector<DigitClaim>& digit_claims();

/// Isolates, refines and compares every claim; used by check_root_digits.
CheckResult check_digit_claims(const std::vector<DigitClaim>& claims);

/// 5 * 10^-k for a decimal text with k digits after the point.
Rational digit_tolerance(const std::string& printed);

/// The bivariate polynomials of the (3,3) case: t main, w secondary.
const BiPoly& h_star();
const BiPoly& a5_star();  // as printed, 27 times the a5 coefficient at s = s0
const BiPoly& a4_star();  // as printed, 27 times the a4 coefficient at s = s0

const std::vector<std::string>& check_names();

/// Runs one named check. Throws std::invalid_argument for unknown names.
CheckResult run_check(const std::string& name, const PaperConfig& cfg);

/// Runs the named checks (all when empty) on up to `jobs` threads; results
/// come back in the order of `names`. A throwing check becomes a failure.
std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const PaperConfig& cfg,
                                    unsigned jobs = 1);

std::string manifest_json(const std::vector<CheckResult>& results);

struct FigureRegion {
  Rational t_min = -4, t_max = 4;
  Rational w_min = -4, w_max = 8;
  int t_steps = 41, w_steps = 41;
};

/// CSV rows t,w,sgnH,sgnA5,sgnA4 over the grid, exact rational coordinates.
/// Throws std::invalid_argument for fewer than 2 steps in either direction.
void emit_figure_data(const FigureRegion& region, std::ostream& out);

}  // namespace descartes
