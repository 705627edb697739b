#pragma once

#include "descartes/poly.hpp"
#include "descartes/rootcount.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace descartes {

/// Signs of a polynomial's coefficients read from the leading one down to
/// the constant term. The leading sign is always +.
class SignPattern {
 public:
  /// Throws std::invalid_argument unless every sign is +1 or -1, the first
  /// is +1 and there are at least two.
  explicit SignPattern(std::vector<int> signs);
  /// Parses the compact text form, e.g. "+----++++-".
  static SignPattern parse(std::string_view text);

  int degree() const { return static_cast<int>(signs_.size()) - 1; }
  std::size_t size() const { return signs_.size(); }
  const std::vector<int>& signs() const { return signs_; }
  /// Sign at reading position i (0 = leading).
  int at(std::size_t i) const { return signs_[i]; }
  /// Sign of the coefficient of x^k.
  int of_power(int k) const { return signs_[static_cast<std::size_t>(degree() - k)]; }
  int last() const { return signs_.back(); }

  std::string text() const;

  /// The first `length` signs.
  SignPattern prefix(std::size_t length) const;

  friend auto operator<=>(const SignPattern&, const SignPattern&) = default;
  friend bool operator==(const SignPattern&, const SignPattern&) = default;

 private:
  std::vector<int> signs_;
};

struct DescartesPair {
  int c = 0;  // sign changes
  int p = 0;  // sign preservations
  friend bool operator==(const DescartesPair&, const DescartesPair&) = default;
};

struct AdmissiblePair {
  int pos = 0;
  int neg = 0;
  friend auto operator<=>(const AdmissiblePair&, const AdmissiblePair&) = default;
  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

class NotAdmissible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

DescartesPair descartes_pair(const SignPattern& sigma);

bool is_admissible(const SignPattern& sigma, const AdmissiblePair& pair);

/// Every pair allowed by Descartes' rule, sorted; there are
/// (c/2 + 1) * (p/2 + 1) of them.
std::vector<AdmissiblePair> admissible_pairs(const SignPattern& sigma);

/// A sign pattern with an admissible pair. Non-admissible pairs are rejected.
class Couple {
 public:
  /// Throws NotAdmissible.
  Couple(SignPattern pattern, AdmissiblePair pair);

  const SignPattern& pattern() const { return pattern_; }
  const AdmissiblePair& pair() const { return pair_; }
  int degree() const { return pattern_.degree(); }
  int pos() const { return pair_.pos; }
  int neg() const { return pair_.neg; }

  /// e.g. "(+----++++-, (1, 6))"
  std::string text() const;
  /// FNV-1a over the text form; stable across platforms and runs.
  std::uint64_t stable_hash() const;

  friend auto operator<=>(const Couple&, const Couple&) = default;
  friend bool operator==(const Couple&, const Couple&) = default;

 private:
  SignPattern pattern_;
  AdmissiblePair pair_;
};

/// Reversal x -> 1/x: read backwards, then multiply by the new first sign.
SignPattern revert(const SignPattern& sigma);

/// x -> -x: flips the signs of odd powers for even degree and of even powers
/// for odd degree. The leading sign never changes.
SignPattern mirror(const SignPattern& sigma);

enum class Generator { Identity, Revert, Mirror, RevertMirror };
std::string to_string(Generator g);

struct OrbitMember {
  Couple couple;
  Generator generator;  // maps the input couple to this member
};

/// Closure of a couple under the Z2 x Z2 action (revert keeps the pair,
/// mirror swaps it). Members are distinct; the input comes first.
std::vector<OrbitMember> orbit(const Couple& cp);

Couple apply(Generator g, const Couple& cp);

/// Smallest member of the orbit in (pattern text, pos, neg) order.
Couple canonical(const Couple& cp);

class ZeroCoefficient : public std::domain_error {
 public:
  explicit ZeroCoefficient(int power);
  int power() const { return power_; }

 private:
  int power_;
};

class NegativeLeading : public std::domain_error {
 public:
  NegativeLeading() : std::domain_error("leading coefficient is negative") {}
};

/// Throws ZeroCoefficient (with the power of x) or NegativeLeading.
SignPattern sign_pattern_of(const Poly& p);

struct Verdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// True iff p has the couple's sign pattern, exactly pos simple positive
/// roots, exactly neg simple negative roots, no root at 0 and only complex
/// roots otherwise.
Verdict realizes(const Poly& p, const Couple& cp);

/// The polynomial-level actions, normalized to a positive leading term.
/// mirror_poly: (-1)^d p(-x). revert_poly: x^d p(1/x) / p(0).
Poly mirror_poly(const Poly& p);
Poly revert_poly(const Poly& p);
Poly apply(Generator g, const Poly& p);

/// Sign changes in the coefficient sequence, zeros skipped.
int sign_changes(const Poly& p);

}  // namespace descartes
