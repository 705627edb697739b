#pragma once

#include "descartes/poly.hpp"
#include "descartes/rootcount.hpp"
#include "descartes/signs.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace descartes {

struct Construction;
using ConstructionPtr = std::shared_ptr<const Construction>;

/// How a witness polynomial was built. Replaying the tree reproduces it.
struct Construction {
  enum class Kind { Literal, Roots, Concatenate, Action };

  Kind kind = Kind::Literal;
  std::string label;

  Poly literal;                             // Literal
  std::vector<RealRoot> real_roots;         // Roots
  std::vector<ComplexPair> complex_pairs;   // Roots
  Rational eps;                             // Concatenate
  ConstructionPtr left;                     // Concatenate
  ConstructionPtr right;                    // Concatenate; also the operand of Action
  Generator generator = Generator::Identity;  // Action

  static ConstructionPtr make_literal(Poly p, std::string label);
  static ConstructionPtr make_roots(std::vector<RealRoot> real, std::vector<ComplexPair> pairs, std::string label);
  static ConstructionPtr make_concatenate(ConstructionPtr left, ConstructionPtr right, Rational eps);
  static ConstructionPtr make_action(Generator g, ConstructionPtr inner);
};

Poly replay(const Construction& c);

/// Indented multi-line description of the construction tree.
std::string describe(const Construction& c);

/// A verified realization of a couple.
struct Witness {
  Poly poly;
  Couple couple;
  RootReport report;
  ConstructionPtr construction;
};

class InvalidWitness : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Replays the construction, checks it reproduces `poly` and that `poly`
/// realizes the couple. Throws InvalidWitness otherwise.
Witness make_witness(const Poly& poly, const Couple& couple, ConstructionPtr construction);

/// Applies a group element to a witness, giving a witness of the acted couple.
Witness act(Generator g, const Witness& w);

class EpsilonExhausted : public std::runtime_error {
 public:
  explicit EpsilonExhausted(const Rational& min_eps);
  const Rational& min_eps() const { return min_eps_; }

 private:
  Rational min_eps_;
};

/// Pattern of the concatenation: sigma1 followed by the tail of sigma2,
/// negated when sigma1 ends in -.
SignPattern concatenated_pattern(const SignPattern& s1, const SignPattern& s2);

/// eps^d2 * P1(x) * P2(x/eps) with eps = 1, 1/2, 1/4, ... down to min_eps.
Witness concatenate(const Witness& w1, const Witness& w2, const Rational& min_eps = pow2(-64));

/// Direct construction for degree <= 3. Throws std::invalid_argument for
/// larger degrees.
Witness realize_low_degree(const Couple& cp);

struct SearchConfig {
  std::uint64_t seed = 0;
  std::int64_t budget = 100000;  // score evaluations
  Rational radius = 1024;
  int max_moves_per_restart = 400;
};

/// Throws std::invalid_argument unless budget >= 1 and radius > 0.
void validate(const SearchConfig& cfg);

struct Unknown {
  std::int64_t spent = 0;
};

struct NotCovered {
  std::string reason;
};

using SearchOutcome = std::variant<Witness, Unknown>;
using D9Outcome = std::variant<Witness, NotCovered>;

/// Randomized root placement with coordinate-wise multiplicative descent on
/// the number of wrongly signed coefficients. Deterministic in
/// (cfg.seed, couple).
SearchOutcome realize_search(const Couple& cp, const SearchConfig& cfg);

/// Recursive concatenation of a realizable prefix with a degree <= 3 piece
/// or the frozen degree-5 piece. Never searches.
std::optional<Witness> realize_by_pieces(const Couple& cp);

/// Degree-9 case analysis: peel x +- 1, then the suffix recipes with
/// x^2 - x + 1, x^3 - 2x^2 - 3x + 10 and the frozen quintic. Prefix witnesses
/// come from realize_by_pieces, then realize_search.
D9Outcome realize_d9(const Couple& cp, const SearchConfig& cfg);

/// Routing used by the CLI and the catalog: low degree, d = 9 recipes,
/// pieces, then search.
SearchOutcome realize(const Couple& cp, const SearchConfig& cfg);

/// Named recipe pieces.
const Witness& p2_dagger();    // x^2 - x + 1 for (+-+, (0, 0))
const Witness& p2_delta();     // x^3 - 2x^2 - 3x + 10 for (+--+, (0, 1))
const Witness& p2_ddagger();   // frozen quintic for (++---+, (0, 3))

/// The degree-9 couple whose orbit no recipe reaches.
Couple sigma_zero_couple();

/// Citation text if the couple lies in the orbit of a known nonrealizable one.
std::optional<std::string> known_nonrealizable(const Couple& cp);

/// One printed row of the degree-8 table, a reduced pattern with pos = 0.
struct D9Case {
  std::string name;
  std::string printed_pattern;
  std::vector<int> negs;
  bool length_consistent;
};

const std::vector<D9Case>& d9_case_table();

/// Degree-9 couples (sigma, (1, neg)) with sigma the table pattern followed
/// by -, for every consistent row and its reverted row. Names like "G1", "G1^r".
struct NamedCouple {
  std::string name;
  Couple couple;
};
std::vector<NamedCouple> d9_case_couples();

enum class CatalogStatus { Realized, NonrealizableProved, NonrealizableCited, Unknown };
std::string to_string(CatalogStatus s);
CatalogStatus parse_catalog_status(const std::string& text);

struct CatalogEntry {
  Couple couple;
  CatalogStatus status;
  std::optional<Witness> witness;
  std::string citation;
  std::int64_t budget_spent = 0;
};

/// Every couple of degree d, sorted by (pattern text, pos, neg). Witnesses
/// are computed for one member per orbit and carried to the others.
std::vector<CatalogEntry> build_catalog(int degree, const SearchConfig& cfg, unsigned jobs = 1);

std::string catalog_to_json(int degree, std::uint64_t seed, const std::vector<CatalogEntry>& entries);

/// Parses catalog JSON and re-verifies every realized witness (throws
/// InvalidWitness on failure).
std::vector<CatalogEntry> load_catalog(const std::string& json_text);

}  // namespace descartes
