#include "descartes/realize.hpp"
#include "descartes/sampling.hpp"

#include <algorithm>

namespace descartes {

void validate(const SearchConfig& cfg) {
  if (cfg.budget < 1) throw std::invalid_argument("search budget must be at least 1");
  if (sgn(cfg.radius) <= 0) throw std::invalid_argument("search radius must be positive");
  if (cfg.max_moves_per_restart < 1) throw std::invalid_argument("max_moves_per_restart must be at least 1");
}

namespace {

enum class SlotKind { Positive, Negative, PairRe, PairIm };

struct State {
  std::vector<SlotKind> kinds;
  std::vector<Rational> magnitude;
  std::vector<int> re_sign;  // used by PairRe slots only

  void build(std::vector<RealRoot>& real, std::vector<ComplexPair>& cplx) const {
    real.clear();
    cplx.clear();
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      switch (kinds[i]) {
        case SlotKind::Positive:
          real.push_back({magnitude[i], 1});
          break;
        case SlotKind::Negative:
          real.push_back({-magnitude[i], 1});
          break;
        case SlotKind::PairRe:
          cplx.push_back({re_sign[i] * magnitude[i], magnitude[i + 1]});
          break;
        case SlotKind::PairIm:
          break;
      }
    }
  }

  bool real_roots_distinct() const {
    for (std::size_t i = 0; i < kinds.size(); ++i)
      for (std::size_t j = i + 1; j < kinds.size(); ++j)
        if (kinds[i] == kinds[j] && (kinds[i] == SlotKind::Positive || kinds[i] == SlotKind::Negative) &&
            magnitude[i] == magnitude[j])
          return false;
    return true;
  }
};

struct Score {
  int wrong = 0;
  Rational closeness;  // smallest |wrong coefficient| / max |coefficient|
};

bool better(const Score& a, const Score& b) {
  if (a.wrong != b.wrong) return a.wrong < b.wrong;
  return a.closeness < b.closeness;
}

Score score_of(const Poly& p, const SignPattern& sigma) {
  Score s;
  Rational largest = 0;
  std::optional<Rational> smallest_wrong;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational a = abs_value(p.coeff(k));
    largest = std::max(largest, a);
    if (sgn(p.coeff(k)) != sigma.of_power(k)) {
      ++s.wrong;
      if (!smallest_wrong || a < *smallest_wrong) smallest_wrong = a;
    }
  }
  if (smallest_wrong) s.closeness = *smallest_wrong / largest;
  return s;
}

// Nearest-below dyadic with `bits` significant bits; keeps search numbers small.
Rational round_dyadic(const Rational& v, int bits) {
  Integer num = v.get_num();
  Integer den = v.get_den();
  const long shift = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - bits;
  Rational scaled = v * pow2(static_cast<int>(-shift));
  Integer m;
  mpz_fdiv_q(m.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Rational r = Rational(m) * pow2(static_cast<int>(shift));
  r.canonicalize();
  return r;
}

int exponent_bound(const Rational& radius) {
  int e = 0;
  while (pow2(e + 1) <= radius) ++e;
  return std::max(e, 1);
}

}  // namespace

SearchOutcome realize_search(const Couple& cp, const SearchConfig& cfg) {
  validate(cfg);
  const std::uint64_t seed = mix_seed(cfg.seed, cp.stable_hash());
  RationalSampler rng(seed);
  const SignPattern& sigma = cp.pattern();
  const int max_exp = exponent_bound(cfg.radius);
  const Rational lo = 1 / cfg.radius;
  const Rational& hi = cfg.radius;
  const std::vector<Rational> factors{2, make_rational(1, 2), make_rational(3, 2), make_rational(2, 3),
                                      make_rational(5, 4), make_rational(4, 5), make_rational(9, 8),
                                      make_rational(8, 9)};

  State state;
  for (int i = 0; i < cp.pos(); ++i) state.kinds.push_back(SlotKind::Positive);
  for (int i = 0; i < cp.neg(); ++i) state.kinds.push_back(SlotKind::Negative);
  for (int i = 0; i < (cp.degree() - cp.pos() - cp.neg()) / 2; ++i) {
    state.kinds.push_back(SlotKind::PairRe);
    state.kinds.push_back(SlotKind::PairIm);
  }
  const std::size_t slots = state.kinds.size();
  state.magnitude.resize(slots);
  state.re_sign.assign(slots, 1);

  std::int64_t spent = 0;
  std::int64_t restart = 0;
  std::vector<RealRoot> real;
  std::vector<ComplexPair> cplx;

  auto evaluate = [&](const State& s) {
    ++spent;
    s.build(real, cplx);
    return score_of(from_roots(real, cplx), sigma);
  };
  auto try_finish = [&](const State& s) -> std::optional<Witness> {
    s.build(real, cplx);
    Poly p = from_roots(real, cplx);
    if (!realizes(p, cp)) return std::nullopt;
    return make_witness(p, cp,
                        Construction::make_roots(real, cplx,
                                                 "search seed=" + std::to_string(cfg.seed) +
                                                     " restart=" + std::to_string(restart)));
  };

  while (spent < cfg.budget) {
    ++restart;
    do {
      for (std::size_t i = 0; i < slots; ++i) {
        state.magnitude[i] = std::clamp(rng.log_uniform(max_exp), lo, hi);
        state.re_sign[i] = rng.coin() ? 1 : -1;
      }
    } while (!state.real_roots_distinct());
    Score current = evaluate(state);
    if (current.wrong == 0)
      if (auto w = try_finish(state)) return *w;

    for (int moves = 0; moves < cfg.max_moves_per_restart && spent < cfg.budget; ++moves) {
      bool improved = false;
      const auto start = static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(slots) - 1));
      for (std::size_t step = 0; step < slots && !improved && spent < cfg.budget; ++step) {
        const std::size_t i = (start + step) % slots;
        const std::size_t options = factors.size() + (state.kinds[i] == SlotKind::PairRe ? 1 : 0);
        for (std::size_t m = 0; m < options && spent < cfg.budget; ++m) {
          State candidate = state;
          if (m == factors.size()) {
            candidate.re_sign[i] = -candidate.re_sign[i];
          } else {
            candidate.magnitude[i] = std::clamp(round_dyadic(state.magnitude[i] * factors[m], 12), lo, hi);
            if (candidate.magnitude[i] == state.magnitude[i] || !candidate.real_roots_distinct()) continue;
          }
          Score s = evaluate(candidate);
          if (!better(s, current)) continue;
          state = std::move(candidate);
          current = s;
          improved = true;
          if (current.wrong == 0)
            if (auto w = try_finish(state)) return *w;
          break;
        }
      }
      if (!improved) break;
    }
  }
  return Unknown{spent};
}

}  // namespace descartes
