#include "descartes/sampling.hpp"
#include "descartes/signs.hpp"

#include <gtest/gtest.h>

#include <set>

namespace descartes {
namespace {

const SignPattern kSigmaStar = SignPattern::parse("++-++");
const SignPattern kSigmaZero = SignPattern::parse("+----++++-");

SignPattern random_pattern(RationalSampler& rng, int min_degree = 1, int max_degree = 10) {
  const auto d = rng.integer(min_degree, max_degree);
  std::vector<int> s{1};
  for (int i = 0; i < d; ++i) s.push_back(rng.coin() ? 1 : -1);
  return SignPattern(s);
}

TEST(SignPattern, ParseAndText) {
  EXPECT_EQ(kSigmaZero.text(), "+----++++-");
  EXPECT_EQ(kSigmaZero.degree(), 9);
  EXPECT_THROW(SignPattern::parse("-+"), std::invalid_argument);
  EXPECT_THROW(SignPattern::parse("+"), std::invalid_argument);
  EXPECT_THROW(SignPattern::parse("+x-"), std::invalid_argument);
}

TEST(DescartesPair, Examples) {
  EXPECT_EQ(descartes_pair(kSigmaStar), (DescartesPair{2, 2}));
  EXPECT_EQ(descartes_pair(kSigmaZero), (DescartesPair{3, 6}));
  EXPECT_EQ(descartes_pair(SignPattern::parse("+++++++")), (DescartesPair{0, 6}));
}

TEST(AdmissiblePairs, Examples) {
  EXPECT_EQ(admissible_pairs(kSigmaStar), (std::vector<AdmissiblePair>{{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  auto zero = admissible_pairs(kSigmaZero);
  EXPECT_EQ(zero.size(), 8u);
  for (int pos : {1, 3})
    for (int neg : {0, 2, 4, 6})
      EXPECT_NE(std::find(zero.begin(), zero.end(), AdmissiblePair{pos, neg}), zero.end());
  EXPECT_EQ(admissible_pairs(SignPattern::parse("+-")), (std::vector<AdmissiblePair>{{1, 0}}));
}

TEST(AdmissiblePairs, CountFormula) {
  RationalSampler rng(1);
  for (int i = 0; i < 300; ++i) {
    auto s = random_pattern(rng);
    auto [c, p] = descartes_pair(s);
    EXPECT_EQ(c + p, s.degree());
    EXPECT_EQ(admissible_pairs(s).size(), static_cast<std::size_t>((c / 2 + 1) * (p / 2 + 1)));
  }
}

TEST(Couple, RejectsNonAdmissible) {
  EXPECT_THROW(Couple(kSigmaStar, {1, 1}), NotAdmissible);
  EXPECT_THROW(Couple(kSigmaZero, {1, 7}), NotAdmissible);
  EXPECT_NO_THROW(Couple(kSigmaZero, {1, 6}));
}

TEST(Revert, Examples) {
  EXPECT_EQ(revert(kSigmaZero), kSigmaZero);
  EXPECT_EQ(revert(SignPattern::parse("++-")).text(), "+--");
}

TEST(Mirror, SigmaZero) {
  EXPECT_EQ(mirror(kSigmaZero).text(), "++-+--+-++");
  // Cross-check with the polynomial action on a sample with pattern sigma0.
  Poly p = Poly::from_leading({1, -2, -1, -3, -1, 5, 1, 2, 7, -1});
  ASSERT_EQ(sign_pattern_of(p), kSigmaZero);
  EXPECT_EQ(sign_pattern_of(mirror_poly(p)), mirror(kSigmaZero));
}

TEST(Action, InvolutionsCommuteAndSwapDescartesPair) {
  RationalSampler rng(500);
  for (int i = 0; i < 500; ++i) {
    auto s = random_pattern(rng);
    EXPECT_EQ(revert(revert(s)), s);
    EXPECT_EQ(mirror(mirror(s)), s);
    EXPECT_EQ(mirror(revert(s)), revert(mirror(s)));
    EXPECT_EQ(descartes_pair(mirror(s)).c, descartes_pair(s).p);
    EXPECT_EQ(descartes_pair(revert(s)), descartes_pair(s));
  }
}

TEST(Orbit, SigmaZeroHasTwoMembers) {
  auto o = orbit(Couple(kSigmaZero, {1, 6}));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[0].couple, Couple(kSigmaZero, {1, 6}));
  EXPECT_EQ(o[1].couple, Couple(mirror(kSigmaZero), {6, 1}));
  EXPECT_EQ(o[1].generator, Generator::Mirror);
}

TEST(Orbit, Grabiner) {
  auto o = orbit(Couple(kSigmaStar, {2, 0}));
  ASSERT_EQ(o.size(), 2u);
  EXPECT_EQ(o[1].couple, Couple(SignPattern::parse("+---+"), {0, 2}));
}

TEST(Orbit, MembersAreDistinct) {
  auto o = orbit(Couple(SignPattern::parse("++-+"), {2, 1}));
  std::set<std::string> texts;
  for (const auto& m : o) texts.insert(m.couple.text());
  EXPECT_EQ(texts.size(), o.size());
  EXPECT_EQ(o.size(), 4u);
}

// mirror flips at least one sign, so no orbit is a single couple.
TEST(Orbit, SizesAreTwoOrFour) {
  RationalSampler rng(42);
  for (int i = 0; i < 500; ++i) {
    auto s = random_pattern(rng, 1, 6);
    for (const auto& pair : admissible_pairs(s)) {
      auto o = orbit(Couple(s, pair));
      EXPECT_TRUE(o.size() == 2 || o.size() == 4);
      for (const auto& m : o) EXPECT_EQ(canonical(m.couple), canonical(Couple(s, pair)));
    }
  }
}

TEST(SignPatternOf, Examples) {
  EXPECT_EQ(sign_pattern_of(Poly::from_leading({1, -2, -3, 10})).text(), "+--+");
  EXPECT_EQ(sign_pattern_of(Poly::from_leading({1, -1, 1})).text(), "+-+");
  try {
    sign_pattern_of(Poly::from_leading({1, 0, 1}));
    FAIL() << "expected ZeroCoefficient";
  } catch (const ZeroCoefficient& e) {
    EXPECT_EQ(e.power(), 1);
  }
  EXPECT_THROW(sign_pattern_of(Poly::from_leading({-1, 2})), NegativeLeading);
}

TEST(Realizes, Examples) {
  EXPECT_TRUE(realizes(Poly::from_leading({1, -1, 1}), Couple(SignPattern::parse("+-+"), {0, 0})));
  EXPECT_TRUE(realizes(Poly::from_leading({1, -2, -3, 10}), Couple(SignPattern::parse("+--+"), {0, 1})));
  // (x-1)^2 (x+2) = x^3 - 3x + 2 has a zero coefficient; (x-1)^2(x+3) does not
  // but its positive root is double.
  Poly dbl = pow(Poly{-1, 1}, 2) * Poly{3, 1};
  ASSERT_EQ(sign_pattern_of(dbl).text(), "++-+");
  auto v = realizes(dbl, Couple(SignPattern::parse("++-+"), {2, 1}));
  EXPECT_FALSE(v);
  EXPECT_EQ(v.reason, "multiple real root");
  auto z = realizes(pow(Poly{-1, 1}, 2) * Poly{2, 1}, Couple(SignPattern::parse("++-+"), {2, 1}));
  EXPECT_FALSE(z);
  EXPECT_NE(z.reason.find("zero"), std::string::npos);
}

TEST(Realizes, ImpliesAdmissible) {
  RationalSampler rng(17);
  for (int i = 0; i < 300; ++i) {
    std::vector<RealRoot> roots;
    std::set<Rational> used;
    for (int k = 0; k < 4; ++k) {
      Rational r = rng.uniform(-5, 5, 3);
      if (sgn(r) != 0 && used.insert(r).second) roots.push_back({r, 1});
    }
    Poly p = from_roots(roots, std::vector<ComplexPair>{{rng.uniform(-2, 2, 3), rng.positive(3, 3)}});
    SignPattern s = [&] {
      try {
        return sign_pattern_of(p);
      } catch (const ZeroCoefficient&) {
        return SignPattern::parse("+-");
      }
    }();
    if (s.degree() != p.degree()) continue;
    auto r = root_report(p);
    AdmissiblePair pair{r.pos_mult, r.neg_mult};
    ASSERT_TRUE(is_admissible(s, pair));
    EXPECT_TRUE(realizes(p, Couple(s, pair)));
  }
}

// Descartes' rule, mirror and revert semantics over random polynomials with
// nonzero coefficients.
TEST(Action, PolynomialSemantics) {
  RationalSampler rng(2000);
  int checked = 0;
  while (checked < 2000) {
    std::vector<RealRoot> roots;
    std::set<Rational> used;
    const auto n = rng.integer(1, 5);
    for (int k = 0; k < n; ++k) {
      Rational r = rng.uniform(-6, 6, 4);
      if (sgn(r) != 0 && used.insert(r).second) roots.push_back({r, 1});
    }
    std::vector<ComplexPair> pairs;
    for (auto k = rng.integer(0, 2); k > 0; --k) pairs.push_back({rng.uniform(-3, 3, 4), rng.positive(4, 4)});
    Poly p = from_roots(roots, pairs);
    if (p.degree() < 1) continue;
    bool has_zero = false;
    for (const auto& c : p.coeffs()) has_zero |= sgn(c) == 0;
    if (has_zero) continue;
    ++checked;
    const SignPattern s = sign_pattern_of(p);
    const auto r = root_report(p);
    const auto dp = descartes_pair(s);
    ASSERT_LE(r.pos_mult, dp.c);
    ASSERT_EQ((dp.c - r.pos_mult) % 2, 0);
    ASSERT_LE(r.neg_mult, dp.p);
    ASSERT_EQ((dp.p - r.neg_mult) % 2, 0);

    const Poly m = monic(mirror_poly(p));
    ASSERT_EQ(sign_pattern_of(m), mirror(s));
    const auto rm = root_report(m);
    ASSERT_EQ(rm.pos_mult, r.neg_mult);
    ASSERT_EQ(rm.neg_mult, r.pos_mult);

    const Poly v = monic(revert_poly(p));
    ASSERT_EQ(sign_pattern_of(v), revert(s));
    const auto rv = root_report(v);
    ASSERT_EQ(rv.pos_mult, r.pos_mult);
    ASSERT_EQ(rv.neg_mult, r.neg_mult);
  }
}

TEST(Couple, StableHashAndText) {
  Couple c(kSigmaZero, {1, 6});
  EXPECT_EQ(c.text(), "(+----++++-, (1, 6))");
  EXPECT_EQ(c.stable_hash(), Couple(kSigmaZero, {1, 6}).stable_hash());
  EXPECT_NE(c.stable_hash(), Couple(kSigmaZero, {3, 6}).stable_hash());
}

}  // namespace
}  // namespace descartes
