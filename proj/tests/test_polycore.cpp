#include "descartes/bipoly.hpp"
#include "descartes/poly.hpp"
#include "descartes/rootcount.hpp"
#include "descartes/sampling.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

namespace descartes {
namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_text(q(6, 4)), "3/2");
  EXPECT_EQ(to_text(q(-4, 2)), "-2");
  EXPECT_EQ(to_text(q(0, 5)), "0");
  EXPECT_EQ(parse_rational("10/-1"), q(-10)) << "sign on the denominator is tolerated";
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("-3/6"), q(-1, 2));
  EXPECT_EQ(parse_rational("0.125"), q(1, 8));
  EXPECT_EQ(parse_rational("-2.5"), q(-5, 2));
  EXPECT_EQ(parse_rational(" 7 "), q(7));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, TruncatedDecimal) {
  EXPECT_EQ(to_decimal(q(67245, 10000), 3), "6.724");
  EXPECT_EQ(to_decimal(q(-256, 100), 1), "-2.5");
  EXPECT_EQ(to_decimal(q(1, 8), 2), "0.12");
}

TEST(PolyAdd, Cancellation) {
  EXPECT_EQ(add(Poly{1, 1}, Poly{-1, 1}), (Poly{0, 2}));
}

TEST(PolyAdd, Identity) {
  Poly p{3, -1, 2};
  EXPECT_EQ(add(p, Poly{}), p);
}

TEST(PolyAdd, DegreeDrop) {
  Poly r = add(Poly{-1, 0, 1}, Poly{0, 0, -1});
  EXPECT_EQ(r, Poly{-1});
  EXPECT_EQ(r.degree(), 0);
}

TEST(PolyMul, RecipeCubic) {
  // (x + 2)(x^2 - 4x + 5)
  EXPECT_EQ(mul(Poly{2, 1}, Poly{5, -4, 1}), Poly::from_leading({1, -2, -3, 10}));
}

TEST(PolyMul, IdentityAndZero) {
  Poly p{1, 2, 3};
  EXPECT_EQ(mul(p, Poly{1}), p);
  EXPECT_TRUE(mul(p, Poly{}).is_zero());
}

TEST(PolyMul, MatchesSchoolbookOracle) {
  // (x+1)^2 (x-2) expanded one factor at a time.
  oracle::Coeffs expected = oracle::expand_linear_factors({-1, -1, 2});
  EXPECT_EQ(mul(mul(Poly{1, 1}, Poly{1, 1}), Poly{-2, 1}), Poly(expected));
  EXPECT_EQ(Poly(expected), Poly::from_leading({1, 0, -3, -2}));
}

TEST(PolyMul, RandomAlgebraicLaws) {
  RationalSampler rng(11);
  auto random_poly = [&] {
    std::vector<Rational> c;
    const auto deg = rng.integer(0, 6);
    for (int i = 0; i <= deg; ++i) c.push_back(rng.uniform(-4, 4, 3));
    c.back() = rng.positive(3, 2);
    return Poly(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly();
    Poly b = random_poly();
    Poly c = random_poly();
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, Poly(oracle::multiply(a.coeffs(), b.coeffs())));
  }
}

TEST(FromRoots, RealRootsOnly) {
  std::vector<RealRoot> roots{{-1, 2}, {2, 1}};
  EXPECT_EQ(from_roots(roots, {}), Poly::from_leading({1, 0, -3, -2}));
}

TEST(FromRoots, ComplexPairSuppliedAsImagSquared) {
  std::vector<ComplexPair> pairs{{q(1, 2), q(3, 4)}};
  EXPECT_EQ(from_roots({}, pairs), Poly::from_leading({1, -1, 1}));
}

TEST(FromRoots, HighMultiplicityShape) {
  std::vector<RealRoot> roots{{-1, 6}, {1, 3}};
  EXPECT_EQ(from_roots(roots, {}), pow(Poly{1, 1}, 6) * pow(Poly{-1, 1}, 3));
}

TEST(FromRoots, RejectsDegeneratePairAndLead) {
  std::vector<ComplexPair> bad{{1, 0}};
  EXPECT_THROW(from_roots({}, bad), std::invalid_argument);
  std::vector<ComplexPair> negative{{1, -1}};
  EXPECT_THROW(from_roots({}, negative), std::invalid_argument);
  EXPECT_THROW(from_roots({}, {}, 0), std::invalid_argument);
}

TEST(FromRoots, LeadAndDegree) {
  std::vector<RealRoot> roots{{q(1, 3), 2}};
  std::vector<ComplexPair> pairs{{-1, 2}, {0, 1}};
  Poly p = from_roots(roots, pairs, q(-5, 2));
  EXPECT_EQ(p.degree(), 6);
  EXPECT_EQ(p.leading(), q(-5, 2));
}

TEST(Derivative, Basics) {
  EXPECT_EQ(derivative(Poly::from_leading({1, 0, -3, -2})), Poly::from_leading({3, 0, -3}));
  EXPECT_TRUE(derivative(Poly{7}).is_zero());
}

TEST(Derivative, PowerOfLinearAgainstBinomials) {
  // d/dx (x+1)^6 = 6 (x+1)^5, compared coefficientwise with binomials.
  Poly d = derivative(pow(Poly{1, 1}, 6));
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(d.coeff(k), 6 * oracle::binomial(5, k)) << "k=" << k;
}

TEST(SquareFree, SimpleCases) {
  Poly p = pow(Poly{-1, 1}, 2) * Poly{2, 1};
  auto f = square_free_decompose(p);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].factor, (Poly{2, 1}));
  EXPECT_EQ(f[0].multiplicity, 1);
  EXPECT_EQ(f[1].factor, (Poly{-1, 1}));
  EXPECT_EQ(f[1].multiplicity, 2);
}

TEST(SquareFree, AlreadySquareFree) {
  Poly p = Poly::from_leading({3, 0, -3, 6});
  auto f = square_free_decompose(p);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].factor, monic(p));
  EXPECT_EQ(f[0].multiplicity, 1);
}

TEST(SquareFree, ReExpandsToInput) {
  Poly p = pow(Poly{1, 1}, 6) * pow(Poly{-2, 1}, 3);
  auto f = square_free_decompose(p);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].factor, (Poly{-2, 1}));
  EXPECT_EQ(f[0].multiplicity, 3);
  EXPECT_EQ(f[1].factor, (Poly{1, 1}));
  EXPECT_EQ(f[1].multiplicity, 6);
  Poly back = Poly{1};
  for (const auto& [factor, m] : f) back = back * pow(factor, static_cast<unsigned>(m));
  EXPECT_EQ(back, p);
}

TEST(SquareFree, RejectsZero) { EXPECT_THROW(square_free_decompose(Poly{}), std::invalid_argument); }

// from_roots followed by square_free_decompose recovers the multiplicity
// profile: the multiset of multiplicities of distinct rational roots.
TEST(SquareFree, RoundTripMultiplicityProfile) {
  RationalSampler rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<RealRoot> roots;
    std::map<Rational, int> expected;
    const auto distinct = rng.integer(1, 4);
    while (static_cast<int>(roots.size()) < distinct) {
      Rational r = rng.uniform(-5, 5, 4);
      if (expected.count(r)) continue;
      const auto m = static_cast<int>(rng.integer(1, 3));
      roots.push_back({r, m});
      expected[r] = m;
    }
    std::vector<ComplexPair> pairs;
    if (rng.coin()) pairs.push_back({rng.uniform(-3, 3, 2), rng.positive(4, 4)});
    Poly p = from_roots(roots, pairs, rng.positive(5, 3));
    std::map<int, int> want;  // multiplicity -> total degree contributed
    for (const auto& [r, m] : expected) want[m] += 1;
    if (!pairs.empty()) want[1] += 2;
    std::map<int, int> got;
    for (const auto& [factor, m] : square_free_decompose(p)) {
      EXPECT_TRUE(is_square_free(factor));
      got[m] += factor.degree();
    }
    ASSERT_EQ(got, want) << to_string(p);
  }
}

TEST(ScaleCompose, Examples) {
  EXPECT_EQ(scale_compose(Poly{-1, 1}, q(1, 2)), (Poly{q(-1, 2), 1}));
  Poly p = Poly::from_leading({1, -1, 1});
  EXPECT_EQ(scale_compose(p, 1), p);
  EXPECT_EQ(scale_compose(p, q(1, 3)), Poly::from_leading({1, q(-1, 3), q(1, 9)}));
  // direct substitution: (1/3)^2 * ((3x)^2 - 3x + 1)
  Poly direct = compose(p, Poly{0, 3}) * q(1, 9);
  EXPECT_EQ(scale_compose(p, q(1, 3)), direct);
}

TEST(ScaleCompose, Composition) {
  RationalSampler rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c;
    for (int i = 0; i <= 5; ++i) c.push_back(rng.uniform(-3, 3, 5));
    c.back() = 1;
    Poly p(c);
    Rational a = rng.positive(3, 7);
    Rational b = rng.positive(3, 5);
    EXPECT_EQ(scale_compose(scale_compose(p, a), b), scale_compose(p, a * b));
  }
}

TEST(ScaleCompose, RejectsNonPositive) {
  EXPECT_THROW(scale_compose(Poly{1, 1}, 0), std::invalid_argument);
  EXPECT_THROW(scale_compose(Poly{1, 1}, -1), std::invalid_argument);
}

TEST(Division, GcdAndDivMod) {
  Poly a = Poly{-1, 1} * Poly{2, 1} * Poly{3, 1};
  Poly b = Poly{-1, 1} * Poly{5, 1};
  EXPECT_EQ(gcd(a, b), (Poly{-1, 1}));
  auto [quo, rem] = divmod(a, b);
  EXPECT_EQ(quo * b + rem, a);
  EXPECT_LT(rem.degree(), b.degree());
  EXPECT_THROW(divmod(a, Poly{}), std::domain_error);
  EXPECT_THROW(exact_div(a, Poly{7, 1}), std::domain_error);
}

TEST(Interpolate, RecoversCubic) {
  Poly p = Poly::from_leading({q(2, 3), -1, 0, 5});
  std::vector<Rational> xs{0, 1, 2, 3, 7};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(p(x));
  EXPECT_EQ(interpolate(xs, ys), p);
}

TEST(TextForm, LeadingFirst) {
  Poly p = Poly::from_leading({1, q(-1, 2), 0, 3});
  auto texts = to_texts(p);
  EXPECT_EQ(texts, (std::vector<std::string>{"1", "-1/2", "0", "3"}));
  EXPECT_EQ(from_texts(texts), p);
  EXPECT_EQ(to_string(Poly::from_leading({1, -2, -3, 10})), "x^3 - 2*x^2 - 3*x + 10");
}

TEST(Resultant, LinearEvaluation) {
  // Res(t^2 - 1, t - 2) = (t^2 - 1) at t = 2.
  BiPoly f = BiPoly::in_main(Poly{-1, 0, 1});
  BiPoly g = BiPoly::in_main(Poly{-2, 1});
  EXPECT_EQ(resultant(f, g), Poly{3});
}

TEST(Resultant, RejectsZero) {
  EXPECT_THROW(resultant(BiPoly{}, BiPoly::in_main(Poly{1, 1})), std::invalid_argument);
}

TEST(Resultant, MatchesPointwiseEliminationOracle) {
  // Random bivariate pairs: Res in t then evaluated at w0 must equal the
  // Sylvester determinant of the specializations (degree stays fixed
  // because the leading coefficients are constants).
  RationalSampler rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    auto random_bi = [&](int deg) {
      std::vector<Poly> c;
      for (int i = 0; i < deg; ++i) {
        std::vector<Rational> w;
        for (int j = 0; j <= 2; ++j) w.push_back(rng.uniform(-3, 3, 2));
        c.emplace_back(w);
      }
      c.push_back(Poly{rng.positive(2, 1)});
      return BiPoly(c);
    };
    BiPoly f = random_bi(static_cast<int>(rng.integer(1, 4)));
    BiPoly g = random_bi(static_cast<int>(rng.integer(1, 4)));
    Poly r = resultant(f, g);
    for (int k = 0; k < 3; ++k) {
      Rational w0 = rng.uniform(-4, 4, 3);
      EXPECT_EQ(r(w0), oracle::sylvester_resultant(f.at_secondary(w0).coeffs(), g.at_secondary(w0).coeffs()));
    }
  }
}

TEST(Resultant, VanishesOnCommonRoot) {
  // f = (t - a(w)) f1, g = (t - a(w)) g1 share the root t = a(w).
  BiPoly alpha = BiPoly::from_terms({{1, 1, 0}, {-1, 0, 1}, {-2, 0, 0}});  // t - w - 2
  BiPoly f1 = BiPoly::from_terms({{1, 2, 0}, {3, 0, 2}});
  BiPoly g1 = BiPoly::from_terms({{1, 1, 0}, {-1, 0, 3}});
  EXPECT_TRUE(resultant(alpha * f1, alpha * g1).is_zero());
  // Without the shared factor: Res(f1, g1) = f1(w^3) = w^6 + 3w^2.
  EXPECT_EQ(resultant(f1, g1), (Poly{0, 0, 3, 0, 0, 0, 1}));
}

TEST(Resultant, BareissMatchesRationalElimination) {
  std::vector<std::vector<Rational>> m{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
  std::vector<std::vector<Poly>> mp;
  for (const auto& row : m) {
    std::vector<Poly> r;
    for (const auto& x : row) r.push_back(Poly{x});
    mp.push_back(r);
  }
  EXPECT_EQ(bareiss_determinant(mp), Poly{oracle::determinant(m)});
}

TEST(BiPoly, SwapAndDerivatives) {
  BiPoly f = BiPoly::from_terms({{2, 2, 1}, {-1, 0, 3}, {5, 1, 0}});  // 2t^2 w - w^3 + 5t
  BiPoly s = swap_variables(f);
  EXPECT_EQ(s(3, 2), f(2, 3));
  EXPECT_EQ(derivative_main(f), BiPoly::from_terms({{4, 1, 1}, {5, 0, 0}}));
  EXPECT_EQ(derivative_secondary(f), BiPoly::from_terms({{2, 2, 0}, {-3, 0, 2}}));
  EXPECT_EQ(f.at_main(2), (Poly{10, 8, 0, -1}));
}

TEST(BiPoly, InterpolationIsExact) {
  BiPoly f = BiPoly::from_terms({{q(3, 2), 3, 1}, {-7, 0, 4}, {1, 2, 2}, {q(-1, 5), 0, 0}});
  BiPoly g = interpolate_bivariate([&](const Rational& t, const Rational& w) { return f(t, w); }, 3, 4);
  EXPECT_EQ(g, f);
}

}  // namespace
}  // namespace descartes
