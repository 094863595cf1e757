#include "griess/linalg.hpp"
#include "griess/puiseux.hpp"
#include "griess/ratfun.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace griess;

namespace {

RatFun random_ratfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), deg(0, 2);
  auto poly = [&] {
    Poly p;
    for (int i = 0; i < 3; ++i) p += Poly::monomial(coef(rng), deg(rng), deg(rng) % 2);
    return p;
  };
  Poly den = poly();
  while (den.is_zero()) den = poly();
  return RatFun(poly(), den);
}

}  // namespace

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/5")), "-2");
  EXPECT_EQ(to_string(parse_rational("47")), "47");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("0.5"), std::invalid_argument);
}

TEST(RatFun, MonomialProduct) {
  RatFun r = RatFun::c() * RatFun::d();
  EXPECT_EQ(r, RatFun(Poly::monomial(1, 1, 1)));
}

TEST(RatFun, SelfCancellation) {
  RatFun a = parse_ratfun("5c+22");
  EXPECT_TRUE((a - a).is_zero());
}

TEST(RatFun, SecondTraceCoefficientAtMoonshinePoint) {
  RatFun coef = parse_ratfun("-2(5c^2-88d+2cd)") / parse_ratfun("c(5c+22)");
  EXPECT_EQ(coef.eval(24, 196884), Rational(4620));
}

TEST(RatFun, CancelsCommonFactors) {
  RatFun r = parse_ratfun("(c^2-d^2)/(c+d)");
  EXPECT_EQ(r, parse_ratfun("c-d"));
  RatFun s = parse_ratfun("(2c d + 4d)/(6c^2+12c)");
  EXPECT_EQ(s.num(), parse_ratfun("d/3").num());
  EXPECT_EQ(s.den(), Poly::c());
}

TEST(RatFun, DenominatorIsPrimitiveWithPositiveLead) {
  RatFun r = parse_ratfun("1/(-4c/3 - 2)");
  EXPECT_EQ(r.den(), parse_ratfun("2c+3").num());
  EXPECT_EQ(r.num(), Poly(Rational(-3, 2)));
}

TEST(RatFun, DivisionByZeroThrows) {
  EXPECT_THROW(RatFun(1) / RatFun(), std::domain_error);
  EXPECT_THROW(parse_ratfun("1/(c-c)"), std::domain_error);
}

TEST(RatFun, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 40; ++trial) {
    RatFun a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(RatFun, NormalizationIsIdempotent) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    RatFun a = random_ratfun(rng);
    RatFun again(a.num(), a.den());
    EXPECT_EQ(a, again);
  }
}

TEST(Poly, BivariateGcd) {
  Poly f = parse_ratfun("(c+d)(2c-1)(d-3)").num();
  Poly g = parse_ratfun("(c+d)(d-3)(c+5)").num();
  EXPECT_EQ(gcd(f, g), parse_ratfun("(c+d)(d-3)").num().primitive());
}

TEST(Poly, RadicalOfSquares) {
  Poly p = parse_ratfun("c^3(5c+22)^2").num();
  EXPECT_EQ(radical_c(p), parse_ratfun("c(5c+22)").num());
}

TEST(Series, ProductOfBinomials) {
  auto one_plus = PuiseuxSeries::from_coefficients({1, 1}, std::nullopt);
  auto one_minus = PuiseuxSeries::from_coefficients({1, -1}, std::nullopt);
  auto p = (one_plus * one_minus).truncated(3);
  EXPECT_EQ(p.coeff(0), 1);
  EXPECT_EQ(p.coeff(1), 0);
  EXPECT_EQ(p.coeff(2), -1);
  EXPECT_THROW(p.coeff(3), std::out_of_range);
}

TEST(Series, FractionalExponentsCancel) {
  auto a = PuiseuxSeries::monomial(1, Rational(1, 16));
  auto b = PuiseuxSeries::monomial(1, Rational(-1, 16));
  auto p = a * b;
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coeff(0), 1);
}

TEST(Series, QdqOnMonomials) {
  EXPECT_TRUE(PuiseuxSeries::constant(1).qdq().is_zero());
  auto h = PuiseuxSeries::monomial(1, Rational(1, 2)).qdq();
  EXPECT_EQ(h.coeff(Rational(1, 2)), Rational(1, 2));
}

TEST(Series, InverseOfGeometric) {
  auto s = PuiseuxSeries::from_coefficients({1, -1}, Rational(10));
  auto inv = s.inverse();
  for (int k = 0; k < 10; ++k) EXPECT_EQ(inv.coeff(k), 1);
  auto shifted = PuiseuxSeries::from_coefficients({0, 2, 1}, Rational(8));
  auto i2 = shifted.inverse();
  EXPECT_EQ(*i2.cutoff(), Rational(6));
  EXPECT_EQ(i2.coeff(-1), Rational(1, 2));
  EXPECT_EQ(i2.coeff(0), Rational(-1, 4));
  EXPECT_THROW(PuiseuxSeries(48).truncated(5).inverse(), std::domain_error);
}

TEST(Series, LeibnizRule) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> fa, fb;
    for (int i = 0; i < 8; ++i) {
      fa.push_back(coef(rng));
      fb.push_back(coef(rng));
    }
    auto f = PuiseuxSeries::from_coefficients(fa, Rational(8)).shifted(Rational(1, 16));
    auto g = PuiseuxSeries::from_coefficients(fb, Rational(8)).shifted(Rational(-1, 2));
    EXPECT_TRUE((f * g).qdq().equals(f.qdq() * g + f * g.qdq()));
  }
}

TEST(Series, TruncationIsTracked) {
  auto a = PuiseuxSeries::from_coefficients({1, 2, 3}, Rational(3));
  auto b = PuiseuxSeries::from_coefficients({1, 1, 1, 1, 1}, Rational(5));
  auto s = a + b;
  EXPECT_EQ(*s.cutoff(), Rational(3));
  auto p = a.shifted(1) * b;
  EXPECT_EQ(*p.cutoff(), Rational(4));
}

TEST(LinAlg, BareissDeterminant) {
  Matrix<Poly> m = {{Poly::c(), Poly(2)}, {Poly(3), Poly::c()}};
  EXPECT_EQ(bareiss_determinant(m), parse_ratfun("c^2-6").num());
}

TEST(LinAlg, FractionFreeSolveOverdetermined) {
  // x + y = 1/c, c x - y = 0, 2x + 2y = 2/c
  Matrix<Poly> a = {{1, 1}, {Poly::c(), -1}, {2, 2}};
  std::vector<RatFun> b = {parse_ratfun("1/c"), RatFun(), parse_ratfun("2/c")};
  auto sol = solve_fraction_free(a, b);
  EXPECT_EQ(sol.x[0], parse_ratfun("1/(c(c+1))"));
  EXPECT_EQ(sol.x[1], parse_ratfun("1/(c+1)"));
  b[2] = RatFun(1);
  EXPECT_THROW(solve_fraction_free(a, b), std::runtime_error);
}
