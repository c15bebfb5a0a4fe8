#include <gtest/gtest.h>

#include "lcass/exactalg/poly_io.hpp"
#include "support.hpp"

using namespace lcass;
using lcass::testing::random_monomial;
using lcass::testing::random_poly;
using lcass::testing::Rng;

TEST(Coefficient, EuclidRemainderIsCanonical) {
  for (int a = -30; a <= 30; ++a) {
    for (int b : {-7, -3, -1, 1, 2, 5}) {
      const auto [q, r] = euclid_divrem(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_GE(r, 0);
      EXPECT_LT(r, abs(Integer(b)));
    }
  }
  EXPECT_THROW(euclid_divrem(3, 0), ArgumentError);
}

TEST(Coefficient, GcdLcmBezout) {
  EXPECT_EQ(gcd(12, -18), 6);
  EXPECT_EQ(gcd(0, -5), 5);
  EXPECT_EQ(lcm(-4, 6), 12);
  EXPECT_EQ(lcm(0, 6), 0);
  for (int a = -25; a <= 25; ++a) {
    for (int b = -25; b <= 25; ++b) {
      const auto bz = ext_gcd(a, b);
      EXPECT_EQ(bz.g, gcd(a, b));
      EXPECT_EQ(bz.u * a + bz.v * b, bz.g);
    }
  }
}

TEST(Coefficient, RationalsStayNormalized) {
  const Rational q = Rational(6) / Rational(-4);
  EXPECT_EQ(boost::multiprecision::numerator(q), -3);
  EXPECT_EQ(boost::multiprecision::denominator(q), 2);
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
}

TEST(Coefficient, NoOverflowAtLargeMagnitude) {
  Integer f = 1;
  for (int i = 1; i <= 60; ++i) f *= i;
  EXPECT_EQ(to_string(f), "8320987112741390144276341183223364380754172606361245952449277696409600000000000000");
  EXPECT_EQ(f / f, 1);
}

TEST(Coefficient, IntegerFromRational) {
  EXPECT_EQ(coefficient_from_rational<Integer>(Rational(10, 5)), 2);
  EXPECT_THROW(coefficient_from_rational<Integer>(Rational(1, 2)), DomainError);
  EXPECT_EQ(coefficient_from_rational<Rational>(Rational(1, 2)), Rational(1, 2));
}

TEST(Monomial, LexOrderExamples) {
  EXPECT_GT(Monomial::X(), Monomial::Y(2));
  EXPECT_GT(Monomial::Y(2), Monomial(0, 1, 2));
  const Monomial m(1, 2, 3);
  EXPECT_EQ(m <=> m, std::strong_ordering::equal);
  EXPECT_EQ(monomial_cmp(Monomial::Z(9), Monomial::Y()), std::strong_ordering::less);
}

TEST(Monomial, OrderIsMultiplicativeAndTransitive) {
  Rng rng(7);
  for (int t = 0; t < 2000; ++t) {
    const Monomial a = random_monomial(rng, 4), b = random_monomial(rng, 4), c = random_monomial(rng, 4);
    EXPECT_EQ(a <=> b, (a * c) <=> (b * c));
    if (a < b && b < c) {
      EXPECT_LT(a, c);
    }
    EXPECT_EQ((a < b) + (b < a) + (a == b), 1);
  }
}

TEST(Monomial, DivisionLcmGcd) {
  const Monomial a(2, 1, 0), b(1, 3, 2);
  EXPECT_EQ(lcm(a, b), Monomial(2, 3, 2));
  EXPECT_EQ(gcd(a, b), Monomial(1, 1, 0));
  EXPECT_TRUE(Monomial(1, 1, 0).divides(a));
  EXPECT_EQ(a / Monomial::X(), Monomial(1, 1, 0));
  EXPECT_THROW(a / Monomial::Z(), ArgumentError);
  EXPECT_EQ(Monomial(1, 2, 0).str(), "X*Y^2");
  EXPECT_EQ(Monomial::one().str(), "1");
}

TEST(Polynomial, ArithmeticExamples) {
  const PolyZ y = PolyZ::Y(), z = PolyZ::Z();
  EXPECT_EQ((y + z) * (y - z), PolyZ::Y(2) - PolyZ::Z(2));
  const PolyZ p = 3 * PolyZ::X() * y + z - 7;
  EXPECT_TRUE((p + (-p)).is_zero());
  EXPECT_EQ(z * y, y * z);
}

TEST(Polynomial, LeadingTerm) {
  const PolyZ p = 2 * PolyZ::Y(3) + 5 * PolyZ::Z(4);
  EXPECT_EQ(p.leading_monomial(), Monomial::Y(3));
  EXPECT_EQ(p.leading_coeff(), 2);
  const PolyZ q = PolyZ::X() + PolyZ::Y() + PolyZ::Z();
  EXPECT_EQ(q.leading_monomial(), Monomial::X());
  EXPECT_EQ(q.leading_coeff(), 1);
  EXPECT_THROW(PolyZ().leading_term(), ZeroLeadingTermError);
}

TEST(Polynomial, NoStoredZeros) {
  const PolyZ p = PolyZ::Y() - PolyZ::Y();
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
  EXPECT_TRUE((PolyZ::X() * PolyZ(0)).is_zero());
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_poly<Integer>(rng, 5, 3);
    const auto q = random_poly<Integer>(rng, 5, 3);
    const auto r = random_poly<Integer>(rng, 5, 3);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p * q, q * p);
    if (!p.is_zero() && !q.is_zero()) {
      EXPECT_EQ((p * q).leading_monomial(), p.leading_monomial() * q.leading_monomial());
    }
    // Evaluation is a ring homomorphism.
    EXPECT_EQ((p * q + r).evaluate(2, -3, 5), p.evaluate(2, -3, 5) * q.evaluate(2, -3, 5) + r.evaluate(2, -3, 5));
  }
}

TEST(Polynomial, TermsStrictlyDescending) {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto p = random_poly<Integer>(rng, 6, 3) * random_poly<Integer>(rng, 4, 2);
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_GT(p.terms()[i - 1].mono, p.terms()[i].mono);
    for (const auto& term : p.terms()) EXPECT_NE(term.coeff, 0);
  }
}

TEST(PolyIo, CanonicalRendering) {
  EXPECT_EQ(to_string(2 * PolyZ::Y(3) + 5 * PolyZ::Z(4)), "2*Y^3 + 5*Z^4");
  EXPECT_EQ(to_string(PolyZ::Y(2) - PolyZ::Z(2)), "Y^2 - Z^2");
  EXPECT_EQ(to_string(PolyZ()), "0");
  EXPECT_EQ(to_string(PolyZ(-1)), "-1");
  EXPECT_EQ(to_string(-PolyQ::X() * PolyQ::Y() + Rational(1, 2) * PolyQ::Z()), "-X*Y + 1/2*Z");
}

TEST(PolyIo, ParserAcceptsGrammarVariants) {
  EXPECT_EQ(parse_polynomial<Integer>("2*Y^3 + 5*Z^4"), 2 * PolyZ::Y(3) + 5 * PolyZ::Z(4));
  EXPECT_EQ(parse_polynomial<Integer>("2Y^3+5Z^4"), 2 * PolyZ::Y(3) + 5 * PolyZ::Z(4));
  EXPECT_EQ(parse_polynomial<Integer>(" - X Y + Z "), -PolyZ::X() * PolyZ::Y() + PolyZ::Z());
  EXPECT_EQ(parse_polynomial<Integer>("0"), PolyZ());
  EXPECT_EQ(parse_polynomial<Rational>("1/2*Z"), Rational(1, 2) * PolyQ::Z());
}

TEST(PolyIo, ParserErrors) {
  EXPECT_THROW(parse_polynomial<Integer>("1/2*Z"), DomainError);
  EXPECT_THROW(parse_polynomial<Integer>("2*W"), ParseError);
  EXPECT_THROW(parse_polynomial<Integer>("Y^"), ParseError);
  EXPECT_THROW(parse_polynomial<Integer>(""), ParseError);
  EXPECT_THROW(parse_polynomial<Integer>("Y + + Z"), ParseError);
}

TEST(PolyIo, RoundTripOnRandomPolynomials) {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto p = random_poly<Integer>(rng, 6, 4, 50);
    EXPECT_EQ(parse_polynomial<Integer>(to_string(p)), p);
    const auto q = Rational(1, 3) * to_rational(p) + PolyQ(Rational(-5, 7));
    EXPECT_EQ(parse_polynomial<Rational>(to_string(q)), q);
  }
}
