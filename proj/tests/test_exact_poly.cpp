#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "denumerant/error.hpp"
#include "denumerant/exact_poly.hpp"
#include "support/oracles.hpp"

using namespace denumerant;

namespace {

Rational q(long num, long den = 1) { return Rational(BigInt(num), BigInt(den)); }

Polynomial poly(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }

} // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(q(2, 4).to_string(), "1/2");
  EXPECT_EQ(q(3, -6).to_string(), "-1/2");
  EXPECT_EQ(q(0, -5).to_fraction_string(), "0/1");
  EXPECT_EQ(q(6, 3).to_string(), "2");
  EXPECT_EQ(q(6, 3).to_fraction_string(), "2/1");
  EXPECT_TRUE(q(6, 3).is_integer());
  EXPECT_EQ(q(-4, 6).denominator(), 3);
  EXPECT_EQ(q(-4, 6).numerator(), -2);
  EXPECT_THROW(q(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-36761/5776"), q(-36761, 5776));
  EXPECT_EQ(Rational::parse(" 10/4 "), q(5, 2));
  EXPECT_EQ(Rational::parse("17"), q(17));
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_EQ(Rational::parse_decimal("-0.4277"), q(-4277, 10000));
  EXPECT_EQ(Rational::parse_decimal("13"), q(13));
  EXPECT_THROW(Rational::parse_decimal("1.2.3"), ParseError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q(1, 3) + q(1, 6), q(1, 2));
  EXPECT_EQ(q(1, 3) - q(1, 2), q(-1, 6));
  EXPECT_EQ(q(2, 3) * q(9, 4), q(3, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_THROW(q(1) / q(0), std::domain_error);
  EXPECT_LT(q(-77, 180), q(-7, 48));
  EXPECT_EQ(-q(1, 2), q(-1, 2));
}

TEST(Rational, DecimalTruncates) {
  EXPECT_EQ(q(-77, 180).to_decimal(4), "-0.4277");
  EXPECT_EQ(q(257, 180).to_decimal(4), "1.4277");
  EXPECT_EQ(q(12807, 1805).to_decimal(4), "7.0952");
  EXPECT_EQ(q(563, 396).to_decimal(4), "1.4217");
  EXPECT_EQ(q(-1, 100000).to_decimal(4), "0.0000");
  EXPECT_EQ(q(3).to_decimal(2), "3.00");
  EXPECT_EQ(q(-5, 2).to_decimal(0), "-2");
}

TEST(Rational, DecimalHalfEven) {
  EXPECT_EQ(q(-77, 180).to_decimal(4, Rounding::HalfEven), "-0.4278");
  EXPECT_EQ(q(12807, 1805).to_decimal(4, Rounding::HalfEven), "7.0953");
  EXPECT_EQ(q(1, 8).to_decimal(2, Rounding::HalfEven), "0.12");
  EXPECT_EQ(q(3, 8).to_decimal(2, Rounding::HalfEven), "0.38");
  EXPECT_EQ(q(-5, 2).to_decimal(0, Rounding::HalfEven), "-2");
  EXPECT_EQ(q(-7, 2).to_decimal(0, Rounding::HalfEven), "-4");
  EXPECT_EQ(q(-1, 100000).to_decimal(4, Rounding::HalfEven), "0.0000");
}

TEST(Polynomial, TrimsAndReports) {
  const Polynomial p = poly({q(1), q(0), q(2), q(0), q(0)});
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(7), q(0));
  EXPECT_EQ(p.leading_coefficient(), q(2));
  EXPECT_TRUE(poly({q(0), q(0)}).is_zero());
  EXPECT_EQ(Polynomial().degree(), -1);
  EXPECT_EQ(p, poly({q(1), q(0), q(2)}));
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ(to_string(poly({q(1), q(-1, 228), q(9, 1000), q(1, 7500)})), "1/7500 x^3 + 9/1000 x^2 - 1/228 x + 1");
  EXPECT_EQ(to_string(Polynomial()), "0");
  EXPECT_EQ(to_string(poly({q(0), q(-1)})), "-x");
}

TEST(Polynomial, ConstantHelpers) {
  const Polynomial p = poly({q(-7, 48), q(1, 8), q(1, 48)});
  EXPECT_EQ(constant_term(p), q(-7, 48));
  EXPECT_EQ(drop_constant(p), poly({q(0), q(1, 8), q(1, 48)}));
  EXPECT_EQ(drop_constant(Polynomial::constant(q(5))), Polynomial());
  EXPECT_EQ(constant_term(Polynomial()), q(0));
  EXPECT_EQ(first_difference(p, drop_constant(p)), 0);
  EXPECT_EQ(first_difference(p, p), -1);
  EXPECT_EQ(first_difference(p, poly({q(-7, 48), q(1, 8)})), 2);
}

TEST(Polynomial, Evaluation) {
  const Polynomial p = poly({q(1), q(-1, 228), q(9, 1000), q(1, 7500)});
  EXPECT_EQ(eval_poly(p, q(0)), q(1));
  EXPECT_EQ(p(q(2)), q(1) - q(2, 228) + q(36, 1000) + q(8, 7500));
  EXPECT_EQ(eval_poly(Polynomial(), q(9)), q(0));
}

TEST(Lagrange, Examples) {
  std::vector<InterpolationPoint> line{{q(0), q(1)}, {q(1), q(3)}};
  EXPECT_EQ(lagrange_interpolate(line), poly({q(1), q(2)}));
  std::vector<InterpolationPoint> square{{q(-1), q(1)}, {q(0), q(0)}, {q(1), q(1)}};
  EXPECT_EQ(lagrange_interpolate(square), poly({q(0), q(0), q(1)}));
  std::vector<InterpolationPoint> single{{q(5), q(7, 3)}};
  EXPECT_EQ(lagrange_interpolate(single), Polynomial::constant(q(7, 3)));
  std::vector<InterpolationPoint> zeros{{q(1), q(0)}, {q(2), q(0)}, {q(3), q(0)}};
  EXPECT_TRUE(lagrange_interpolate(zeros).is_zero());
}

TEST(Lagrange, Errors) {
  std::vector<InterpolationPoint> dup{{q(1), q(1)}, {q(2), q(5)}, {q(1), q(3)}};
  EXPECT_THROW(lagrange_interpolate(dup), DuplicateAbscissa);
  EXPECT_THROW(lagrange_interpolate(std::span<const InterpolationPoint>{}), std::invalid_argument);
}

TEST(LagrangeProperty, RecoversRandomPolynomials) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = oracle::random_polynomial(rng, 6);
    const std::size_t count = static_cast<std::size_t>(std::max(p.degree(), 0)) + 1 + rng() % 3;
    std::vector<InterpolationPoint> pts;
    std::vector<long> used;
    while (pts.size() < count) {
      long x = static_cast<long>(rng() % 61) - 30;
      if (std::find(used.begin(), used.end(), x) != used.end()) continue;
      used.push_back(x);
      pts.push_back({q(x), p(q(x))});
    }
    EXPECT_EQ(lagrange_interpolate(pts), p) << to_string(p);
  }
}

TEST(LagrangeProperty, LinearInTheValues) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 1 + rng() % 6;
    std::vector<InterpolationPoint> a, b, sum;
    const Rational lambda = oracle::random_rational(rng);
    for (std::size_t i = 0; i < count; ++i) {
      const Rational x = q(static_cast<long>(3 * i) - 4, 1 + static_cast<long>(i % 2));
      const Rational ya = oracle::random_rational(rng), yb = oracle::random_rational(rng);
      a.push_back({x, ya});
      b.push_back({x, yb});
      sum.push_back({x, ya + lambda * yb});
    }
    Polynomial scaled = lagrange_interpolate(b);
    scaled *= lambda;
    EXPECT_EQ(lagrange_interpolate(sum), lagrange_interpolate(a) + scaled);
  }
}

TEST(PolynomialProperty, AddSubRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = oracle::random_polynomial(rng, 5), b = oracle::random_polynomial(rng, 5);
    EXPECT_EQ(poly_sub(poly_add(a, b), b), a);
    EXPECT_EQ(poly_add(a, b), poly_add(b, a));
    EXPECT_EQ(poly_add(drop_constant(a), Polynomial::constant(constant_term(a))), a);
    const Rational x = oracle::random_rational(rng);
    EXPECT_EQ(eval_poly(poly_add(a, b), x), eval_poly(a, x) + eval_poly(b, x));
  }
}
