#include <gtest/gtest.h>

#include <random>

#include "ptutte/bipoly.hpp"
#include "ptutte/rational.hpp"

using namespace ptutte;

namespace {

const char* kP5 = "2/15*x^3 + 4/15*x^2 + 1/3*x*y + 2/15*y^2 + 1/15*x + 1/15*y";

BiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 3), num(-6, 6), den(1, 5), terms(0, 5);
  BiPoly p;
  for (int k = terms(rng); k > 0; --k) p.add_term({deg(rng), deg(rng)}, make_rational(num(rng), den(rng)));
  return p;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return make_rational(num(rng), den(rng));
}

}  // namespace

TEST(Rational, CanonicalForm) {
  auto r = make_rational(6, -4);
  EXPECT_EQ(to_string(r), "-3/2");
  EXPECT_EQ(to_string(make_rational(4, 2)), "2");
  EXPECT_THROW(make_rational(1, 0), Error);
}

TEST(Rational, ParseRoundTrip) {
  EXPECT_EQ(parse_rational("17823568079808010514820609/519645565199326904320"),
            make_rational(Integer("17823568079808010514820609"), Integer("519645565199326904320")));
  EXPECT_EQ(parse_rational("2.9243"), make_rational(29243, 10000));
  EXPECT_EQ(parse_rational("-5"), Rational(-5));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) {
    Rational r = random_rational(rng);
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Rational, Decimal) {
  EXPECT_EQ(to_decimal(make_rational(473, 300), 4), "1.5767");
  EXPECT_EQ(to_decimal(make_rational(473, 300), 4, Rounding::Truncate), "1.5766");
  EXPECT_EQ(to_decimal(Rational(1), 4), "1.0000");
  EXPECT_EQ(to_decimal(make_rational(-1, 3), 2), "-0.33");
}

TEST(BiPoly, AddMergesAndPrunes) {
  EXPECT_EQ(BiPoly::x() + BiPoly::y(), BiPoly::parse("x + y"));
  auto p = BiPoly::parse(kP5);
  EXPECT_EQ(p + BiPoly(), p);
  auto third = BiPoly::monomial(make_rational(1, 3), 1, 0), two_thirds = BiPoly::monomial(make_rational(2, 3), 1, 0);
  EXPECT_EQ(third + two_thirds, BiPoly::x());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).to_string(), "0");
}

TEST(BiPoly, Multiply) {
  BiPoly k2 = (BiPoly::x() + BiPoly::y()) * make_rational(1, 2);
  EXPECT_EQ(k2 * k2, BiPoly::parse("1/4*x^2 + 1/2*x*y + 1/4*y^2"));
  auto p = BiPoly::parse(kP5);
  EXPECT_EQ(p * BiPoly(Rational(1)), p);
  BiPoly q = BiPoly::parse("1/3*x^2 + 1/3*x + 1/3*y");
  EXPECT_EQ(q * Rational(3), q + q + q);
  EXPECT_EQ(q * Rational(3), BiPoly::parse("x^2 + x + y"));
}

TEST(BiPoly, EvaluateAndCoefficients) {
  auto p = BiPoly::parse(kP5);
  EXPECT_EQ(p.eval(1, 1), Rational(1));
  EXPECT_EQ(p.eval(2, 2), make_rational(64, 15));
  EXPECT_EQ(p.eval(2, 0), make_rational(34, 15));
  EXPECT_EQ(p.coeff(3, 0), make_rational(2, 15));
  EXPECT_EQ(p.coeff(1, 1), make_rational(1, 3));
  EXPECT_EQ(p.coeff(5, 5), Rational(0));
}

TEST(BiPoly, TextFormatRoundTrip) {
  auto p = BiPoly::parse(kP5);
  EXPECT_EQ(p.to_string(), kP5);
  EXPECT_EQ(BiPoly::parse("-x + 3").to_string(), "-x + 3");
  EXPECT_EQ(BiPoly::parse("x*y^2*x").coeff(2, 2), Rational(1));
  EXPECT_THROW(BiPoly::parse("x^"), Error);
  EXPECT_THROW(BiPoly::parse("x + + y"), Error);
  EXPECT_THROW(BiPoly::parse(""), Error);
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    auto q = random_poly(rng);
    EXPECT_EQ(BiPoly::parse(q.to_string()), q) << q.to_string();
  }
}

TEST(BiPoly, SwapAndPower) {
  auto p = BiPoly::parse(kP5);
  EXPECT_EQ(p.swapped().coeff(0, 3), make_rational(2, 15));
  EXPECT_EQ(p.swapped().swapped(), p);
  EXPECT_EQ(pow(BiPoly::x() + BiPoly::y(), 2), BiPoly::parse("x^2 + 2*x*y + y^2"));
  EXPECT_EQ(pow(p, 0), BiPoly(Rational(1)));
}

TEST(BiPoly, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    Rational x = random_rational(rng), y = random_rational(rng);
    EXPECT_EQ((p * q).eval(x, y), p.eval(x, y) * q.eval(x, y));
    const BiPoly sum = p * q + r;
    for (const auto& [m, c] : sum.terms()) EXPECT_NE(c, 0);
  }
}
