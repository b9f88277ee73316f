#include <gtest/gtest.h>

#include <random>

#include "narayana/errors.hpp"
#include "narayana/polynomial.hpp"

using narayana::BigInt;
using narayana::IntPolynomial;
using narayana::Rational;

TEST(Polynomial, NormalizesTrailingZeros) {
  IntPolynomial p{1, 2, 0, 0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ((IntPolynomial{0, 0}).degree(), -1);
  EXPECT_TRUE(IntPolynomial{}.is_zero());
  EXPECT_EQ(IntPolynomial({0, 0, 3}).valuation(), 2);
}

TEST(Polynomial, Arithmetic) {
  IntPolynomial a{1, 1};
  IntPolynomial b{-1, 1};
  EXPECT_EQ(a * a, (IntPolynomial{1, 2, 1}));
  EXPECT_EQ(a * b, (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(a + b, (IntPolynomial{0, 2}));
  EXPECT_EQ(a - a, IntPolynomial{});
  EXPECT_EQ(-a, (IntPolynomial{-1, -1}));
  EXPECT_EQ(a * BigInt(3), (IntPolynomial{3, 3}));
  EXPECT_EQ((IntPolynomial{1, 3, 1}).shifted(2), (IntPolynomial{0, 0, 1, 3, 1}));
  EXPECT_EQ((IntPolynomial{0, 0, 1, 3, 1}).shifted(-2), (IntPolynomial{1, 3, 1}));
  EXPECT_THROW((IntPolynomial{1, 3, 1}).shifted(-1), narayana::DomainError);
  EXPECT_EQ((IntPolynomial{1, 3, 1}).derivative(), (IntPolynomial{3, 2}));
}

TEST(Polynomial, Evaluation) {
  IntPolynomial p{1, 3, 1};
  EXPECT_EQ(p.evaluate(BigInt(1)), 5);
  EXPECT_EQ(p.evaluate(BigInt(-2)), -1);
  EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(11, 4));
  EXPECT_EQ(p.sign_at(Rational(-1)), -1);
  EXPECT_EQ((IntPolynomial{-1, 0, 1}).sign_at(Rational(1)), 0);
}

TEST(Polynomial, ContentAndPrimitivePart) {
  IntPolynomial p{-6, 0, -4};
  EXPECT_EQ(p.content(), 2);
  EXPECT_EQ(p.primitive_part(), (IntPolynomial{3, 0, 2}));
  EXPECT_TRUE((IntPolynomial{1, 22, 113, 190, 113, 22, 1}).is_palindromic());
  EXPECT_FALSE((IntPolynomial{1, 2}).is_palindromic());
}

TEST(Polynomial, Formatting) {
  EXPECT_EQ((IntPolynomial{1, 3, 1}).to_string(), "1 + 3t + t^2");
  EXPECT_EQ((IntPolynomial{0, -1, 0, 2}).to_string(), "-t + 2t^3");
  EXPECT_EQ(IntPolynomial{}.to_string(), "0");
  EXPECT_EQ((IntPolynomial{1, 3, 1}).join(), "1 3 1");
  EXPECT_EQ(IntPolynomial{}.join(","), "0");
}

TEST(Polynomial, FromCounts) {
  const std::vector<std::uint64_t> counts{0, 1, 3, 1, 0};
  EXPECT_EQ(IntPolynomial::from_counts(counts), (IntPolynomial{0, 1, 3, 1}));
}

TEST(Polynomial, GcdAndSquareFreePart) {
  IntPolynomial x_minus_1{-1, 1};
  IntPolynomial x_plus_2{2, 1};
  auto p = x_minus_1 * x_minus_1 * x_plus_2;
  EXPECT_EQ(narayana::primitive_gcd(p, p.derivative()), x_minus_1);
  EXPECT_EQ(narayana::square_free_part(p), x_minus_1 * x_plus_2);
  EXPECT_EQ(narayana::square_free_part(IntPolynomial{5}), IntPolynomial{1});
  EXPECT_THROW(narayana::square_free_part(IntPolynomial{}), narayana::DomainError);
  EXPECT_EQ(narayana::primitive_gcd(IntPolynomial{}, IntPolynomial{}), IntPolynomial{});
  EXPECT_EQ(narayana::primitive_gcd(IntPolynomial{}, IntPolynomial{-4, -2}), (IntPolynomial{2, 1}));
}

TEST(Polynomial, PseudoRemainderKeepsSign) {
  // prem(t^2 + 1, -2t + 1) = |-2|^2 (t^2 + 1) mod (-2t + 1) = 5.
  EXPECT_EQ(narayana::pseudo_remainder(IntPolynomial{1, 0, 1}, IntPolynomial{1, -2}),
            IntPolynomial{5});
}

TEST(Polynomial, ExactQuotient) {
  IntPolynomial a{-1, 0, 1};
  EXPECT_EQ(narayana::exact_quotient(a, IntPolynomial{1, 1}), (IntPolynomial{-1, 1}));
  EXPECT_THROW(narayana::exact_quotient(a, IntPolynomial{1, 2}), narayana::DomainError);
}

TEST(Polynomial, RandomGcdProperties) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(0, 4);
  auto random_poly = [&] {
    std::vector<BigInt> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    if (c.back() == 0) c.back() = 1;
    return IntPolynomial(c);
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_poly();
    auto b = random_poly();
    auto c = random_poly();
    auto g = narayana::primitive_gcd(a * c, b * c);
    // The primitive part of c divides the gcd, and the gcd divides both.
    EXPECT_NO_THROW(narayana::exact_quotient(g, c.primitive_part()));
    EXPECT_NO_THROW(narayana::exact_quotient(a * c, g));
    EXPECT_NO_THROW(narayana::exact_quotient(b * c, g));
    auto sq = narayana::square_free_part(a * a * b);
    EXPECT_NO_THROW(narayana::exact_quotient(a * a * b, sq));
    EXPECT_EQ(narayana::primitive_gcd(sq, sq.derivative()).degree(), 0);
  }
}

TEST(Polynomial, Binomial) {
  EXPECT_EQ(narayana::binomial(5, 2), 10);
  EXPECT_EQ(narayana::binomial(3, 5), 0);
  EXPECT_EQ(narayana::binomial(-1, 3), -1);
  EXPECT_EQ(narayana::binomial(-3, 2), 6);
  EXPECT_EQ(narayana::binomial(7, 0), 1);
}
