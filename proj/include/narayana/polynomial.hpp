#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "narayana/bigint.hpp"

namespace narayana {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index = exponent. Trailing zeros are always stripped, so equal
/// polynomials have identical coefficient vectors; zero has none.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// c * t^k
  static IntPolynomial monomial(const BigInt& c, int k);
  /// sum_k counts[k] t^k
  static IntPolynomial from_counts(std::span<const std::uint64_t> counts);

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  BigInt coefficient(int k) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Smallest k with a nonzero coefficient (-1 for zero).
  int valuation() const noexcept;
  const BigInt& leading() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& scalar);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }

  /// Multiplication by t^k (k >= 0), or exact division by t^{-k} when every
  /// dropped coefficient is zero.
  IntPolynomial shifted(int k) const;
  IntPolynomial derivative() const;

  BigInt evaluate(const BigInt& t) const;
  Rational evaluate(const Rational& t) const;
  /// Sign of p(t) for rational t, computed without forming p(t).
  int sign_at(const Rational& t) const;

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  BigInt content() const;
  /// p / content, with positive leading coefficient.
  IntPolynomial primitive_part() const;

  bool has_nonnegative_coefficients() const noexcept;
  bool is_palindromic() const;

  /// "1 + 3t + t^2"
  std::string to_string() const;
  /// Decimal coefficients, lowest degree first, separated by `sep`. Zero is "0".
  std::string join(const std::string& sep = " ") const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Prints to_string().
std::ostream& operator<<(std::ostream& out, const IntPolynomial& p);

/// prem(a, b) = remainder of |lc(b)|^{deg a - deg b + 1} * a divided by b.
/// The multiplier is positive, so sign information is preserved.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Exact quotient a / b. Throws DomainError if b does not divide a in Z[t].
IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Z[t] with positive leading coefficient (primitive PRS).
/// gcd(0, 0) is zero.
IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive with positive leading coefficient: same roots,
/// each simple. Throws DomainError for the zero polynomial.
IntPolynomial square_free_part(const IntPolynomial& p);

/// Exact binomial coefficient C(n, k) for integer n (any sign) and k >= 0;
/// for n >= 0 this is zero when k > n.
BigInt binomial(long n, long k);

}  // namespace narayana
