#pragma once

#include <optional>
#include <string>
#include <vector>

#include "narayana/bigint.hpp"
#include "narayana/polynomial.hpp"

namespace narayana {

/// An interval endpoint: a rational number or one of the two infinities.
class Bound {
 public:
  static Bound minus_infinity() { return Bound(Kind::minus_infinity, 0); }
  static Bound plus_infinity() { return Bound(Kind::plus_infinity, 0); }
  static Bound at(Rational value) { return Bound(Kind::finite, std::move(value)); }

  bool is_minus_infinity() const noexcept { return kind_ == Kind::minus_infinity; }
  bool is_plus_infinity() const noexcept { return kind_ == Kind::plus_infinity; }
  bool is_finite() const noexcept { return kind_ == Kind::finite; }
  const Rational& value() const noexcept { return value_; }

  friend bool operator<(const Bound& a, const Bound& b);

 private:
  enum class Kind { minus_infinity, finite, plus_infinity };
  Bound(Kind kind, Rational value) : kind_(kind), value_(std::move(value)) {}
  Kind kind_;
  Rational value_;
};

/// Sturm chain p_0 = p, p_1 = p', p_{i+1} = -prem(p_{i-1}, p_i) / content.
/// Each remainder differs from the textbook one by a positive factor, so sign
/// variation counts are unchanged.
class SturmSequence {
 public:
  /// Throws DomainError for the zero polynomial or one with a repeated root.
  explicit SturmSequence(const IntPolynomial& square_free);

  const std::vector<IntPolynomial>& chain() const noexcept { return chain_; }
  /// Sign changes in the chain at `x`, zeros skipped.
  int variations(const Bound& x) const;
  /// Distinct roots in the half-open interval (lo, hi].
  int count(const Bound& lo, const Bound& hi) const;

 private:
  std::vector<IntPolynomial> chain_;
};

/// Distinct real roots of a square-free polynomial in (lo, hi].
/// Throws DomainError if p is zero or not square-free.
int sturm_real_root_count(const IntPolynomial& p, const Bound& lo, const Bound& hi);

struct RealRootCertificate {
  bool real_rooted = false;
  int degree = 0;
  /// Degree of the square-free part = number of distinct complex roots.
  int square_free_degree = 0;
  /// Sturm count over (-inf, +inf) for the square-free part.
  int distinct_real_roots = 0;
  int variations_at_minus_infinity = 0;
  int variations_at_plus_infinity = 0;
  int sturm_chain_length = 0;
};

/// p is real-rooted iff its square-free part has deg-many real roots.
/// Constants are trivially real-rooted; zero throws DomainError.
RealRootCertificate certify_real_rooted(const IntPolynomial& p);
bool is_real_rooted(const IntPolynomial& p);

/// Result of a coefficient-sequence test.
struct CoefficientCheck {
  bool holds = true;
  bool nonnegative_coefficients = true;
  /// First index where the test failed, if any.
  std::optional<int> first_failure;
  /// Set when the coefficients leave the range the test is meant for.
  std::string warning;

  explicit operator bool() const noexcept { return holds; }
};

/// a_i^2 >= a_{i-1} a_{i+1} for every interior i.
CoefficientCheck check_log_concave(const IntPolynomial& p);
/// a_0 <= ... <= a_i >= ... >= a_n for some i.
CoefficientCheck check_unimodal(const IntPolynomial& p);
/// Newton's inequalities for a degree-n polynomial:
///   a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(n-k)),  1 <= k <= n-1,
/// compared exactly after clearing denominators. Vacuous below degree 2.
CoefficientCheck check_newton(const IntPolynomial& p);

bool is_log_concave(const IntPolynomial& p);
bool is_unimodal(const IntPolynomial& p);
bool newton_inequalities_hold(const IntPolynomial& p);

/// No zero coefficient strictly between two nonzero ones.
bool has_no_internal_zeros(const IntPolynomial& p);

struct PolynomialAnalysis {
  RealRootCertificate roots;
  CoefficientCheck newton;
  CoefficientCheck log_concave;
  CoefficientCheck unimodal;
  bool nonnegative_coefficients = true;
  bool no_internal_zeros = true;
};

PolynomialAnalysis analyze(const IntPolynomial& p);

/// Checks real-rooted => Newton => log-concave => unimodal on one instance,
/// each link only where its hypotheses (nonnegative coefficients, and no
/// internal zeros for the last link) apply. Returns the first broken link.
std::optional<std::string> implication_chain_violation(const PolynomialAnalysis& a);

}  // namespace narayana
