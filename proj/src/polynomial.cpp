#include "narayana/polynomial.hpp"

#include <algorithm>
#include <utility>

#include "narayana/errors.hpp"

namespace narayana {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int k) {
  if (k < 0) throw DomainError("monomial exponent must be nonnegative");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::from_counts(std::span<const std::uint64_t> counts) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    BigInt value;
    mpz_import(value.get_mpz_t(), 1, -1, sizeof c, 0, 0, &c);
    coeffs.push_back(std::move(value));
  }
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

int IntPolynomial::valuation() const noexcept {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (sgn(coeffs_[k]) != 0) return static_cast<int>(k);
  }
  return -1;
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigInt> out;
  if (k > 0) {
    out.assign(static_cast<std::size_t>(k), BigInt(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  } else {
    const auto drop = static_cast<std::size_t>(-k);
    for (std::size_t i = 0; i < std::min(drop, coeffs_.size()); ++i) {
      if (sgn(coeffs_[i]) != 0) throw DomainError("negative shift would need a Laurent term");
    }
    if (drop < coeffs_.size()) out.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(drop), coeffs_.end());
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  acc.canonicalize();
  return acc;
}

int IntPolynomial::sign_at(const Rational& t) const {
  // q^deg * p(a/q) = sum c_k a^k q^{deg-k}, and q > 0 in canonical form.
  const BigInt& a = t.get_num();
  const BigInt& q = t.get_den();
  BigInt acc = 0;
  BigInt q_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * a + *it * q_power;
    q_power *= q;
  }
  return sgn(acc);
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  if (sgn(leading()) < 0) g = -g;
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

bool IntPolynomial::has_nonnegative_coefficients() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) >= 0; });
}

bool IntPolynomial::is_palindromic() const {
  // Palindromic as a coefficient window from the valuation to the degree.
  if (is_zero()) return true;
  std::size_t lo = static_cast<std::size_t>(valuation());
  std::size_t hi = coeffs_.size() - 1;
  while (lo < hi) {
    if (coeffs_[lo] != coeffs_[hi]) return false;
    ++lo;
    --hi;
  }
  return true;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    BigInt magnitude = abs(c);
    if (s.empty()) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) s += magnitude.get_str();
    if (k >= 1) s += "t";
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

std::string IntPolynomial::join(const std::string& sep) const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) s += sep;
    s += coeffs_[k].get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& out, const IntPolynomial& p) { return out << p.to_string(); }

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  const BigInt lc = abs(b.leading());
  const bool negative_lc = sgn(b.leading()) < 0;
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  // One multiplication by |lc| per step: |lc|^{deg a - deg b + 1} in total.
  for (int top = a.degree(); top >= db; --top) {
    const BigInt lead = r[static_cast<std::size_t>(top)];
    // r <- |lc| * r - sign(lc) * lead * t^{top-db} * b, which zeroes index `top`.
    for (auto& c : r) c *= lc;
    const BigInt factor = negative_lc ? BigInt(-lead) : lead;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(top - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("divisor does not divide dividend");
  std::vector<BigInt> r = a.coefficients();
  const int db = b.degree();
  std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int top = a.degree(); top >= db; --top) {
    const BigInt& lead = r[static_cast<std::size_t>(top)];
    if (sgn(lead) == 0) continue;
    if (!mpz_divisible_p(lead.get_mpz_t(), b.leading().get_mpz_t())) {
      throw DomainError("divisor does not divide dividend over the integers");
    }
    BigInt factor = lead / b.leading();
    q[static_cast<std::size_t>(top - db)] = factor;
    for (int j = 0; j <= db; ++j) {
      r[static_cast<std::size_t>(top - db + j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  for (const auto& c : r) {
    if (sgn(c) != 0) throw DomainError("divisor does not divide dividend");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial primitive_gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() == 0) return IntPolynomial{1};
  const IntPolynomial g = primitive_gcd(p, p.derivative());
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  BigInt r;
  if (n >= 0) {
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  } else {
    // C(n, k) = (-1)^k C(k - n - 1, k) for negative n.
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - n - 1), static_cast<unsigned long>(k));
    if (k % 2 != 0) r = -r;
  }
  return r;
}

}  // namespace narayana
