#include "narayana/analysis.hpp"

#include "narayana/errors.hpp"

namespace narayana {

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  return a.is_finite() && a.value_ < b.value_;
}

SturmSequence::SturmSequence(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  chain_.push_back(square_free);
  if (square_free.degree() == 0) return;
  chain_.push_back(square_free.derivative());
  while (true) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // Negate, then strip the (positive) content; never flip the sign.
    r *= BigInt(-1);
    chain_.push_back(exact_quotient(r, IntPolynomial::constant(r.content())));
  }
  if (chain_.back().degree() > 0) {
    throw DomainError("Sturm counting needs a square-free polynomial; gcd(p, p') has degree " +
                      std::to_string(chain_.back().degree()));
  }
}

namespace {

int sign_at(const IntPolynomial& p, const Bound& x) {
  if (x.is_finite()) return p.sign_at(x.value());
  const int lead = sgn(p.leading());
  if (x.is_plus_infinity()) return lead;
  return p.degree() % 2 == 0 ? lead : -lead;
}

}  // namespace

int SturmSequence::variations(const Bound& x) const {
  int changes = 0;
  int previous = 0;
  for (const auto& p : chain_) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  return changes;
}

int SturmSequence::count(const Bound& lo, const Bound& hi) const {
  if (hi < lo) throw DomainError("empty interval: lower bound exceeds upper bound");
  if (!(lo < hi)) return 0;
  return variations(lo) - variations(hi);
}

int sturm_real_root_count(const IntPolynomial& p, const Bound& lo, const Bound& hi) {
  return SturmSequence(p).count(lo, hi);
}

RealRootCertificate certify_real_rooted(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("real-rootedness of the zero polynomial");
  RealRootCertificate cert;
  cert.degree = p.degree();
  if (p.degree() == 0) {
    cert.real_rooted = true;
    cert.sturm_chain_length = 1;
    return cert;
  }
  const IntPolynomial q = square_free_part(p);
  const SturmSequence sturm(q);
  cert.square_free_degree = q.degree();
  cert.variations_at_minus_infinity = sturm.variations(Bound::minus_infinity());
  cert.variations_at_plus_infinity = sturm.variations(Bound::plus_infinity());
  cert.distinct_real_roots = cert.variations_at_minus_infinity - cert.variations_at_plus_infinity;
  cert.sturm_chain_length = static_cast<int>(sturm.chain().size());
  cert.real_rooted = cert.distinct_real_roots == cert.square_free_degree;
  return cert;
}

bool is_real_rooted(const IntPolynomial& p) { return certify_real_rooted(p).real_rooted; }

namespace {

CoefficientCheck start_check(const IntPolynomial& p, const char* name) {
  CoefficientCheck check;
  check.nonnegative_coefficients = p.has_nonnegative_coefficients();
  if (!check.nonnegative_coefficients) {
    check.warning = std::string("negative coefficients: ") + name +
                    " does not follow from real-rootedness here";
  }
  return check;
}

void fail_at(CoefficientCheck& check, int index) {
  if (check.holds) check.first_failure = index;
  check.holds = false;
}

}  // namespace

CoefficientCheck check_log_concave(const IntPolynomial& p) {
  CoefficientCheck check = start_check(p, "log-concavity");
  const auto& a = p.coefficients();
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) {
      fail_at(check, static_cast<int>(i));
      break;
    }
  }
  return check;
}

CoefficientCheck check_unimodal(const IntPolynomial& p) {
  CoefficientCheck check = start_check(p, "unimodality");
  const auto& a = p.coefficients();
  std::size_t i = 1;
  while (i < a.size() && a[i - 1] <= a[i]) ++i;
  while (i < a.size() && a[i - 1] >= a[i]) ++i;
  if (i < a.size()) fail_at(check, static_cast<int>(i));
  return check;
}

CoefficientCheck check_newton(const IntPolynomial& p) {
  CoefficientCheck check = start_check(p, "Newton's inequality");
  const int n = p.degree();
  const auto& a = p.coefficients();
  for (int k = 1; k <= n - 1; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    const BigInt lhs = a[uk] * a[uk] * k * (n - k);
    const BigInt rhs = a[uk - 1] * a[uk + 1] * (k + 1) * (n - k + 1);
    if (lhs < rhs) {
      fail_at(check, k);
      break;
    }
  }
  return check;
}

bool is_log_concave(const IntPolynomial& p) { return check_log_concave(p).holds; }
bool is_unimodal(const IntPolynomial& p) { return check_unimodal(p).holds; }
bool newton_inequalities_hold(const IntPolynomial& p) { return check_newton(p).holds; }

bool has_no_internal_zeros(const IntPolynomial& p) {
  if (p.is_zero()) return true;
  for (int k = p.valuation(); k <= p.degree(); ++k) {
    if (sgn(p.coefficients()[static_cast<std::size_t>(k)]) == 0) return false;
  }
  return true;
}

PolynomialAnalysis analyze(const IntPolynomial& p) {
  PolynomialAnalysis a;
  a.roots = certify_real_rooted(p);
  a.newton = check_newton(p);
  a.log_concave = check_log_concave(p);
  a.unimodal = check_unimodal(p);
  a.nonnegative_coefficients = p.has_nonnegative_coefficients();
  a.no_internal_zeros = has_no_internal_zeros(p);
  return a;
}

std::optional<std::string> implication_chain_violation(const PolynomialAnalysis& a) {
  if (!a.nonnegative_coefficients) return std::nullopt;
  if (a.roots.real_rooted && !a.newton.holds) {
    return "real-rooted but Newton's inequality fails at index " +
           std::to_string(a.newton.first_failure.value_or(-1));
  }
  if (a.newton.holds && !a.log_concave.holds) {
    return "Newton's inequalities hold but log-concavity fails at index " +
           std::to_string(a.log_concave.first_failure.value_or(-1));
  }
  if (a.no_internal_zeros && a.log_concave.holds && !a.unimodal.holds) {
    return "log-concave without internal zeros but not unimodal at index " +
           std::to_string(a.unimodal.first_failure.value_or(-1));
  }
  return std::nullopt;
}

}  // namespace narayana
