#include "narayana/report.hpp"

#include <algorithm>

namespace narayana {

IdentityReport compare_polynomials(std::string identity, std::string case_key, IntPolynomial lhs,
                                   IntPolynomial rhs) {
  IdentityReport report;
  report.identity = std::move(identity);
  report.case_key = std::move(case_key);
  const int top = std::max(lhs.degree(), rhs.degree());
  for (int k = 0; k <= top; ++k) {
    BigInt a = lhs.coefficient(k);
    BigInt b = rhs.coefficient(k);
    if (a != b) {
      report.first_mismatch = CoefficientMismatch{k, std::move(a), std::move(b)};
      break;
    }
  }
  report.holds = !report.first_mismatch.has_value();
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

std::string IdentityReport::describe() const {
  std::string s = identity + " " + case_key + (holds ? " PASS" : " FAIL");
  s += " lhs=[" + lhs.join(",") + "] rhs=[" + rhs.join(",") + "]";
  if (first_mismatch) {
    s += " first mismatch at t^" + std::to_string(first_mismatch->index) + ": " +
         first_mismatch->lhs.get_str() + " != " + first_mismatch->rhs.get_str();
  }
  return s;
}

}  // namespace narayana
