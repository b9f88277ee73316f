#pragma once

#include <optional>
#include <string>

#include "narayana/bigint.hpp"
#include "narayana/polynomial.hpp"

namespace narayana {

struct CoefficientMismatch {
  int index = 0;
  BigInt lhs;
  BigInt rhs;
};

/// Outcome of checking an identity lhs(t) = rhs(t) on one case.
struct IdentityReport {
  std::string identity;  // e.g. "theorem21"
  std::string case_key;  // e.g. "n=3,m=2"
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool holds = false;
  std::optional<CoefficientMismatch> first_mismatch;

  /// One line: "<identity> <case> PASS|FAIL ..." with the first mismatch on failure.
  std::string describe() const;
};

IdentityReport compare_polynomials(std::string identity, std::string case_key, IntPolynomial lhs,
                                   IntPolynomial rhs);

}  // namespace narayana
