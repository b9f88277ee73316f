#pragma once

// Serial reference implementations built from the object-level API
// (materialized words, tableaux, paths and permutations). Slow, but each
// statistic is computed by the same definition a reader would check by hand.
// Tests and benchmarks compare the parallel kernels against these.

#include "narayana/bigint.hpp"
#include "narayana/partition.hpp"
#include "narayana/polynomial.hpp"
#include "narayana/poset.hpp"

namespace narayana::reference {

IntPolynomial narayana_polynomial(int n, int m);
IntPolynomial word_ascent_polynomial(int n, int m);
IntPolynomial syt_descent_polynomial(const Partition& shape);
/// Sum of t^{asc(P)} over paths obtained through word_to_path.
IntPolynomial path_ascent_polynomial(int n, int m);
IntPolynomial path_descent_polynomial(int n, int m);
IntPolynomial w_polynomial(const LabeledPoset& poset);
/// Checks every map elements -> 1..n; bound^p work.
BigInt order_polynomial(const LabeledPoset& poset, int n);

}  // namespace narayana::reference
