#pragma once

#include "narayana/bigint.hpp"
#include "narayana/options.hpp"
#include "narayana/partition.hpp"
#include "narayana/polynomial.hpp"
#include "narayana/report.hpp"

namespace narayana {

/// N(n, m; t) = sum over lattice words w of weight (m^n) of t^{des(w)}.
/// N(0, m; t) = N(n, 0; t) = 1.
IntPolynomial narayana_polynomial(int n, int m, const ComputeOptions& options = {});

/// sum over lattice words w of weight (m^n) of t^{asc(w)}.
IntPolynomial word_ascent_polynomial(int n, int m, const ComputeOptions& options = {});

/// sum over SYT T of `shape` of t^{des(T)}.
IntPolynomial syt_descent_polynomial(const Partition& shape, const ComputeOptions& options = {});

/// sum over ballot paths P for m candidates to (n,...,n) of t^{asc(P)}
/// (resp. t^{des(P)}).
IntPolynomial path_ascent_polynomial(int n, int m, const ComputeOptions& options = {});
IntPolynomial path_descent_polynomial(int n, int m, const ComputeOptions& options = {});

/// t^{m-1} N(n, m; t) == sum over SYT of shape (n^m) of t^{des(T)}, exactly.
IdentityReport verify_main_theorem(int n, int m, const ComputeOptions& options = {});

/// t^{m-1} sum_P t^{asc(P)} == sum_P t^{des(P)} over ballot paths, i.e. asc
/// and des - (m - 1) are equidistributed.
IdentityReport verify_sulanke(int n, int m, const ComputeOptions& options = {});

/// N(n, m; 1) = number of SYT of shape (n^m), by the hook-length formula.
BigInt rectangular_catalan(int n, int m);

}  // namespace narayana
