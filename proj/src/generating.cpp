#include "narayana/generating.hpp"

#include <vector>

#include "narayana/errors.hpp"
#include "narayana/kernels.hpp"
#include "narayana/lattice_word.hpp"
#include "narayana/tableau.hpp"

namespace narayana {

namespace {

using parallel::PairStatistic;

IntPolynomial rectangular_tally(int n, int m, PairStatistic stat, const ComputeOptions& options) {
  if (n < 0 || m < 0) throw ValidationError("n and m must be nonnegative");
  check_cell_budget(static_cast<long long>(n) * m, options);
  if (n == 0 || m == 0) return IntPolynomial{1};
  const std::vector<int> capacities(static_cast<std::size_t>(m), n);
  return IntPolynomial::from_counts(parallel::tally_ballot_statistic(capacities, stat, options.jobs));
}

std::string case_key(int n, int m) { return "n=" + std::to_string(n) + ",m=" + std::to_string(m); }

}  // namespace

IntPolynomial narayana_polynomial(int n, int m, const ComputeOptions& options) {
  return rectangular_tally(n, m, PairStatistic::word_descent, options);
}

IntPolynomial word_ascent_polynomial(int n, int m, const ComputeOptions& options) {
  return rectangular_tally(n, m, PairStatistic::word_ascent, options);
}

IntPolynomial path_ascent_polynomial(int n, int m, const ComputeOptions& options) {
  return rectangular_tally(n, m, PairStatistic::path_ascent, options);
}

IntPolynomial path_descent_polynomial(int n, int m, const ComputeOptions& options) {
  return rectangular_tally(n, m, PairStatistic::path_descent, options);
}

IntPolynomial syt_descent_polynomial(const Partition& shape, const ComputeOptions& options) {
  check_cell_budget(shape.cells(), options);
  if (shape.cells() == 0) return IntPolynomial{1};
  return IntPolynomial::from_counts(
      parallel::tally_ballot_statistic(shape.parts(), PairStatistic::tableau_descent, options.jobs));
}

IdentityReport verify_main_theorem(int n, int m, const ComputeOptions& options) {
  const IntPolynomial narayana = narayana_polynomial(n, m, options);
  const IntPolynomial tableaux = syt_descent_polynomial(Partition::rectangle(m, n), options);
  const int shift = (n == 0 || m == 0) ? 0 : m - 1;
  return compare_polynomials("theorem21", case_key(n, m), narayana.shifted(shift), tableaux);
}

IdentityReport verify_sulanke(int n, int m, const ComputeOptions& options) {
  const IntPolynomial ascents = path_ascent_polynomial(n, m, options);
  const IntPolynomial descents = path_descent_polynomial(n, m, options);
  const int shift = (n == 0 || m == 0) ? 0 : m - 1;
  return compare_polynomials("sulanke", case_key(n, m), ascents.shifted(shift), descents);
}

BigInt rectangular_catalan(int n, int m) {
  if (n < 0 || m < 0) throw ValidationError("n and m must be nonnegative");
  return syt_count_hook(Partition::rectangle(m, n));
}

}  // namespace narayana
