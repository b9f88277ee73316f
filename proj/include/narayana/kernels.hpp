#pragma once

// OpenMP kernels behind the generating-function and poset operations. Each
// kernel splits the search tree into prefixes and tallies a histogram per
// thread; histograms merge by addition, so results do not depend on the
// thread count. jobs == 1 (or a build without OpenMP) runs the same search
// on the calling thread.

#include <cstdint>
#include <span>
#include <vector>

#include "narayana/poset.hpp"

namespace narayana::parallel {

using Histogram = std::vector<std::uint64_t>;

/// Statistic accumulated over adjacent letters of a ballot sequence.
enum class PairStatistic {
  word_descent,     // w_i > w_{i+1}
  word_ascent,      // w_i < w_{i+1}
  path_ascent,      // X_j X_l with j < l, where symbol s is step m - s + 1
  path_descent,     // X_j X_l with j > l
  tableau_descent,  // i + 1 in a lower row than i
};

/// Histogram of `stat` over all ballot sequences with the given row
/// capacities: lattice words of weight (m^n) for capacities (n,...,n), SYT
/// row words for capacities lambda. Index k counts sequences with value k.
Histogram tally_ballot_statistic(std::span<const int> capacities, PairStatistic stat,
                                 int jobs = 0);

/// Histogram of des(pi) over the Jordan-Holder set.
Histogram tally_jordan_holder_descents(const LabeledPoset& poset, int jobs = 0);

/// Number of (P, omega)-partitions into 1..bound.
std::uint64_t count_poset_partitions(const LabeledPoset& poset, int bound, int jobs = 0);

/// Threads a kernel would use for `jobs`.
int effective_jobs(int jobs);

}  // namespace narayana::parallel
