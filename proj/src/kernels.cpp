#include "narayana/kernels.hpp"

#include <algorithm>
#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace narayana::parallel {

int effective_jobs(int jobs) {
#ifdef _OPENMP
  return jobs > 0 ? jobs : omp_get_max_threads();
#else
  (void)jobs;
  return 1;
#endif
}

namespace {

constexpr std::size_t kPrefixesPerThread = 16;

[[maybe_unused]] void merge_into(Histogram& total, const Histogram& part) {
  for (std::size_t k = 0; k < part.size(); ++k) total[k] += part[k];
}

// Runs body(i, local_histogram) for i in [0, count) across `threads` workers
// and returns the sum of the per-thread histograms.
template <class Body>
Histogram run_partitioned(std::size_t count, std::size_t bins, int threads, const Body& body) {
  Histogram total(bins, 0);
#ifdef _OPENMP
  if (threads > 1) {
    const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel num_threads(threads)
    {
      Histogram local(bins, 0);
#pragma omp for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < n; ++i) body(static_cast<std::size_t>(i), local);
#pragma omp critical(narayana_histogram_merge)
      merge_into(total, local);
    }
    return total;
  }
#endif
  (void)threads;
  for (std::size_t i = 0; i < count; ++i) body(i, total);
  return total;
}

// ---- ballot sequences ------------------------------------------------------

struct BallotNode {
  std::vector<int> count;
  int placed = 0;
  int last = 0;  // 1-indexed row of the previous letter, 0 before the first
  int acc = 0;
};

struct BallotShape {
  std::vector<int> capacity;
  int total = 0;

  bool can_place(const std::vector<int>& count, std::size_t r) const noexcept {
    return count[r] < capacity[r] && (r == 0 || count[r - 1] > count[r]);
  }
};

template <class Stat>
void ballot_descend(const BallotShape& shape, std::vector<int>& count, int placed, int last,
                    int acc, Histogram& hist, const Stat& stat) {
  if (placed == shape.total) {
    ++hist[static_cast<std::size_t>(acc)];
    return;
  }
  for (std::size_t r = 0; r < shape.capacity.size(); ++r) {
    if (!shape.can_place(count, r)) continue;
    const int row = static_cast<int>(r) + 1;
    ++count[r];
    ballot_descend(shape, count, placed + 1, row, acc + stat(last, row), hist, stat);
    --count[r];
  }
}

template <class Stat>
std::vector<BallotNode> ballot_prefixes(const BallotShape& shape, std::size_t target,
                                        const Stat& stat) {
  std::vector<BallotNode> frontier(1);
  frontier[0].count.assign(shape.capacity.size(), 0);
  // All frontier nodes share one depth, so stop once they are complete.
  while (frontier.size() < target && frontier.front().placed < shape.total) {
    std::vector<BallotNode> next;
    for (const auto& node : frontier) {
      for (std::size_t r = 0; r < shape.capacity.size(); ++r) {
        if (!shape.can_place(node.count, r)) continue;
        BallotNode child = node;
        const int row = static_cast<int>(r) + 1;
        ++child.count[r];
        ++child.placed;
        child.acc += stat(node.last, row);
        child.last = row;
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

template <class Stat>
Histogram tally_ballot(std::span<const int> capacities, const Stat& stat, int jobs) {
  BallotShape shape{{capacities.begin(), capacities.end()}, 0};
  for (int c : shape.capacity) shape.total += c;
  const std::size_t bins = static_cast<std::size_t>(std::max(shape.total, 1));
  const int threads = effective_jobs(jobs);
  const auto prefixes =
      ballot_prefixes(shape, threads > 1 ? kPrefixesPerThread * static_cast<std::size_t>(threads) : 1, stat);
  return run_partitioned(prefixes.size(), bins, threads, [&](std::size_t i, Histogram& hist) {
    const BallotNode& node = prefixes[i];
    std::vector<int> count = node.count;
    ballot_descend(shape, count, node.placed, node.last, node.acc, hist, stat);
  });
}

// ---- linear extensions -----------------------------------------------------

struct ExtensionNode {
  std::uint64_t placed = 0;
  int depth = 0;
  int last_label = 0;
  int acc = 0;
};

struct PosetView {
  std::vector<std::uint64_t> below;  // below[x] = mask of elements < x (0-indexed)
  std::vector<int> label;
  int size = 0;

  explicit PosetView(const LabeledPoset& poset) : size(poset.size()) {
    for (int x = 1; x <= size; ++x) {
      below.push_back(poset.strictly_below(x));
      label.push_back(poset.label(x));
    }
  }

  bool available(std::uint64_t placed, int x) const noexcept {
    const std::uint64_t bit = std::uint64_t{1} << x;
    return (placed & bit) == 0 && (below[static_cast<std::size_t>(x)] & ~placed) == 0;
  }
};

void extension_descend(const PosetView& view, std::uint64_t placed, int depth, int last_label,
                       int acc, Histogram& hist) {
  if (depth == view.size) {
    ++hist[static_cast<std::size_t>(acc)];
    return;
  }
  for (int x = 0; x < view.size; ++x) {
    if (!view.available(placed, x)) continue;
    const int l = view.label[static_cast<std::size_t>(x)];
    extension_descend(view, placed | (std::uint64_t{1} << x), depth + 1, l,
                      acc + (last_label > l ? 1 : 0), hist);
  }
}

// ---- (P, omega)-partitions -------------------------------------------------

struct PartitionSearch {
  // Elements in a linear-extension order; constraints point to earlier slots.
  struct Constraint {
    int slot;
    int strict;  // 1 when omega(lower) > omega(upper)
  };
  std::vector<std::vector<Constraint>> lower;
  int bound = 0;
  int size = 0;

  PartitionSearch(const LabeledPoset& poset, int bound_) : bound(bound_), size(poset.size()) {
    const PosetView view(poset);
    std::vector<int> order;
    std::uint64_t placed = 0;
    while (static_cast<int>(order.size()) < size) {
      for (int x = 0; x < size; ++x) {
        if (view.available(placed, x)) {
          order.push_back(x);
          placed |= std::uint64_t{1} << x;
          break;
        }
      }
    }
    lower.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        const int x = order[j] + 1;
        const int y = order[i] + 1;
        if (poset.less(x, y)) {
          lower[i].push_back({static_cast<int>(j), poset.label(x) > poset.label(y) ? 1 : 0});
        }
      }
    }
  }

  int upper_limit(std::size_t slot, const std::vector<int>& sigma) const noexcept {
    int ub = bound;
    for (const auto& c : lower[slot]) {
      ub = std::min(ub, sigma[static_cast<std::size_t>(c.slot)] - c.strict);
    }
    return ub;
  }

  std::uint64_t count_from(std::size_t slot, std::vector<int>& sigma) const {
    const int ub = upper_limit(slot, sigma);
    if (ub < 1) return 0;
    if (slot + 1 == static_cast<std::size_t>(size)) return static_cast<std::uint64_t>(ub);
    std::uint64_t total = 0;
    for (int v = 1; v <= ub; ++v) {
      sigma[slot] = v;
      total += count_from(slot + 1, sigma);
    }
    return total;
  }
};

}  // namespace

Histogram tally_ballot_statistic(std::span<const int> capacities, PairStatistic stat, int jobs) {
  const int m = static_cast<int>(capacities.size());
  switch (stat) {
    case PairStatistic::word_descent:
      return tally_ballot(capacities, [](int prev, int cur) { return prev > cur ? 1 : 0; }, jobs);
    case PairStatistic::word_ascent:
      return tally_ballot(
          capacities, [](int prev, int cur) { return prev != 0 && prev < cur ? 1 : 0; }, jobs);
    case PairStatistic::tableau_descent:
      // prev/cur are the rows holding k and k+1.
      return tally_ballot(
          capacities, [](int row_k, int row_next) { return row_k != 0 && row_next > row_k ? 1 : 0; },
          jobs);
    case PairStatistic::path_ascent:
      return tally_ballot(
          capacities,
          [m](int prev, int cur) { return prev != 0 && (m - prev + 1) < (m - cur + 1) ? 1 : 0; },
          jobs);
    case PairStatistic::path_descent:
      return tally_ballot(
          capacities,
          [m](int prev, int cur) { return prev != 0 && (m - prev + 1) > (m - cur + 1) ? 1 : 0; },
          jobs);
  }
  return {};
}

Histogram tally_jordan_holder_descents(const LabeledPoset& poset, int jobs) {
  const PosetView view(poset);
  const std::size_t bins = static_cast<std::size_t>(std::max(view.size, 1));
  const int threads = effective_jobs(jobs);
  const std::size_t target = threads > 1 ? kPrefixesPerThread * static_cast<std::size_t>(threads) : 1;

  std::vector<ExtensionNode> frontier(1);
  while (frontier.size() < target && frontier.front().depth < view.size) {
    std::vector<ExtensionNode> next;
    for (const auto& node : frontier) {
      for (int x = 0; x < view.size; ++x) {
        if (!view.available(node.placed, x)) continue;
        const int l = view.label[static_cast<std::size_t>(x)];
        next.push_back({node.placed | (std::uint64_t{1} << x), node.depth + 1, l,
                        node.acc + (node.last_label > l ? 1 : 0)});
      }
    }
    frontier = std::move(next);
  }
  return run_partitioned(frontier.size(), bins, threads, [&](std::size_t i, Histogram& hist) {
    const auto& node = frontier[i];
    extension_descend(view, node.placed, node.depth, node.last_label, node.acc, hist);
  });
}

std::uint64_t count_poset_partitions(const LabeledPoset& poset, int bound, int jobs) {
  if (poset.size() == 0) return 1;
  if (bound < 1) return 0;
  const PartitionSearch search(poset, bound);
  if (poset.size() == 1) return static_cast<std::uint64_t>(bound);

  // Prefixes fix the values of the first two slots.
  std::vector<std::pair<int, int>> prefixes;
  for (int a = 1; a <= bound; ++a) {
    for (int b = 1; b <= bound; ++b) prefixes.emplace_back(a, b);
  }
  const int threads = effective_jobs(jobs);
  const Histogram total =
      run_partitioned(prefixes.size(), 1, threads, [&](std::size_t i, Histogram& hist) {
        std::vector<int> sigma(static_cast<std::size_t>(search.size), 0);
        sigma[0] = prefixes[i].first;
        if (search.upper_limit(1, sigma) < prefixes[i].second) return;
        sigma[1] = prefixes[i].second;
        hist[0] += search.size == 2 ? 1 : search.count_from(2, sigma);
      });
  return total[0];
}

}  // namespace narayana::parallel
