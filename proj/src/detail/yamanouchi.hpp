#pragma once

// Backtracking over Yamanouchi (ballot) sequences: row sequences r_1 r_2 ...
// where row r may be chosen while its count is below capacity[r] and, for
// r > 1, strictly below the count of row r-1. With capacities (n,...,n) these
// are the lattice words of weight (m^n); with capacities lambda they are the
// row words of the standard Young tableaux of shape lambda.

#include <cstddef>
#include <span>
#include <vector>

namespace narayana::detail {

struct YamanouchiWalk {
  std::vector<int> capacity;  // indexed by row - 1
  std::vector<int> count;     // indexed by row - 1
  std::vector<int> word;      // rows, 1-indexed values
  std::size_t length = 0;

  explicit YamanouchiWalk(std::span<const int> capacities)
      : capacity(capacities.begin(), capacities.end()),
        count(capacities.size(), 0) {
    for (int c : capacity) length += static_cast<std::size_t>(c);
    word.reserve(length);
  }

  bool can_place(std::size_t r) const noexcept {
    return count[r] < capacity[r] && (r == 0 || count[r - 1] > count[r]);
  }

  void place(std::size_t r) {
    ++count[r];
    word.push_back(static_cast<int>(r) + 1);
  }

  void unplace() {
    --count[static_cast<std::size_t>(word.back() - 1)];
    word.pop_back();
  }

  /// Visits completions of the current prefix in lexicographic order.
  /// `visit(word)` returns false to abort; walk returns false iff aborted.
  template <class Visit>
  bool walk(Visit& visit) {
    if (word.size() == length) return visit(static_cast<const std::vector<int>&>(word));
    for (std::size_t r = 0; r < capacity.size(); ++r) {
      if (!can_place(r)) continue;
      place(r);
      const bool keep_going = walk(visit);
      unplace();
      if (!keep_going) return false;
    }
    return true;
  }
};

}  // namespace narayana::detail
