#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "narayana/bigint.hpp"
#include "narayana/options.hpp"
#include "narayana/partition.hpp"

namespace narayana {

class StandardTableau;

/// Visits every SYT of `shape`, ordered lexicographically by row word (the
/// word whose i-th letter is the row holding i). The visitor returns false
/// to stop early.
void for_each_syt(const Partition& shape,
                  const std::function<bool(const StandardTableau&)>& visit,
                  const ComputeOptions& options = {});

/// A filling of a Young diagram by 1..p, increasing along rows and down columns.
class StandardTableau {
 public:
  /// Infers the shape from row lengths. Throws ValidationError on any
  /// violated tableau condition.
  static StandardTableau from_rows(std::vector<std::vector<int>> rows);
  /// Builds the tableau whose entry k sits in row row_word[k-1]. Throws
  /// ValidationError unless the row word is a ballot sequence.
  static StandardTableau from_row_word(std::span<const int> row_word);
  /// Parses "1,3,4,5;2,7,8,10;6,9,11,12".
  static StandardTableau parse(std::string_view text);

  const Partition& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.cells(); }

  /// Entry in cell (i, j), 1-indexed.
  int at(Cell c) const;
  /// Cell holding entry k (1 <= k <= size()).
  Cell position_of(int k) const;
  int row_of(int k) const { return position_of(k).row; }
  /// w_k = row of k, for k = 1..p.
  std::vector<int> row_word() const;

  /// Rows joined by ';', entries by ','.
  std::string to_string() const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.rows_ == b.rows_;
  }

 private:
  friend void for_each_syt(const Partition&, const std::function<bool(const StandardTableau&)>&,
                           const ComputeOptions&);
  StandardTableau(Partition shape, std::vector<std::vector<int>> rows,
                  std::vector<Cell> positions)
      : shape_(std::move(shape)), rows_(std::move(rows)), positions_(std::move(positions)) {}

  Partition shape_;
  std::vector<std::vector<int>> rows_;
  std::vector<Cell> positions_;  // positions_[k-1] = cell of k
};

/// D(T) = { i : i+1 lies in a strictly lower row than i }, ascending.
std::vector<int> tableau_descent_set(const StandardTableau& t);
/// des(T) = |D(T)|.
int tableau_descents(const StandardTableau& t);

std::vector<StandardTableau> enumerate_syt(const Partition& shape,
                                           const ComputeOptions& options = {});

/// Number of SYT of `shape` by the hook-length formula: p! / prod(hooks).
BigInt syt_count_hook(const Partition& shape);

}  // namespace narayana
