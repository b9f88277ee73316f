#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace narayana {

/// A cell of a Young diagram, 1-indexed: row from the top, column from the left.
struct Cell {
  int row = 0;
  int column = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Integer partition lambda = (lambda_1 >= lambda_2 >= ... >= 1).
///
/// The empty partition (no parts, zero cells) is allowed and stands for the
/// degenerate n = 0 or m = 0 cases.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// The shape (columns^rows): `rows` rows, each of length `columns`.
  static Partition rectangle(int rows, int columns);
  /// Parses "4,2,1" (whitespace tolerated). An empty string is the empty shape.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const noexcept { return parts_; }
  int rows() const noexcept { return static_cast<int>(parts_.size()); }
  int columns() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// Length of row i (1-indexed); 0 past the last row.
  int row_length(int i) const noexcept;
  /// Length of column j (1-indexed).
  int column_length(int j) const noexcept;
  int cells() const noexcept { return cells_; }

  bool contains(Cell c) const noexcept;
  bool is_rectangular() const noexcept;
  Partition conjugate() const;
  /// Arm + leg + 1 for a cell inside the diagram.
  int hook_length(Cell c) const;

  /// "(4,2,1)"; the empty shape prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int cells_ = 0;
};

/// All partitions of `size`, in reverse lexicographic order ((size) first).
std::vector<Partition> partitions_of(int size);

/// All partitions with 1..max_size cells, ordered by size then reverse lex.
std::vector<Partition> partitions_up_to(int max_size);

}  // namespace narayana
