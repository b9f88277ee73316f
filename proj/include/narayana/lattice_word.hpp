#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "narayana/options.hpp"

namespace narayana {

class LatticeWord;
class BallotPath;

/// Visits every lattice word of weight (m^n) in lexicographic order. The
/// visitor returns false to stop early. n = 0 or m = 0 yields the empty word.
void for_each_lattice_word(int n, int m,
                           const std::function<bool(const LatticeWord&)>& visit,
                           const ComputeOptions& options = {});

/// Ballot paths generated directly from the region constraint, ordered
/// lexicographically by step sequence. Independent of the word enumerator.
/// The visitor returns false to stop early.
void for_each_ballot_path(int n, int m, const std::function<bool(const BallotPath&)>& visit,
                          const ComputeOptions& options = {});

std::vector<BallotPath> enumerate_ballot_paths(int n, int m,
                                               const ComputeOptions& options = {});

/// Number of positions i with s_i < s_{i+1}.
int sequence_ascents(std::span<const int> sequence) noexcept;
/// Number of positions i with s_i > s_{i+1}.
int sequence_descents(std::span<const int> sequence) noexcept;

/// True iff `symbols` is a lattice word of weight (m^n): every symbol in 1..m
/// occurs exactly n times and every prefix holds at least as many i's as
/// (i+1)'s. Throws ValidationError naming the first symbol outside 1..m.
bool is_lattice_word(std::span<const int> symbols, int n, int m);

/// A validated lattice word of weight (m^n), symbols 1..m.
class LatticeWord {
 public:
  /// Throws ValidationError if the symbols do not form a lattice word.
  static LatticeWord from_symbols(std::vector<int> symbols, int n, int m);
  /// Accepts "121113223233" (one digit per symbol) or a comma-separated list.
  static LatticeWord parse(std::string_view text, int n, int m);

  std::span<const int> symbols() const noexcept { return symbols_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  /// 1-indexed access.
  int operator[](std::size_t k) const { return symbols_.at(k - 1); }

  /// Digit string when m <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;

 private:
  friend void for_each_lattice_word(int, int, const std::function<bool(const LatticeWord&)>&,
                                    const ComputeOptions&);
  LatticeWord(std::vector<int> symbols, int n, int m)
      : symbols_(std::move(symbols)), n_(n), m_(m) {}

  std::vector<int> symbols_;
  int n_ = 0;
  int m_ = 0;
};

int word_ascents(const LatticeWord& w) noexcept;
int word_descents(const LatticeWord& w) noexcept;

/// Lattice path from the origin to (n,...,n) in R^m with unit steps X_1..X_m,
/// staying in 0 <= x_1 <= x_2 <= ... <= x_m. Steps are stored as indices j.
class BallotPath {
 public:
  /// Throws ValidationError if a step leaves the region or the endpoint is wrong.
  static BallotPath from_steps(std::vector<int> steps, int n, int m);

  std::span<const int> steps() const noexcept { return steps_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return steps_.size(); }

  /// Step indices as a digit string (comma-separated when m > 9).
  std::string to_string() const;

  friend bool operator==(const BallotPath&, const BallotPath&) = default;

 private:
  friend void for_each_ballot_path(int, int, const std::function<bool(const BallotPath&)>&,
                                   const ComputeOptions&);
  BallotPath(std::vector<int> steps, int n, int m)
      : steps_(std::move(steps)), n_(n), m_(m) {}

  std::vector<int> steps_;
  int n_ = 0;
  int m_ = 0;
};

/// Adjacent step pairs X_j X_l with j < l.
int path_ascents(const BallotPath& p) noexcept;
/// Adjacent step pairs X_j X_l with j > l.
int path_descents(const BallotPath& p) noexcept;

/// Throws BudgetExceeded when n*m exceeds options.max_cells.
void check_cell_budget(long long cells, const ComputeOptions& options);

std::vector<LatticeWord> enumerate_lattice_words(int n, int m,
                                                 const ComputeOptions& options = {});

}  // namespace narayana
