#include "narayana/bijections.hpp"

#include "narayana/errors.hpp"

namespace narayana {

StandardTableau phi(const LatticeWord& w) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(w.m()));
  const auto symbols = w.symbols();
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    rows[static_cast<std::size_t>(symbols[k] - 1)].push_back(static_cast<int>(k) + 1);
  }
  if (w.n() == 0) rows.clear();
  return StandardTableau::from_rows(std::move(rows));
}

LatticeWord phi_inverse(const StandardTableau& t) {
  if (!t.shape().is_rectangular()) {
    throw ShapeError("phi_inverse needs a rectangular shape, got " + t.shape().to_string());
  }
  return LatticeWord::from_symbols(t.row_word(), t.shape().columns(), t.shape().rows());
}

BallotPath word_to_path(const LatticeWord& w) {
  std::vector<int> steps;
  steps.reserve(w.size());
  for (int s : w.symbols()) steps.push_back(w.m() - s + 1);
  return BallotPath::from_steps(std::move(steps), w.n(), w.m());
}

LatticeWord path_to_word(const BallotPath& p) {
  std::vector<int> symbols;
  symbols.reserve(p.size());
  for (int j : p.steps()) symbols.push_back(p.m() - j + 1);
  return LatticeWord::from_symbols(std::move(symbols), p.n(), p.m());
}

StandardTableau perm_to_tableau(std::span<const int> pi, std::span<const int> labeling,
                                const Partition& shape) {
  const auto p = static_cast<std::size_t>(shape.cells());
  if (labeling.size() != p) throw ValidationError("labeling size differs from |shape|");
  if (pi.size() != p) throw ValidationError("permutation size differs from |shape|");

  std::vector<Cell> cells;  // row-major
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) cells.push_back({i, j});
  }
  std::vector<int> cell_of_label(p + 1, -1);
  for (std::size_t e = 0; e < p; ++e) {
    const int label = labeling[e];
    if (label < 1 || static_cast<std::size_t>(label) > p || cell_of_label[label] != -1) {
      throw ValidationError("labeling is not a bijection onto 1..p", e + 1);
    }
    cell_of_label[static_cast<std::size_t>(label)] = static_cast<int>(e);
  }

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  std::vector<bool> used(p + 1, false);
  for (std::size_t k = 0; k < p; ++k) {
    const int label = pi[k];
    if (label < 1 || static_cast<std::size_t>(label) > p || used[static_cast<std::size_t>(label)]) {
      throw ValidationError("not a permutation of 1..p", k + 1);
    }
    used[static_cast<std::size_t>(label)] = true;
    const Cell c = cells[static_cast<std::size_t>(cell_of_label[static_cast<std::size_t>(label)])];
    auto& row = rows[static_cast<std::size_t>(c.row - 1)];
    // Linear extension of the product order: the cell must be the next free
    // one in its row, and the cell above it must already be filled.
    const bool row_ready = static_cast<int>(row.size()) == c.column - 1;
    const bool column_ready =
        c.row == 1 || static_cast<int>(rows[static_cast<std::size_t>(c.row - 2)].size()) >= c.column;
    if (!row_ready || !column_ready) {
      throw ValidationError("permutation is not in the Jordan-Holder set", k + 1);
    }
    row.push_back(static_cast<int>(k) + 1);
  }
  return StandardTableau::from_rows(std::move(rows));
}

}  // namespace narayana
