#include "narayana/tableau.hpp"

#include <charconv>

#include "detail/yamanouchi.hpp"
#include "narayana/errors.hpp"
#include "narayana/lattice_word.hpp"

namespace narayana {

namespace {

std::vector<Cell> positions_from_rows(const std::vector<std::vector<int>>& rows, int size) {
  std::vector<Cell> positions(static_cast<std::size_t>(size));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      positions[static_cast<std::size_t>(rows[i][j] - 1)] =
          Cell{static_cast<int>(i) + 1, static_cast<int>(j) + 1};
    }
  }
  return positions;
}

}  // namespace

StandardTableau StandardTableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> lengths;
  for (const auto& row : rows) {
    if (row.empty()) throw ValidationError("tableau rows must be nonempty");
    lengths.push_back(static_cast<int>(row.size()));
  }
  Partition shape(lengths);  // throws unless row lengths are weakly decreasing
  const int p = shape.cells();
  std::vector<bool> seen(static_cast<std::size_t>(p) + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int v = rows[i][j];
      if (v < 1 || v > p) {
        throw ValidationError("tableau entry " + std::to_string(v) + " outside 1.." +
                              std::to_string(p));
      }
      if (seen[static_cast<std::size_t>(v)]) {
        throw ValidationError("tableau entry " + std::to_string(v) + " repeated");
      }
      seen[static_cast<std::size_t>(v)] = true;
      if (j > 0 && rows[i][j - 1] >= v) {
        throw ValidationError("tableau row " + std::to_string(i + 1) + " not increasing");
      }
      if (i > 0 && rows[i - 1][j] >= v) {
        throw ValidationError("tableau column " + std::to_string(j + 1) + " not increasing");
      }
    }
  }
  auto positions = positions_from_rows(rows, p);
  return StandardTableau(std::move(shape), std::move(rows), std::move(positions));
}

StandardTableau StandardTableau::from_row_word(std::span<const int> row_word) {
  std::vector<std::vector<int>> rows;
  for (std::size_t k = 0; k < row_word.size(); ++k) {
    const int r = row_word[k];
    if (r < 1) throw ValidationError("row index must be positive", k + 1);
    if (static_cast<std::size_t>(r) > rows.size() + 1) {
      throw ValidationError("row word skips a row", k + 1);
    }
    if (static_cast<std::size_t>(r) == rows.size() + 1) rows.emplace_back();
    rows[static_cast<std::size_t>(r - 1)].push_back(static_cast<int>(k) + 1);
    if (r > 1 && rows[static_cast<std::size_t>(r - 1)].size() >
                     rows[static_cast<std::size_t>(r - 2)].size()) {
      throw ValidationError("row word is not a ballot sequence", k + 1);
    }
  }
  return from_rows(std::move(rows));
}

StandardTableau StandardTableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ' || c == ',') {
      ++pos;
    } else if (c == ';') {
      rows.emplace_back();
      ++pos;
    } else {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc{}) throw ValidationError("cannot parse tableau", pos + 1);
      rows.back().push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
  }
  if (rows.size() == 1 && rows.front().empty()) rows.clear();
  return from_rows(std::move(rows));
}

int StandardTableau::at(Cell c) const {
  if (!shape_.contains(c)) throw ValidationError("cell outside the tableau");
  return rows_[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.column - 1)];
}

Cell StandardTableau::position_of(int k) const {
  if (k < 1 || k > size()) throw ValidationError("entry outside 1..p");
  return positions_[static_cast<std::size_t>(k - 1)];
}

std::vector<int> StandardTableau::row_word() const {
  std::vector<int> word;
  word.reserve(positions_.size());
  for (const Cell& c : positions_) word.push_back(c.row);
  return word;
}

std::string StandardTableau::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) s += ';';
    for (std::size_t j = 0; j < rows_[i].size(); ++j) {
      if (j > 0) s += ',';
      s += std::to_string(rows_[i][j]);
    }
  }
  return s;
}

std::vector<int> tableau_descent_set(const StandardTableau& t) {
  std::vector<int> descents;
  for (int i = 1; i < t.size(); ++i) {
    if (t.row_of(i + 1) > t.row_of(i)) descents.push_back(i);
  }
  return descents;
}

int tableau_descents(const StandardTableau& t) {
  return static_cast<int>(tableau_descent_set(t).size());
}

void for_each_syt(const Partition& shape,
                  const std::function<bool(const StandardTableau&)>& visit,
                  const ComputeOptions& options) {
  check_cell_budget(shape.cells(), options);
  detail::YamanouchiWalk walk(shape.parts());
  auto emit = [&](const std::vector<int>& word) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    std::vector<Cell> positions(word.size());
    for (std::size_t k = 0; k < word.size(); ++k) {
      auto& row = rows[static_cast<std::size_t>(word[k] - 1)];
      row.push_back(static_cast<int>(k) + 1);
      positions[k] = Cell{word[k], static_cast<int>(row.size())};
    }
    return visit(StandardTableau(shape, std::move(rows), std::move(positions)));
  };
  walk.walk(emit);
}

std::vector<StandardTableau> enumerate_syt(const Partition& shape, const ComputeOptions& options) {
  std::vector<StandardTableau> out;
  for_each_syt(
      shape,
      [&](const StandardTableau& t) {
        out.push_back(t);
        return true;
      },
      options);
  return out;
}

BigInt syt_count_hook(const Partition& shape) {
  BigInt numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(shape.cells()));
  BigInt hooks = 1;
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) hooks *= shape.hook_length({i, j});
  }
  return BigInt(numerator / hooks);
}

}  // namespace narayana
