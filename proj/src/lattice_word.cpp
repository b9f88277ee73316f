#include "narayana/lattice_word.hpp"

#include <charconv>

#include "detail/yamanouchi.hpp"
#include "narayana/errors.hpp"

namespace narayana {

namespace {

std::string symbols_to_string(std::span<const int> symbols, int alphabet) {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (alphabet > 9) {
      if (i > 0) s += ',';
      s += std::to_string(symbols[i]);
    } else {
      s += static_cast<char>('0' + symbols[i]);
    }
  }
  return s;
}

std::vector<int> parse_symbols(std::string_view text) {
  std::vector<int> symbols;
  if (text.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c == ' ') continue;
      if (c < '0' || c > '9') throw ValidationError("expected a digit", i + 1);
      symbols.push_back(c - '0');
    }
    return symbols;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ValidationError("expected an integer", symbols.size() + 1);
    symbols.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
  }
  return symbols;
}

}  // namespace

int sequence_ascents(std::span<const int> sequence) noexcept {
  int count = 0;
  for (std::size_t i = 1; i < sequence.size(); ++i) count += sequence[i - 1] < sequence[i];
  return count;
}

int sequence_descents(std::span<const int> sequence) noexcept {
  int count = 0;
  for (std::size_t i = 1; i < sequence.size(); ++i) count += sequence[i - 1] > sequence[i];
  return count;
}

bool is_lattice_word(std::span<const int> symbols, int n, int m) {
  if (n < 0 || m < 0) throw ValidationError("weight parameters must be nonnegative");
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (symbols[k] < 1 || symbols[k] > m) {
      throw ValidationError("symbol " + std::to_string(symbols[k]) + " outside 1.." +
                                std::to_string(m),
                            k + 1);
    }
  }
  if (symbols.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m)) {
    return false;
  }
  std::vector<int> seen(static_cast<std::size_t>(m) + 1, 0);
  for (int s : symbols) {
    ++seen[static_cast<std::size_t>(s)];
    if (s > 1 && seen[static_cast<std::size_t>(s)] > seen[static_cast<std::size_t>(s - 1)]) {
      return false;
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (seen[static_cast<std::size_t>(i)] != n) return false;
  }
  return true;
}

LatticeWord LatticeWord::from_symbols(std::vector<int> symbols, int n, int m) {
  if (!is_lattice_word(symbols, n, m)) {
    throw ValidationError("not a lattice word of weight (" + std::to_string(m) + "^" +
                          std::to_string(n) + "): " + symbols_to_string(symbols, m));
  }
  return LatticeWord(std::move(symbols), n, m);
}

LatticeWord LatticeWord::parse(std::string_view text, int n, int m) {
  return from_symbols(parse_symbols(text), n, m);
}

std::string LatticeWord::to_string() const { return symbols_to_string(symbols_, m_); }

int word_ascents(const LatticeWord& w) noexcept { return sequence_ascents(w.symbols()); }
int word_descents(const LatticeWord& w) noexcept { return sequence_descents(w.symbols()); }

BallotPath BallotPath::from_steps(std::vector<int> steps, int n, int m) {
  if (n < 0 || m < 0) throw ValidationError("path parameters must be nonnegative");
  if (steps.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(m)) {
    throw ValidationError("ballot path must have n*m steps");
  }
  std::vector<int> x(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const int j = steps[k];
    if (j < 1 || j > m) throw ValidationError("step index outside 1..m", k + 1);
    ++x[static_cast<std::size_t>(j)];
    // Raising x_j can only break x_j <= x_{j+1}.
    if (j < m && x[static_cast<std::size_t>(j)] > x[static_cast<std::size_t>(j + 1)]) {
      throw ValidationError("ballot path leaves the region x_1 <= ... <= x_m", k + 1);
    }
  }
  return BallotPath(std::move(steps), n, m);
}

std::string BallotPath::to_string() const { return symbols_to_string(steps_, m_); }

int path_ascents(const BallotPath& p) noexcept { return sequence_ascents(p.steps()); }
int path_descents(const BallotPath& p) noexcept { return sequence_descents(p.steps()); }

void check_cell_budget(long long cells, const ComputeOptions& options) {
  if (cells > options.max_cells) {
    throw BudgetExceeded("enumeration cell budget (max_cells)", options.max_cells, cells);
  }
}

void for_each_lattice_word(int n, int m, const std::function<bool(const LatticeWord&)>& visit,
                           const ComputeOptions& options) {
  if (n < 0 || m < 0) throw ValidationError("weight parameters must be nonnegative");
  check_cell_budget(static_cast<long long>(n) * m, options);
  if (n == 0 || m == 0) {
    visit(LatticeWord({}, n, m));
    return;
  }
  const std::vector<int> capacities(static_cast<std::size_t>(m), n);
  detail::YamanouchiWalk walk(capacities);
  auto emit = [&](const std::vector<int>& word) { return visit(LatticeWord(word, n, m)); };
  walk.walk(emit);
}

std::vector<LatticeWord> enumerate_lattice_words(int n, int m, const ComputeOptions& options) {
  std::vector<LatticeWord> words;
  for_each_lattice_word(
      n, m,
      [&](const LatticeWord& w) {
        words.push_back(w);
        return true;
      },
      options);
  return words;
}

namespace {

// Direct search in the region 0 <= x_1 <= ... <= x_m, steps in increasing index.
template <class Emit>
bool ballot_rec(int n, int m, std::vector<int>& x, std::vector<int>& steps, Emit& emit) {
  if (steps.size() == static_cast<std::size_t>(n) * static_cast<std::size_t>(m)) return emit(steps);
  for (int j = 1; j <= m; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    if (x[uj] == n) continue;
    if (j < m && x[uj] + 1 > x[uj + 1]) continue;
    ++x[uj];
    steps.push_back(j);
    const bool keep_going = ballot_rec(n, m, x, steps, emit);
    steps.pop_back();
    --x[uj];
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void for_each_ballot_path(int n, int m, const std::function<bool(const BallotPath&)>& visit,
                          const ComputeOptions& options) {
  if (n < 0 || m < 0) throw ValidationError("path parameters must be nonnegative");
  check_cell_budget(static_cast<long long>(n) * m, options);
  if (n == 0 || m == 0) {
    visit(BallotPath({}, n, m));
    return;
  }
  std::vector<int> x(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> steps;
  auto emit = [&](const std::vector<int>& s) { return visit(BallotPath(s, n, m)); };
  ballot_rec(n, m, x, steps, emit);
}

std::vector<BallotPath> enumerate_ballot_paths(int n, int m, const ComputeOptions& options) {
  std::vector<BallotPath> out;
  for_each_ballot_path(
      n, m,
      [&](const BallotPath& p) {
        out.push_back(p);
        return true;
      },
      options);
  return out;
}

}  // namespace narayana
