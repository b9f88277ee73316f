#include "narayana/partition.hpp"

#include <algorithm>
#include <charconv>

#include "narayana/errors.hpp"

namespace narayana {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) {
      throw ValidationError("partition parts must be positive", i + 1);
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw ValidationError("partition parts must be weakly decreasing", i + 1);
    }
    cells_ += parts_[i];
  }
}

Partition Partition::rectangle(int rows, int columns) {
  if (rows < 0 || columns < 0) {
    throw ValidationError("rectangle dimensions must be nonnegative");
  }
  if (rows == 0 || columns == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), columns));
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == '(') ++pos;
  while (true) {
    skip_space();
    if (pos >= text.size() || text[pos] == ')') break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) {
      throw ValidationError("cannot parse partition '" + std::string(text) + "'",
                            parts.size() + 1);
    }
    parts.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_space();
    if (pos < text.size() && text[pos] == ',') ++pos;
  }
  return Partition(std::move(parts));
}

int Partition::row_length(int i) const noexcept {
  if (i < 1 || i > rows()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column_length(int j) const noexcept {
  int length = 0;
  while (length < rows() && parts_[static_cast<std::size_t>(length)] >= j) ++length;
  return j < 1 ? 0 : length;
}

bool Partition::contains(Cell c) const noexcept {
  return c.row >= 1 && c.column >= 1 && c.column <= row_length(c.row);
}

bool Partition::is_rectangular() const noexcept {
  return parts_.empty() || parts_.front() == parts_.back();
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 1; j <= columns(); ++j) conj.push_back(column_length(j));
  return Partition(std::move(conj));
}

int Partition::hook_length(Cell c) const {
  if (!contains(c)) throw ValidationError("cell outside the diagram");
  const int arm = row_length(c.row) - c.column;
  const int leg = column_length(c.column) - c.row;
  return arm + leg + 1;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> current;
  partitions_rec(size, size, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int size = 1; size <= max_size; ++size) {
    auto block = partitions_of(size);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace narayana
