#include "narayana/poset.hpp"

#include <algorithm>
#include <cstdio>

#include "narayana/errors.hpp"
#include "narayana/generating.hpp"
#include "narayana/kernels.hpp"

namespace narayana {

namespace {

std::vector<int> validate_labeling(std::vector<int> labeling, int size) {
  if (static_cast<int>(labeling.size()) != size) {
    throw ValidationError("labeling must list exactly p labels");
  }
  std::vector<int> inverse(static_cast<std::size_t>(size), 0);
  for (std::size_t x = 0; x < labeling.size(); ++x) {
    const int l = labeling[x];
    if (l < 1 || l > size || inverse[static_cast<std::size_t>(l - 1)] != 0) {
      throw ValidationError("labeling is not a bijection onto 1..p", x + 1);
    }
    inverse[static_cast<std::size_t>(l - 1)] = static_cast<int>(x) + 1;
  }
  return inverse;
}

void check_poset_budget(int size, const ComputeOptions& options) {
  if (size > options.max_poset_elements) {
    throw BudgetExceeded("poset size budget (max_poset_elements)", options.max_poset_elements, size);
  }
}

}  // namespace

LabeledPoset LabeledPoset::from_relations(int size, std::vector<std::pair<int, int>> relations,
                                          std::vector<int> labeling) {
  if (size < 0 || size > 64) throw ValidationError("poset size must be in 0..64");
  LabeledPoset poset;
  poset.size_ = size;
  for (std::size_t k = 0; k < relations.size(); ++k) {
    const auto [a, b] = relations[k];
    if (a < 1 || a > size || b < 1 || b > size) {
      throw ValidationError("relation names an element outside 1..p", k + 1);
    }
    if (a == b) throw ValidationError("relation x < x is not allowed", k + 1);
  }
  std::sort(relations.begin(), relations.end());
  relations.erase(std::unique(relations.begin(), relations.end()), relations.end());
  poset.relations_ = std::move(relations);
  poset.inverse_ = validate_labeling(labeling, size);
  poset.labeling_ = std::move(labeling);

  // Transitive closure by repeated propagation; p <= 64 keeps it cheap.
  poset.below_.assign(static_cast<std::size_t>(size), 0);
  for (const auto& [a, b] : poset.relations_) {
    poset.below_[static_cast<std::size_t>(b - 1)] |= std::uint64_t{1} << (a - 1);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < size; ++y) {
      std::uint64_t mask = poset.below_[static_cast<std::size_t>(y)];
      std::uint64_t grown = mask;
      for (int x = 0; x < size; ++x) {
        if (mask >> x & 1U) grown |= poset.below_[static_cast<std::size_t>(x)];
      }
      if (grown != mask) {
        poset.below_[static_cast<std::size_t>(y)] = grown;
        changed = true;
      }
    }
  }
  for (int x = 0; x < size; ++x) {
    if (poset.below_[static_cast<std::size_t>(x)] >> x & 1U) {
      throw ValidationError("relations contain a cycle through element " + std::to_string(x + 1));
    }
  }
  return poset;
}

LabeledPoset LabeledPoset::chain(int size) {
  std::vector<std::pair<int, int>> relations;
  std::vector<int> labeling;
  for (int x = 1; x <= size; ++x) {
    labeling.push_back(x);
    if (x > 1) relations.emplace_back(x - 1, x);
  }
  return from_relations(size, std::move(relations), std::move(labeling));
}

LabeledPoset LabeledPoset::antichain(int size) {
  std::vector<int> labeling;
  for (int x = 1; x <= size; ++x) labeling.push_back(x);
  return from_relations(size, {}, std::move(labeling));
}

bool LabeledPoset::less(int x, int y) const noexcept {
  if (x < 1 || y < 1 || x > size_ || y > size_) return false;
  return (below_[static_cast<std::size_t>(y - 1)] >> (x - 1) & 1U) != 0;
}

bool LabeledPoset::is_natural() const noexcept {
  for (int x = 1; x <= size_; ++x) {
    for (int y = 1; y <= size_; ++y) {
      if (less(x, y) && label(x) > label(y)) return false;
    }
  }
  return true;
}

LabeledPoset LabeledPoset::with_labeling(std::vector<int> labeling) const {
  LabeledPoset copy = *this;
  copy.inverse_ = validate_labeling(labeling, size_);
  copy.labeling_ = std::move(labeling);
  return copy;
}

std::string LabeledPoset::canonical_string() const {
  std::string s = "p=" + std::to_string(size_) + ";rel=";
  for (std::size_t k = 0; k < relations_.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(relations_[k].first) + "<" + std::to_string(relations_[k].second);
  }
  s += ";omega=";
  for (std::size_t k = 0; k < labeling_.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(labeling_[k]);
  }
  return s;
}

std::string LabeledPoset::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_string()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int ferrers_element(const Partition& shape, Cell c) {
  if (!shape.contains(c)) throw ValidationError("cell outside the Ferrers diagram");
  int id = 0;
  for (int i = 1; i < c.row; ++i) id += shape.row_length(i);
  return id + c.column;
}

Cell ferrers_cell(const Partition& shape, int element) {
  if (element < 1 || element > shape.cells()) throw ValidationError("element outside 1..p");
  int i = 1;
  while (element > shape.row_length(i)) element -= shape.row_length(i++);
  return {i, element};
}

LabeledPoset ferrers_poset(const Partition& shape) {
  std::vector<std::pair<int, int>> covers;
  std::vector<int> labeling;
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      const int here = ferrers_element(shape, {i, j});
      labeling.push_back(here);
      if (shape.contains({i + 1, j})) covers.emplace_back(here, ferrers_element(shape, {i + 1, j}));
      if (shape.contains({i, j + 1})) covers.emplace_back(here, here + 1);
    }
  }
  return LabeledPoset::from_relations(shape.cells(), std::move(covers), std::move(labeling));
}

std::vector<int> column_strict_labeling(const Partition& shape) {
  std::vector<int> labeling(static_cast<std::size_t>(shape.cells()));
  int next = 1;
  for (int i = shape.rows(); i >= 1; --i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      labeling[static_cast<std::size_t>(ferrers_element(shape, {i, j}) - 1)] = next++;
    }
  }
  return labeling;
}

bool is_column_strict(const Partition& shape, std::span<const int> labeling) {
  if (static_cast<int>(labeling.size()) != shape.cells()) return false;
  auto at = [&](Cell c) { return labeling[static_cast<std::size_t>(ferrers_element(shape, c) - 1)]; };
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) {
      if (shape.contains({i + 1, j}) && !(at({i, j}) > at({i + 1, j}))) return false;
      if (shape.contains({i, j + 1}) && !(at({i, j}) < at({i, j + 1}))) return false;
    }
  }
  return true;
}

LabeledPoset column_strict_ferrers_poset(const Partition& shape) {
  return ferrers_poset(shape).with_labeling(column_strict_labeling(shape));
}

std::vector<std::vector<int>> linear_extensions(const LabeledPoset& poset,
                                                const ComputeOptions& options) {
  check_poset_budget(poset.size(), options);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::uint64_t placed = 0;
  const int p = poset.size();
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == p) {
      out.push_back(current);
      return;
    }
    for (int x = 1; x <= p; ++x) {
      const std::uint64_t bit = std::uint64_t{1} << (x - 1);
      if ((placed & bit) != 0 || (poset.strictly_below(x) & ~placed) != 0) continue;
      placed |= bit;
      current.push_back(x);
      self(self);
      current.pop_back();
      placed &= ~bit;
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<int>> jordan_holder_set(const LabeledPoset& poset,
                                                const ComputeOptions& options) {
  auto perms = linear_extensions(poset, options);
  for (auto& sigma : perms) {
    for (int& x : sigma) x = poset.label(x);
  }
  return perms;
}

IntPolynomial w_polynomial(const LabeledPoset& poset, const ComputeOptions& options) {
  check_poset_budget(poset.size(), options);
  const auto hist = parallel::tally_jordan_holder_descents(poset, options.jobs);
  return IntPolynomial::from_counts(hist);
}

bool is_poset_partition(const LabeledPoset& poset, std::span<const int> sigma, int bound) {
  if (static_cast<int>(sigma.size()) != poset.size()) return false;
  for (int x = 1; x <= poset.size(); ++x) {
    const int sx = sigma[static_cast<std::size_t>(x - 1)];
    if (sx < 1 || sx > bound) return false;
    for (int y = 1; y <= poset.size(); ++y) {
      if (!poset.less(x, y)) continue;
      const int sy = sigma[static_cast<std::size_t>(y - 1)];
      if (sx < sy) return false;
      if (poset.label(x) > poset.label(y) && sx == sy) return false;
    }
  }
  return true;
}

BigInt order_polynomial_brute_force(const LabeledPoset& poset, int n,
                                    const ComputeOptions& options) {
  if (poset.size() > options.max_brute_force_elements) {
    throw BudgetExceeded("brute-force poset size budget (max_brute_force_elements)",
                         options.max_brute_force_elements, poset.size());
  }
  if (n < 0) throw DomainError("order polynomial argument must be nonnegative");
  const std::uint64_t count = parallel::count_poset_partitions(poset, n, options.jobs);
  BigInt value;
  mpz_import(value.get_mpz_t(), 1, -1, sizeof count, 0, 0, &count);
  return value;
}

BigInt order_polynomial_from_w(const IntPolynomial& w, int p, int n) {
  if (n < 0) throw DomainError("order polynomial argument must be nonnegative");
  if (n == 0) return p == 0 ? BigInt(1) : BigInt(0);
  BigInt total = 0;
  for (int j = 0; j <= w.degree(); ++j) {
    total += w.coefficient(j) * binomial(static_cast<long>(n) - 1 - j + p, p);
  }
  return total;
}

BigInt order_polynomial_value(const LabeledPoset& poset, int n, const ComputeOptions& options) {
  if (poset.size() <= options.max_brute_force_elements) {
    return order_polynomial_brute_force(poset, n, options);
  }
  return order_polynomial_from_w(w_polynomial(poset, options), poset.size(), n);
}

std::vector<Rational> order_polynomial_coefficients(const LabeledPoset& poset,
                                                    const ComputeOptions& options) {
  const int p = poset.size();
  // Newton forward differences at n = 1..p+1, then expand
  // sum_k Delta^k f(1) * C(n-1, k) into monomials.
  std::vector<Rational> diffs;
  for (int n = 1; n <= p + 1; ++n) diffs.emplace_back(order_polynomial_value(poset, n, options));
  std::vector<Rational> table = diffs;
  std::vector<Rational> leading;
  for (int k = 0; k <= p; ++k) {
    leading.push_back(table[0]);
    for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
    table.pop_back();
  }
  std::vector<Rational> result(static_cast<std::size_t>(p) + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // C(n-1, k) in monomials of n
  for (int k = 0; k <= p; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) result[i] += leading[static_cast<std::size_t>(k)] * basis[i];
    // basis <- basis * (n - 1 - k) / (k + 1)
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= basis[i] * (k + 1);
    }
    for (auto& c : next) c /= (k + 1);
    basis = std::move(next);
  }
  for (auto& c : result) c.canonicalize();
  return result;
}

OrderGfReport verify_order_gf(const LabeledPoset& poset, int max_k, const ComputeOptions& options) {
  OrderGfReport report;
  report.w = w_polynomial(poset, options);
  const int p = poset.size();
  report.terms = max_k + 1;
  for (int k = 0; k <= max_k; ++k) {
    BigInt brute = order_polynomial_brute_force(poset, k + 1, options);
    BigInt coefficient = 0;
    for (int j = 0; j <= std::min(k, report.w.degree()); ++j) {
      coefficient += report.w.coefficient(j) * binomial(k - j + p, p);
    }
    if (brute != coefficient && report.first_mismatch < 0) report.first_mismatch = k;
    report.brute_force.push_back(std::move(brute));
    report.series.push_back(std::move(coefficient));
  }
  report.holds = report.first_mismatch < 0;
  return report;
}

std::string OrderGfReport::describe(const std::string& case_key) const {
  std::string s = "ordergf " + case_key + (holds ? " PASS" : " FAIL") + " W=[" + w.join(",") +
                  "] k=0.." + std::to_string(terms - 1);
  if (first_mismatch >= 0) {
    const auto k = static_cast<std::size_t>(first_mismatch);
    s += " first mismatch at k=" + std::to_string(first_mismatch) + ": Omega=" +
         brute_force[k].get_str() + " series=" + series[k].get_str();
  }
  return s;
}

IdentityReport verify_ferrers_eulerian(const Partition& shape, std::span<const int> labeling,
                                       const ComputeOptions& options) {
  std::vector<int> omega = labeling.empty() ? column_strict_labeling(shape)
                                            : std::vector<int>(labeling.begin(), labeling.end());
  const LabeledPoset poset = ferrers_poset(shape).with_labeling(std::move(omega));
  return compare_polynomials("eq33", "shape=" + shape.to_string(), w_polynomial(poset, options),
                             syt_descent_polynomial(shape, options));
}

}  // namespace narayana
