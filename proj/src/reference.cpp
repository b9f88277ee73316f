#include "narayana/reference.hpp"

#include <vector>

#include "narayana/bijections.hpp"
#include "narayana/lattice_word.hpp"
#include "narayana/tableau.hpp"

namespace narayana::reference {

namespace {

// Reference runs are never budget-limited; callers choose small cases.
ComputeOptions unlimited() {
  ComputeOptions options;
  options.max_cells = 1 << 20;
  options.max_poset_elements = 64;
  return options;
}

class Tally {
 public:
  void add(int k) {
    if (static_cast<std::size_t>(k) >= counts_.size()) counts_.resize(static_cast<std::size_t>(k) + 1, 0);
    ++counts_[static_cast<std::size_t>(k)];
  }
  IntPolynomial polynomial() const { return IntPolynomial::from_counts(counts_); }

 private:
  std::vector<std::uint64_t> counts_;
};

template <class Stat>
IntPolynomial over_words(int n, int m, const Stat& stat) {
  Tally tally;
  for_each_lattice_word(
      n, m,
      [&](const LatticeWord& w) {
        tally.add(stat(w));
        return true;
      },
      unlimited());
  return tally.polynomial();
}

}  // namespace

IntPolynomial narayana_polynomial(int n, int m) {
  return over_words(n, m, [](const LatticeWord& w) { return word_descents(w); });
}

IntPolynomial word_ascent_polynomial(int n, int m) {
  return over_words(n, m, [](const LatticeWord& w) { return word_ascents(w); });
}

IntPolynomial path_ascent_polynomial(int n, int m) {
  return over_words(n, m, [](const LatticeWord& w) { return path_ascents(word_to_path(w)); });
}

IntPolynomial path_descent_polynomial(int n, int m) {
  return over_words(n, m, [](const LatticeWord& w) { return path_descents(word_to_path(w)); });
}

IntPolynomial syt_descent_polynomial(const Partition& shape) {
  Tally tally;
  for_each_syt(
      shape,
      [&](const StandardTableau& t) {
        tally.add(tableau_descents(t));
        return true;
      },
      unlimited());
  return tally.polynomial();
}

IntPolynomial w_polynomial(const LabeledPoset& poset) {
  Tally tally;
  for (const auto& pi : jordan_holder_set(poset, unlimited())) tally.add(sequence_descents(pi));
  return tally.polynomial();
}

BigInt order_polynomial(const LabeledPoset& poset, int n) {
  const int p = poset.size();
  if (p == 0) return 1;
  if (n < 1) return 0;
  std::vector<int> sigma(static_cast<std::size_t>(p), 1);
  BigInt count = 0;
  while (true) {
    if (is_poset_partition(poset, sigma, n)) ++count;
    std::size_t i = 0;
    while (i < sigma.size() && sigma[i] == n) sigma[i++] = 1;
    if (i == sigma.size()) break;
    ++sigma[i];
  }
  return count;
}

}  // namespace narayana::reference
