#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "narayana/bigint.hpp"
#include "narayana/options.hpp"
#include "narayana/partition.hpp"
#include "narayana/polynomial.hpp"
#include "narayana/report.hpp"

namespace narayana {

/// Finite poset on elements 1..p with a labeling omega: elements -> 1..p.
/// The order is the reflexive-transitive closure of the given relations.
/// Supports up to 64 elements.
class LabeledPoset {
 public:
  /// `relations` are pairs (lower, upper); `labeling[x-1]` is omega(x).
  /// Throws ValidationError on a cycle, an out-of-range element, or a
  /// labeling that is not a bijection onto 1..p.
  static LabeledPoset from_relations(int size, std::vector<std::pair<int, int>> relations,
                                     std::vector<int> labeling);
  /// 1 < 2 < ... < p, omega(i) = i.
  static LabeledPoset chain(int size);
  /// p incomparable elements, omega(i) = i.
  static LabeledPoset antichain(int size);

  int size() const noexcept { return size_; }
  /// The generating relations, deduplicated and sorted.
  const std::vector<std::pair<int, int>>& relations() const noexcept { return relations_; }
  std::span<const int> labeling() const noexcept { return labeling_; }
  int label(int x) const { return labeling_.at(static_cast<std::size_t>(x - 1)); }
  int element_with_label(int l) const { return inverse_.at(static_cast<std::size_t>(l - 1)); }

  bool less(int x, int y) const noexcept;
  bool less_equal(int x, int y) const noexcept { return x == y || less(x, y); }
  /// Bit x-1 set iff x < y.
  std::uint64_t strictly_below(int y) const noexcept {
    return below_[static_cast<std::size_t>(y - 1)];
  }

  /// x <= y implies omega(x) <= omega(y).
  bool is_natural() const noexcept;

  /// Same order, new labeling (validated).
  LabeledPoset with_labeling(std::vector<int> labeling) const;

  /// "p=<p>;rel=<a><<b>,...;omega=<l1>,..." over sorted relations.
  std::string canonical_string() const;
  /// 16 hex digits (FNV-1a 64) of canonical_string(); stable across runs.
  std::string hash() const;

 private:
  LabeledPoset() = default;
  int size_ = 0;
  std::vector<std::pair<int, int>> relations_;
  std::vector<int> labeling_;
  std::vector<int> inverse_;
  std::vector<std::uint64_t> below_;
};

/// The Ferrers poset P_lambda: cells under the product order, numbered
/// row-major 1..p, with the row-major (natural) labeling.
LabeledPoset ferrers_poset(const Partition& shape);
/// Element id of cell (i, j) in ferrers_poset(shape).
int ferrers_element(const Partition& shape, Cell c);
Cell ferrers_cell(const Partition& shape, int element);

/// Column-strict labeling: omega(i,j) > omega(i+1,j) and omega(i,j) < omega(i,j+1).
/// Canonical choice: number the bottom row first, each row left to right.
/// Returned in row-major cell order.
std::vector<int> column_strict_labeling(const Partition& shape);
bool is_column_strict(const Partition& shape, std::span<const int> labeling);
/// ferrers_poset(shape) carrying column_strict_labeling(shape).
LabeledPoset column_strict_ferrers_poset(const Partition& shape);

/// Every linear extension sigma_1 ... sigma_p (minimal elements first),
/// lexicographic by element id. Throws BudgetExceeded above
/// options.max_poset_elements.
std::vector<std::vector<int>> linear_extensions(const LabeledPoset& poset,
                                                const ComputeOptions& options = {});

/// { omega(sigma_1) ... omega(sigma_p) }, aligned with linear_extensions().
std::vector<std::vector<int>> jordan_holder_set(const LabeledPoset& poset,
                                                const ComputeOptions& options = {});

/// W(P, omega; t) = sum over the Jordan-Holder set of t^{des(pi)}.
IntPolynomial w_polynomial(const LabeledPoset& poset, const ComputeOptions& options = {});

/// True iff sigma (sigma[x-1] for element x) is a (P, omega)-partition with
/// values in 1..bound: x <= y forces sigma(x) >= sigma(y), strictly when
/// omega(x) > omega(y).
bool is_poset_partition(const LabeledPoset& poset, std::span<const int> sigma, int bound);

/// Omega(P, omega; n) by exhaustive search with constraint propagation.
/// Throws BudgetExceeded above options.max_brute_force_elements.
BigInt order_polynomial_brute_force(const LabeledPoset& poset, int n,
                                    const ComputeOptions& options = {});

/// Omega(P, omega; n) = sum_j w_j C(n - 1 - j + p, p) for n >= 1, read off the
/// series W(t) / (1 - t)^{p+1}. Omega(0) is 0 for p >= 1.
BigInt order_polynomial_from_w(const IntPolynomial& w, int p, int n);

/// Brute force up to max_brute_force_elements, the W series beyond.
BigInt order_polynomial_value(const LabeledPoset& poset, int n,
                              const ComputeOptions& options = {});

/// Monomial coefficients (lowest degree first) of Omega(P, omega; n) as a
/// polynomial in n, interpolated through n = 1..p+1.
std::vector<Rational> order_polynomial_coefficients(const LabeledPoset& poset,
                                                    const ComputeOptions& options = {});

struct OrderGfReport {
  bool holds = false;
  int terms = 0;           // k = 0..terms-1 checked
  IntPolynomial w;
  std::vector<BigInt> brute_force;  // Omega(k+1)
  std::vector<BigInt> series;       // coefficient of t^k in W / (1-t)^{p+1}
  int first_mismatch = -1;

  std::string describe(const std::string& case_key) const;
};

/// Checks Omega(P, omega; k+1) = [t^k] W(t) / (1 - t)^{p+1} for 0 <= k <= max_k,
/// with Omega counted by brute force.
OrderGfReport verify_order_gf(const LabeledPoset& poset, int max_k,
                              const ComputeOptions& options = {});

/// W of the Ferrers poset under `labeling` (canonical column-strict when
/// empty) against the SYT descent polynomial of the shape.
IdentityReport verify_ferrers_eulerian(const Partition& shape, std::span<const int> labeling = {},
                                       const ComputeOptions& options = {});

}  // namespace narayana
