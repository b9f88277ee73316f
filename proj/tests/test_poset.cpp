#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "narayana/errors.hpp"
#include "narayana/generating.hpp"
#include "narayana/poset.hpp"
#include "narayana/reference.hpp"
#include "oracles.hpp"

using narayana::BigInt;
using narayana::Cell;
using narayana::IntPolynomial;
using narayana::LabeledPoset;
using narayana::Partition;

TEST(Poset, ClosureAndValidation) {
  auto p = LabeledPoset::from_relations(3, {{1, 2}, {2, 3}}, {1, 2, 3});
  EXPECT_TRUE(p.less(1, 3));
  EXPECT_FALSE(p.less(3, 1));
  EXPECT_TRUE(p.less_equal(2, 2));
  EXPECT_TRUE(p.is_natural());
  EXPECT_THROW(LabeledPoset::from_relations(2, {{1, 2}, {2, 1}}, {1, 2}),
               narayana::ValidationError);
  EXPECT_THROW(LabeledPoset::from_relations(2, {{1, 3}}, {1, 2}), narayana::ValidationError);
  EXPECT_THROW(LabeledPoset::from_relations(2, {}, {1, 1}), narayana::ValidationError);
  EXPECT_FALSE(p.with_labeling({3, 2, 1}).is_natural());
}

TEST(Poset, HashIsStableAndOrderSensitive) {
  auto a = LabeledPoset::from_relations(3, {{1, 2}, {1, 3}}, {1, 2, 3});
  auto b = LabeledPoset::from_relations(3, {{1, 3}, {1, 2}, {1, 2}}, {1, 2, 3});
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  EXPECT_NE(a.hash(), a.with_labeling({2, 1, 3}).hash());
}

TEST(Poset, FerrersNumbering) {
  Partition shape({4, 2, 1});
  auto p = narayana::ferrers_poset(shape);
  EXPECT_EQ(p.size(), 7);
  EXPECT_EQ(narayana::ferrers_element(shape, Cell{2, 2}), 6);
  EXPECT_EQ(narayana::ferrers_cell(shape, 7), (Cell{3, 1}));
  EXPECT_TRUE(p.less(1, 6));
  EXPECT_FALSE(p.less(2, 5));
}

TEST(Poset, ColumnStrictLabeling) {
  for (const auto& shape : narayana::partitions_up_to(9)) {
    auto omega = narayana::column_strict_labeling(shape);
    EXPECT_TRUE(narayana::is_column_strict(shape, omega)) << shape.to_string();
  }
  Partition shape({2, 2});
  const std::vector<int> natural{1, 2, 3, 4};
  EXPECT_FALSE(narayana::is_column_strict(shape, natural));
}

TEST(Poset, LinearExtensionsMatchBruteForce) {
  for (const auto& shape : narayana::partitions_up_to(7)) {
    auto p = narayana::ferrers_poset(shape);
    auto got = narayana::linear_extensions(p);
    auto expected = oracle::linear_extensions(p.size(), [&](int x, int y) { return p.less(x, y); });
    EXPECT_EQ(got, expected) << shape.to_string();
  }
}

TEST(Poset, AntichainW) {
  EXPECT_EQ(narayana::w_polynomial(LabeledPoset::antichain(3)), (IntPolynomial{1, 4, 1}));
  EXPECT_EQ(narayana::w_polynomial(LabeledPoset::chain(5)), IntPolynomial{1});
  EXPECT_EQ(narayana::w_polynomial(LabeledPoset::chain(3).with_labeling({3, 2, 1})),
            (IntPolynomial{0, 0, 1}));
}

TEST(Poset, WOfShapeFourTwoOne) {
  auto w = narayana::w_polynomial(narayana::column_strict_ferrers_poset(Partition({4, 2, 1})));
  EXPECT_EQ(w, (IntPolynomial{0, 0, 15, 20}));
}

TEST(Poset, FerrersEulerianForAllShapes) {
  for (const auto& shape : narayana::partitions_up_to(9)) {
    auto r = narayana::verify_ferrers_eulerian(shape);
    EXPECT_TRUE(r.holds) << r.describe();
  }
}

TEST(Poset, EveryColumnStrictLabelingGivesTheSameW) {
  // All column-strict labelings of (3,2) and (2,2,1), found by brute force.
  for (const auto& shape : {Partition({3, 2}), Partition({2, 2, 1})}) {
    std::vector<int> omega(static_cast<std::size_t>(shape.cells()));
    std::iota(omega.begin(), omega.end(), 1);
    auto expected = narayana::syt_descent_polynomial(shape);
    int found = 0;
    do {
      if (!narayana::is_column_strict(shape, omega)) continue;
      ++found;
      auto r = narayana::verify_ferrers_eulerian(shape, omega);
      EXPECT_TRUE(r.holds) << r.describe();
    } while (std::next_permutation(omega.begin(), omega.end()));
    EXPECT_GT(found, 1);
  }
}

TEST(Poset, NaturalLabelingBreaksTheIdentity) {
  auto shape = Partition({2, 2});
  const std::vector<int> natural{1, 2, 3, 4};
  auto r = narayana::verify_ferrers_eulerian(shape, natural);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.lhs, (IntPolynomial{1, 1}));
  EXPECT_EQ(r.rhs, (IntPolynomial{0, 1, 1}));
}

TEST(Poset, PosetPartitionConditions) {
  auto p = LabeledPoset::from_relations(2, {{1, 2}}, {2, 1});
  const std::vector<int> equal{1, 1};
  const std::vector<int> strict{2, 1};
  EXPECT_FALSE(narayana::is_poset_partition(p, equal, 2));
  EXPECT_TRUE(narayana::is_poset_partition(p, strict, 2));
  EXPECT_FALSE(narayana::is_poset_partition(p, strict, 1));
  auto natural = LabeledPoset::chain(2);
  EXPECT_TRUE(narayana::is_poset_partition(natural, equal, 2));
  const std::vector<int> rising{1, 2};
  EXPECT_FALSE(narayana::is_poset_partition(natural, rising, 2));
}

TEST(Poset, OrderPolynomialMatchesNaiveCount) {
  std::vector<LabeledPoset> posets{LabeledPoset::antichain(3), LabeledPoset::chain(3),
                                   LabeledPoset::chain(3).with_labeling({2, 3, 1})};
  for (const auto& shape : narayana::partitions_up_to(5)) {
    posets.push_back(narayana::column_strict_ferrers_poset(shape));
    posets.push_back(narayana::ferrers_poset(shape));
  }
  for (const auto& p : posets) {
    auto w = narayana::w_polynomial(p);
    for (int n = 0; n <= 4; ++n) {
      BigInt naive = narayana::reference::order_polynomial(p, n);
      EXPECT_EQ(narayana::order_polynomial_brute_force(p, n), naive) << p.canonical_string();
      EXPECT_EQ(narayana::order_polynomial_from_w(w, p.size(), n), naive) << p.canonical_string();
    }
  }
}

TEST(Poset, ClosedFormOrderPolynomials) {
  // Antichain of 3: n^3 choices. Natural chain of 3: multisets, C(n+2, 3).
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(narayana::order_polynomial_brute_force(LabeledPoset::antichain(3), n), n * n * n);
    EXPECT_EQ(narayana::order_polynomial_brute_force(LabeledPoset::chain(3), n),
              narayana::binomial(n + 2, 3));
  }
}

TEST(Poset, OrderGfSeries) {
  auto r = narayana::verify_order_gf(LabeledPoset::antichain(3), 10);
  EXPECT_TRUE(r.holds) << r.describe("antichain3");
  EXPECT_EQ(r.terms, 11);
  EXPECT_EQ(r.brute_force[2], 27);
  for (const auto& shape : narayana::partitions_up_to(6)) {
    auto g = narayana::verify_order_gf(narayana::column_strict_ferrers_poset(shape), 6);
    EXPECT_TRUE(g.holds) << g.describe(shape.to_string());
  }
}

TEST(Poset, InterpolatedOrderPolynomial) {
  auto coeffs = narayana::order_polynomial_coefficients(LabeledPoset::antichain(3));
  ASSERT_EQ(coeffs.size(), 4u);
  EXPECT_EQ(coeffs[0], 0);
  EXPECT_EQ(coeffs[1], 0);
  EXPECT_EQ(coeffs[2], 0);
  EXPECT_EQ(coeffs[3], 1);
  // Natural chain of 2: C(n+1, 2) = n/2 + n^2/2.
  auto chain = narayana::order_polynomial_coefficients(LabeledPoset::chain(2));
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_EQ(chain[1], narayana::Rational(1, 2));
  EXPECT_EQ(chain[2], narayana::Rational(1, 2));
}

TEST(Poset, Budgets) {
  narayana::ComputeOptions opts;
  opts.max_poset_elements = 4;
  EXPECT_THROW(narayana::linear_extensions(LabeledPoset::antichain(5), opts),
               narayana::BudgetExceeded);
  opts.max_brute_force_elements = 2;
  EXPECT_THROW(narayana::order_polynomial_brute_force(LabeledPoset::chain(3), 2, opts),
               narayana::BudgetExceeded);
  // Above the brute-force budget the value comes from W.
  opts.max_poset_elements = 12;
  EXPECT_EQ(narayana::order_polynomial_value(LabeledPoset::chain(3), 2, opts), 4);
}
