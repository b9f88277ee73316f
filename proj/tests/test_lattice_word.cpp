#include <gtest/gtest.h>

#include <set>

#include "narayana/errors.hpp"
#include "narayana/lattice_word.hpp"
#include "oracles.hpp"

using narayana::BallotPath;
using narayana::LatticeWord;

TEST(LatticeWord, Recognition) {
  const std::vector<int> good{1, 2, 1, 1, 1, 3, 2, 2, 3, 2, 3, 3};
  EXPECT_TRUE(narayana::is_lattice_word(good, 4, 3));
  const std::vector<int> bad{2, 1};
  EXPECT_FALSE(narayana::is_lattice_word(bad, 1, 2));
  const std::vector<int> short_weight{1, 2, 1};
  EXPECT_FALSE(narayana::is_lattice_word(short_weight, 2, 2));
}

TEST(LatticeWord, OutOfRangeSymbolReportsPosition) {
  const std::vector<int> w{1, 2, 4, 1};
  try {
    narayana::is_lattice_word(w, 2, 3);
    FAIL();
  } catch (const narayana::ValidationError& e) {
    ASSERT_TRUE(e.has_position());
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(LatticeWord, ParseAndStatistics) {
  auto w = LatticeWord::parse("121113223233", 4, 3);
  EXPECT_EQ(w.size(), 12u);
  EXPECT_EQ(w[6], 3);
  EXPECT_EQ(narayana::word_ascents(w), 4);
  EXPECT_EQ(narayana::word_descents(w), 3);
  EXPECT_EQ(w.to_string(), "121113223233");
  EXPECT_EQ(LatticeWord::parse("1,2,1,2", 2, 2).to_string(), "1212");
  EXPECT_THROW(LatticeWord::parse("2112", 2, 2), narayana::ValidationError);
}

TEST(LatticeWord, SequenceStatistics) {
  const std::vector<int> s{4, 2, 1, 5, 6, 7, 3};
  EXPECT_EQ(narayana::sequence_descents(s), 3);
  EXPECT_EQ(narayana::sequence_ascents(s), 3);
  EXPECT_EQ(narayana::sequence_ascents(std::span<const int>{}), 0);
}

TEST(LatticeWord, EnumerationMatchesBruteForce) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n * m <= 12; ++n) {
      auto words = narayana::enumerate_lattice_words(n, m);
      auto expected = oracle::lattice_words(n, m);
      ASSERT_EQ(words.size(), expected.size()) << n << "," << m;
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::vector<int> got(words[i].symbols().begin(), words[i].symbols().end());
        ASSERT_EQ(got, expected[i]);
      }
    }
  }
}

TEST(LatticeWord, DegenerateWeights) {
  EXPECT_EQ(narayana::enumerate_lattice_words(0, 3).size(), 1u);
  EXPECT_EQ(narayana::enumerate_lattice_words(3, 0).size(), 1u);
  EXPECT_EQ(narayana::enumerate_lattice_words(0, 3).front().size(), 0u);
  EXPECT_EQ(narayana::enumerate_lattice_words(5, 1).size(), 1u);
}

TEST(LatticeWord, EarlyStop) {
  int seen = 0;
  narayana::for_each_lattice_word(3, 3, [&](const LatticeWord&) { return ++seen < 4; });
  EXPECT_EQ(seen, 4);
}

TEST(LatticeWord, CellBudget) {
  narayana::ComputeOptions opts;
  opts.max_cells = 10;
  EXPECT_THROW(narayana::enumerate_lattice_words(4, 3, opts), narayana::BudgetExceeded);
  EXPECT_NO_THROW(narayana::enumerate_lattice_words(5, 2, opts));
}

TEST(BallotPath, Validation) {
  EXPECT_NO_THROW(BallotPath::from_steps({2, 1, 2, 1}, 2, 2));
  EXPECT_THROW(BallotPath::from_steps({1, 2, 2, 1}, 2, 2), narayana::ValidationError);
  EXPECT_THROW(BallotPath::from_steps({2, 2, 1}, 2, 2), narayana::ValidationError);
  EXPECT_THROW(BallotPath::from_steps({3, 1}, 1, 2), narayana::ValidationError);
}

TEST(BallotPath, Statistics) {
  auto p = BallotPath::from_steps({3, 2, 3, 3, 3, 1, 2, 2, 1, 2, 1, 1}, 4, 3);
  EXPECT_EQ(narayana::path_ascents(p), 3);
  EXPECT_EQ(narayana::path_descents(p), 4);
}

TEST(BallotPath, EnumerationIsSortedAndMatchesWordCount) {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n * m <= 12; ++n) {
      auto paths = narayana::enumerate_ballot_paths(n, m);
      EXPECT_EQ(paths.size(), oracle::lattice_words(n, m).size());
      for (std::size_t i = 1; i < paths.size(); ++i) {
        auto a = paths[i - 1].steps();
        auto b = paths[i].steps();
        ASSERT_TRUE(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
      }
    }
  }
}
