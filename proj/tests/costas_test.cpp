#include <gtest/gtest.h>

#include "oracles.hpp"
#include "typea/costas.hpp"

using namespace typea;

TEST(CostasTest, SmallOrdersAreAllCostas) {
  for (int n = 1; n <= 2; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      EXPECT_TRUE(is_costas(w));
      EXPECT_TRUE(is_costas_via_roots(w));
    });
}

TEST(CostasTest, PredicateExamples) {
  EXPECT_FALSE(is_costas(Permutation({1, 2, 3})));
  EXPECT_TRUE(is_costas(Permutation({2, 1, 3})));
  EXPECT_FALSE(is_costas_via_roots(Permutation::identity(3)));
  EXPECT_TRUE(is_costas_via_roots(Permutation({2, 1, 3})));
}

TEST(CostasTest, PredicateMatchesPairwiseDefinition) {
  for (int n = 1; n <= 7; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      ASSERT_EQ(is_costas(w), oracle::costas_by_pairs(oracle::to_vec(w)))
          << format_one_line(w);
    });
}

TEST(CostasTest, RootFormulationIsEquivalent) {
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      ASSERT_EQ(is_costas(w), is_costas_via_roots(w)) << format_one_line(w);
    });
}

// Counts from the pairwise brute force; 1, 2, 4, 12, 40, 116, 200 for n = 1..7.
TEST(CostasTest, EnumerationMatchesBruteForce) {
  const std::vector<std::size_t> expected{1, 2, 4, 12, 40, 116, 200};
  for (int n = 1; n <= 7; ++n) {
    std::vector<Permutation> brute;
    for_each_permutation(n, [&](const Permutation& w) {
      if (oracle::costas_by_pairs(oracle::to_vec(w))) brute.push_back(w);
    });
    const auto found = enumerate_costas(n);
    EXPECT_EQ(found, brute) << "n = " << n;
    EXPECT_EQ(found.size(), expected[n - 1]) << "n = " << n;
  }
  EXPECT_THROW(enumerate_costas(0), range_error);
}

TEST(CostasTest, DihedralSymmetriesPreserveCostas) {
  for (int n = 1; n <= 6; ++n)
    for (const Permutation& w : enumerate_costas(n)) {
      EXPECT_TRUE(is_costas(reversed(w)));
      EXPECT_TRUE(is_costas(complemented(w)));
      EXPECT_TRUE(is_costas(inverse(w)));
    }
}

TEST(CostasTest, ActionRespectsSign) {
  for (int n = 2; n <= 5; ++n)
    for_each_permutation(n, [n](const Permutation& w) {
      for (const Root& b : all_roots(n))
        ASSERT_EQ(height(act(w, b.negated())), -height(act(w, b)));
    });
}

TEST(CostasTest, VerifyProposition) {
  const std::vector<std::size_t> expected{4, 12, 40, 116, 200};
  for (int n = 3; n <= 7; ++n) {
    const auto report = verify_proposition(n);
    EXPECT_TRUE(report.proposition_pass()) << "n = " << n;
    EXPECT_EQ(report.costas_count, expected[n - 3]);
  }
  EXPECT_THROW(verify_proposition(2), range_error);
  EXPECT_THROW(verify_proposition(8), range_error);
}

// Every equal-height pair of roots, positive or not, on every Costas array.
TEST(CostasTest, PropositionHoldsOnAllRootPairs) {
  for (int n = 3; n <= 6; ++n) {
    const auto roots = all_roots(n);
    for (const Permutation& w : enumerate_costas(n))
      for (std::size_t a = 0; a < roots.size(); ++a)
        for (std::size_t b = a + 1; b < roots.size(); ++b)
          if (height(roots[a]) == height(roots[b])) {
            ASSERT_NE(height(act(w, roots[a])), height(act(w, roots[b])));
          }
  }
}

TEST(CostasTest, NonCostasArraysProduceWitnesses) {
  // The proposition is sharp: every non-Costas permutation has a witness pair.
  for_each_permutation(5, [](const Permutation& w) {
    if (is_costas(w)) return;
    bool witness = false;
    const auto roots = positive_roots(5);
    for (std::size_t a = 0; a < roots.size() && !witness; ++a)
      for (std::size_t b = a + 1; b < roots.size() && !witness; ++b)
        witness = height(roots[a]) == height(roots[b]) &&
                  height(act(w, roots[a])) == height(act(w, roots[b]));
    EXPECT_TRUE(witness) << format_one_line(w);
  });
}

TEST(CostasTest, ReportJsonShape) {
  const auto j = to_json(verify_proposition(5));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"rank", "costas_count", "proposition_pass",
                                            "counterexamples", "elapsed"}));
  EXPECT_EQ(j["costas_count"], 40);
  EXPECT_EQ(j["proposition_pass"], true);
}
