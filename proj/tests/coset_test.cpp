#include <map>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "typea/coset.hpp"

using namespace typea;

TEST(CosetTest, ParabolicContext) {
  const ParabolicContext ctx(6);
  EXPECT_EQ(ctx.generators(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(ctx.subgroup_order(), 24u);
  EXPECT_EQ(ctx.coset_count(), 30u);
  EXPECT_EQ(ctx.elements().size(), 24u);
  EXPECT_TRUE(ParabolicContext(3).generators().empty());
  EXPECT_THROW(ParabolicContext(2), range_error);

  // W_J is generated by the simple reflections in J.
  for (int n = 3; n <= 6; ++n) {
    const ParabolicContext c(n);
    std::set<Permutation> generated{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& w : frontier)
        for (int g : c.generators()) {
          auto x = w * simple_reflection(n, g);
          if (generated.insert(x).second) next.push_back(x);
        }
      frontier = std::move(next);
    }
    const auto elems = c.elements();
    EXPECT_EQ(std::set<Permutation>(elems.begin(), elems.end()), generated);
    for (const auto& u : elems) EXPECT_TRUE(c.contains(u));
  }
}

TEST(CosetTest, MaxRepExamples) {
  EXPECT_EQ(format_one_line(max_rep(Root(2, 4, 6), 6)), "653124");
  EXPECT_EQ(format_one_line(max_rep(Root(1, 2, 3), 3)), "312");
  EXPECT_EQ(format_one_line(max_rep(Root(5, 6, 6), 6)), "432156");
  EXPECT_THROW(max_rep(Root(1, 2, 5), 6), rank_mismatch);
  EXPECT_THROW(max_rep(Root(1, 2, 2), 2), range_error);
}

TEST(CosetTest, MinRepExamples) {
  EXPECT_EQ(format_one_line(min_rep(Root(2, 4, 6), 6)), "135624");
  EXPECT_EQ(format_one_line(min_rep(Root(1, 2, 3), 3)), "312");
  EXPECT_EQ(min_rep(Root(5, 6, 6), 6), Permutation::identity(6));
}

TEST(CosetTest, CosetOf) {
  EXPECT_EQ(coset_of(parse_one_line("624315", 6)), CosetId(1, 5, 6));
  EXPECT_EQ(coset_of(parse_one_line("653124", 6)), CosetId(2, 4, 6));
  EXPECT_EQ(coset_of(Permutation::identity(6)), CosetId(5, 6, 6));
  EXPECT_THROW(coset_of(Permutation::identity(2)), range_error);
}

TEST(CosetTest, CosetOfIsConstantOnLeftCosets) {
  for (int n = 3; n <= 5; ++n) {
    const auto wj = ParabolicContext(n).elements();
    for_each_permutation(n, [&](const Permutation& w) {
      for (const auto& u : wj) ASSERT_EQ(coset_of(w * u), coset_of(w));
    });
  }
}

TEST(CosetTest, StatisticExamples) {
  EXPECT_EQ(statistic_nJ(Root(2, 4, 6), 6), 11);
  EXPECT_EQ(statistic_nJ(Root(1, 2, 3), 3), 2);
  // 432156 has the six inversions among 4,3,2,1 and none involving 5, 6.
  EXPECT_EQ(statistic_nJ(Root(5, 6, 6), 6), 6);
}

TEST(CosetTest, CosetCount) {
  EXPECT_EQ(coset_count(6), 30u);
  EXPECT_EQ(coset_count(3), 6u);
  EXPECT_EQ(coset_count(5), 20u);
  EXPECT_THROW(coset_count(2), range_error);
  for (int n = 3; n <= 6; ++n) {
    std::set<CosetId> seen;
    for_each_permutation(n, [&](const Permutation& w) { seen.insert(coset_of(w)); });
    EXPECT_EQ(seen.size(), coset_count(n)) << "n = " << n;
    EXPECT_EQ(factorial(n) / ParabolicContext(n).subgroup_order(), coset_count(n));
  }
}

TEST(CosetTest, RootCosetBijection) {
  for (int n = 3; n <= 7; ++n) {
    std::set<CosetId> image;
    for (const Root& r : all_roots(n)) {
      const CosetId c = coset_of(max_rep(r, n));
      ASSERT_EQ(c, CosetId(r));
      ASSERT_EQ(coset_of(min_rep(r, n)), c);
      image.insert(c);
    }
    EXPECT_EQ(image.size(), static_cast<std::size_t>(n * (n - 1)));
  }
}

// Scan every element of every coset: max_rep is the unique longest element
// and min_rep the unique shortest.
TEST(CosetTest, RepresentativesAreExtremal) {
  for (int n = 3; n <= 6; ++n)
    for (const Root& r : all_roots(n)) {
      const auto hi = oracle::to_vec(max_rep(r, n));
      const auto lo = oracle::to_vec(min_rep(r, n));
      const int nj = statistic_nJ(r, n);
      const int lmin = length(min_rep(r, n));
      for (const auto& u : oracle::coset_elements(hi)) {
        const int l = oracle::inversions(u);
        ASSERT_LE(l, nj);
        ASSERT_GE(l, lmin);
        if (l == nj) { ASSERT_EQ(u, hi); }
        if (l == lmin) { ASSERT_EQ(u, lo); }
      }
    }
}

TEST(CosetTest, MinMaxDuality) {
  for (int n = 3; n <= 7; ++n) {
    const ParabolicContext ctx(n);
    EXPECT_EQ(ctx.longest_length(), (n - 2) * (n - 3) / 2);
    for (const Root& r : all_roots(n))
      ASSERT_EQ(length(max_rep(r, n)) - length(min_rep(r, n)), ctx.longest_length());
  }
}

TEST(CosetTest, EqualStatisticImpliesDifferentHeight) {
  for (int n = 3; n <= 8; ++n) {
    const auto roots = all_roots(n);
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = a + 1; b < roots.size(); ++b)
        if (statistic_nJ(roots[a], n) == statistic_nJ(roots[b], n)) {
          ASSERT_NE(height(roots[a]), height(roots[b]))
              << format_root(roots[a]) << " " << format_root(roots[b]);
        }
  }
}

TEST(CosetTest, FixedRootsCount) {
  EXPECT_EQ(fixed_roots_count(Permutation::identity(6)), 30);
  EXPECT_EQ(fixed_roots_count(simple_reflection(3, 1)), 0);
  EXPECT_EQ(fixed_roots_count(Permutation({2, 3, 4, 5, 1})), 0);
  EXPECT_EQ(fixed_roots_count(simple_reflection(5, 2)), 6);  // points 1,4,5
}

TEST(CosetTest, FixedCosetsCount) {
  EXPECT_EQ(fixed_cosets_count(Permutation::identity(5)), 20);
  EXPECT_EQ(fixed_cosets_count(simple_reflection(3, 1)), 0);
  EXPECT_THROW(fixed_cosets_count(Permutation::identity(2)), range_error);
}

// Class function check on S_4: same value on every element of a class and
// equal to fixed-point pairs f(f-1) where f is the number of fixed points.
TEST(CosetTest, CharacterTableOnS4) {
  std::map<std::vector<int>, std::set<int>> by_type;
  for_each_permutation(4, [&](const Permutation& w) {
    std::vector<int> type;
    std::vector<bool> seen(5, false);
    int fixed = 0;
    for (int k = 1; k <= 4; ++k) {
      if (w(k) == k) ++fixed;
      if (seen[k]) continue;
      int len = 0;
      for (int x = k; !seen[x]; x = w(x)) seen[x] = true, ++len;
      type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    const int cosets = fixed_cosets_count(w);
    EXPECT_EQ(cosets, fixed * (fixed - 1));
    EXPECT_EQ(cosets, fixed_roots_count(w));
    by_type[type].insert(cosets);
  });
  EXPECT_EQ(by_type.size(), 5u);
  for (const auto& [type, values] : by_type) EXPECT_EQ(values.size(), 1u);
}

TEST(CosetTest, ProbeChoiceDoesNotMatter) {
  for (int n = 3; n <= 5; ++n)
    for_each_permutation(n, [](const Permutation& w) {
      ASSERT_EQ(fixed_cosets_count(w, CosetProbe::minimal),
                fixed_cosets_count(w, CosetProbe::maximal));
    });
}

TEST(CosetTest, ConjugacyClassRepresentatives) {
  // p(3..7)
  const std::map<int, std::size_t> partitions{{3, 3}, {4, 5}, {5, 7}, {6, 11}, {7, 15}};
  for (const auto& [n, count] : partitions)
    EXPECT_EQ(conjugacy_class_representatives(n).size(), count);
  const auto reps = conjugacy_class_representatives(4);
  EXPECT_EQ(reps.front(), Permutation({2, 3, 4, 1}));
  EXPECT_EQ(reps.back(), Permutation::identity(4));
}

TEST(CosetTest, VerifyCharacterIdentity) {
  for (int n = 3; n <= 7; ++n) {
    const auto report = verify_character_identity(n);
    EXPECT_TRUE(report.pass()) << "n = " << n;
    EXPECT_EQ(report.check, "character");
    EXPECT_EQ(report.rank, n);
  }
  EXPECT_THROW(verify_character_identity(2), range_error);
  EXPECT_THROW(verify_character_identity(8), range_error);
  EXPECT_TRUE(verify_character_identity(8, true).pass());
}

TEST(CosetTest, ReportJsonShape) {
  const auto j = to_json(verify_character_identity(4));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"check", "rank", "pass", "counterexamples", "elapsed"}));
  EXPECT_EQ(j["pass"], true);
  EXPECT_TRUE(j["counterexamples"].empty());
}
