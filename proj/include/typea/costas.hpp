#pragma once

// Costas arrays: permutations whose displacement vectors are all distinct.

#include <string>
#include <vector>

#include "json.hpp"
#include "typea/error.hpp"
#include "typea/permutation.hpp"
#include "typea/report.hpp"
#include "typea/roots.hpp"

namespace typea {

/// Difference-triangle test: for each gap g, the differences
/// w(a+g) - w(a) are pairwise distinct.
inline bool is_costas(const Permutation& w) {
  const int n = w.rank();
  std::vector<char> seen(2 * n + 1);
  for (int gap = 1; gap < n; ++gap) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 1; a + gap <= n; ++a) {
      char& slot = seen[w(a + gap) - w(a) + n];
      if (slot) return false;
      slot = 1;
    }
  }
  return true;
}

/// Same property stated on roots: distinct positive roots of equal height
/// are sent by w to roots of distinct heights.
inline bool is_costas_via_roots(const Permutation& w) {
  if (w.rank() < 2) return true;
  const auto roots = positive_roots(w.rank());
  for (std::size_t a = 0; a < roots.size(); ++a)
    for (std::size_t b = a + 1; b < roots.size(); ++b)
      if (height(roots[a]) == height(roots[b]) &&
          height(act(w, roots[a])) == height(act(w, roots[b])))
        return false;
  return true;
}

inline constexpr int kCostasSoftMax = 7;

/// All Costas permutations of order n in lexicographic order, by
/// backtracking over positions with one difference set per gap.
inline std::vector<Permutation> enumerate_costas(int n) {
  if (n < 1) throw range_error("enumerate_costas: rank must be at least 1");
  std::vector<Permutation> out;
  std::vector<int> images(n + 1, 0);  // 1-based
  std::vector<char> used(n + 1, 0);
  // taken[gap][diff + n]
  std::vector<std::vector<char>> taken(n, std::vector<char>(2 * n + 1, 0));

  auto place = [&](auto&& self, int pos) -> void {
    if (pos > n) {
      out.emplace_back(std::vector<int>(images.begin() + 1, images.end()));
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      int gap = 1;
      for (; gap < pos; ++gap) {
        if (taken[gap][v - images[pos - gap] + n]) {
          ok = false;
          break;
        }
        taken[gap][v - images[pos - gap] + n] = 1;
      }
      if (ok) {
        used[v] = 1;
        images[pos] = v;
        self(self, pos + 1);
        used[v] = 0;
      }
      // Undo the marks set before the loop stopped.
      for (int g = 1; g < gap; ++g) taken[g][v - images[pos - g] + n] = 0;
    }
  };
  place(place, 1);
  return out;
}

struct CostasCounterexample {
  Permutation array;
  Root beta;
  Root gamma;
};

struct CostasReport {
  int rank = 0;
  std::size_t costas_count = 0;
  std::vector<CostasCounterexample> counterexamples;
  std::chrono::duration<double> elapsed{0};

  bool proposition_pass() const { return counterexamples.empty(); }
};

inline nlohmann::ordered_json to_json(const CostasReport& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank;
  j["costas_count"] = r.costas_count;
  j["proposition_pass"] = r.proposition_pass();
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples)
    j["counterexamples"].push_back({{"array", format_one_line(c.array)},
                                    {"beta", format_root(c.beta)},
                                    {"gamma", format_root(c.gamma)}});
  j["elapsed"] = r.elapsed.count();
  return j;
}

inline constexpr int kPropositionMin = 3;

/// For every Costas w and distinct positive roots beta, gamma of equal
/// height: height(w beta) != height(w gamma). Negative pairs follow by
/// sign symmetry.
inline CostasReport verify_proposition(int n, bool lift_ceiling = false) {
  detail::require_rank_between(n, kPropositionMin,
                               lift_ceiling ? 12 : kCostasSoftMax,
                               "verify_proposition");
  const auto t0 = detail::Clock::now();
  CostasReport report;
  report.rank = n;
  const auto roots = positive_roots(n);
  const auto arrays = enumerate_costas(n);
  report.costas_count = arrays.size();
  for (const Permutation& w : arrays)
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = a + 1; b < roots.size(); ++b)
        if (height(roots[a]) == height(roots[b]) &&
            height(act(w, roots[a])) == height(act(w, roots[b])))
          report.counterexamples.push_back({w, roots[a], roots[b]});
  report.elapsed = detail::since(t0);
  return report;
}

}  // namespace typea
