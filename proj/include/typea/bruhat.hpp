#pragma once

/// Bruhat order on S_n and on the quotient W/W_J, plus the chain procedure
/// that links equal-height cosets by length-increasing transpositions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "typea/coset.hpp"
#include "typea/error.hpp"
#include "typea/permutation.hpp"
#include "typea/report.hpp"
#include "typea/roots.hpp"

namespace typea {

/// Sorted-prefix dominance: u <= v iff for every k the increasingly sorted
/// first k entries of u are entrywise <= those of v.
inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  detail::require_same_rank(u.rank(), v.rank(), "bruhat_leq");
  const int n = u.rank();
  std::vector<int> pu, pv;
  pu.reserve(n);
  pv.reserve(n);
  for (int k = 1; k < n; ++k) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
    pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
    for (int t = 0; t < k; ++t)
      if (pu[t] > pv[t]) return false;
  }
  return true;
}

namespace detail {

// Permutations of rank <= 16 packed four bits per entry (value - 1).
inline std::uint64_t pack(const Permutation& w) {
  std::uint64_t code = 0;
  for (int k = 1; k <= w.rank(); ++k)
    code |= static_cast<std::uint64_t>(w(k) - 1) << (4 * (k - 1));
  return code;
}

inline std::uint64_t packed_swap_positions(std::uint64_t code, int i) {
  const int lo = 4 * (i - 1), hi = 4 * i;
  const std::uint64_t a = (code >> lo) & 0xF, b = (code >> hi) & 0xF;
  code &= ~((std::uint64_t{0xF} << lo) | (std::uint64_t{0xF} << hi));
  return code | (b << lo) | (a << hi);
}

}  // namespace detail

/// Test oracle via the subword property: u <= v iff some subword of the
/// canonical reduced word of v evaluates to u. Builds the set of all subword
/// products letter by letter, so the cost is bounded by |[e, v]| per letter.
inline bool bruhat_leq_oracle(const Permutation& u, const Permutation& v) {
  detail::require_same_rank(u.rank(), v.rank(), "bruhat_leq_oracle");
  if (u.rank() > 16) throw range_error("bruhat_leq_oracle: rank above 16");
  std::unordered_set<std::uint64_t> products{
      detail::pack(Permutation::identity(v.rank()))};
  for (int letter : reduced_word(v).letters) {
    std::vector<std::uint64_t> extended;
    extended.reserve(products.size());
    for (std::uint64_t p : products)
      extended.push_back(detail::packed_swap_positions(p, letter));
    products.insert(extended.begin(), extended.end());
  }
  return products.contains(detail::pack(u));
}

inline void detail_check_coset_pair(const CosetId& a, const CosetId& b, int n,
                                    const char* what) {
  if (n < kMinCosetRank)
    throw range_error(std::string(what) + ": rank must be at least 3");
  detail::require_same_rank(a.rank(), n, what);
  detail::require_same_rank(b.rank(), n, what);
}

/// aW_J <= bW_J, compared through minimal representatives.
inline bool coset_leq(const CosetId& a, const CosetId& b, int n) {
  detail_check_coset_pair(a, b, n, "coset_leq");
  return bruhat_leq(min_rep(a), min_rep(b));
}

/// Same order computed through maximal representatives.
inline bool coset_leq_via_max(const CosetId& a, const CosetId& b, int n) {
  detail_check_coset_pair(a, b, n, "coset_leq_via_max");
  return bruhat_leq(max_rep(a), max_rep(b));
}

inline bool comparable(const CosetId& a, const CosetId& b, int n) {
  return coset_leq(a, b, n) || coset_leq(b, a, n);
}

// ---------------------------------------------------------------------------
// Chain procedure

enum class ChainCase {
  adjacent_descending,  // |i - j| = 1, i > j
  adjacent_ascending,   // |i - j| = 1, j > i
  separated,            // |i - j| > 1
};

inline const char* to_string(ChainCase c) {
  switch (c) {
    case ChainCase::adjacent_descending: return "adjacent, i > j";
    case ChainCase::adjacent_ascending: return "adjacent, j > i";
    case ChainCase::separated: return "|i - j| > 1";
  }
  return "?";
}

/// Two transpositions from w_beta = max_rep(from) to w_gamma = max_rep(to),
/// where to = (from.i - 1, from.j - 1).
struct ChainStep {
  CosetId from;
  CosetId to;
  ChainCase kind;
  Permutation start;   // max_rep(from)
  Permutation first;   // after the first transposition
  Permutation second;  // after the second; equals max_rep(to)
};

namespace detail {

// Restores the shape n(n-1)...1 i j by sorting positions 1..n-2 descending.
inline Permutation canonicalize_prefix(const Permutation& w) {
  return detail_rebuild(w, [](std::vector<int>& v) {
    std::sort(v.begin(), v.end() - 2, std::greater<>());
  });
}

}  // namespace detail

inline std::optional<ChainStep> chain_step(const CosetId& from, int n) {
  if (n < kMinCosetRank) throw range_error("chain_step: rank must be at least 3");
  detail::require_same_rank(from.rank(), n, "chain_step");
  const int i = from.i(), j = from.j();
  if (std::min(i, j) == 1) return std::nullopt;

  const Permutation start = max_rep(from);
  auto move = [](const Permutation& w, int a, int b) {
    return detail::canonicalize_prefix(swap_values(w, a, b));
  };

  ChainCase kind;
  Permutation first = start, second = start;
  if (i - j == 1) {
    // i j -> i (j-1) -> (i-1) (j-1), with i-1 = j
    kind = ChainCase::adjacent_descending;
    first = move(start, j, j - 1);
    second = move(first, i, i - 1);
  } else if (j - i == 1) {
    // i j -> j i -> (i-1) i, with i = j-1
    kind = ChainCase::adjacent_ascending;
    first = move(start, i, j);
    second = move(first, j, i - 1);
  } else {
    // i j -> (i-1) j -> (i-1) (j-1)
    kind = ChainCase::separated;
    first = move(start, i, i - 1);
    second = move(first, j, j - 1);
  }
  return ChainStep{from, CosetId(i - 1, j - 1, n), kind, start, first, second};
}

/// Replays chain_step from `start` until no step applies.
inline std::vector<ChainStep> chain_from(const CosetId& start, int n) {
  std::vector<ChainStep> steps;
  std::optional<ChainStep> step = chain_step(start, n);
  while (step) {
    steps.push_back(*step);
    step = chain_step(step->to, n);
  }
  return steps;
}

namespace detail {

inline int positions_changed(const Permutation& a, const Permutation& b) {
  int d = 0;
  for (int k = 1; k <= a.rank(); ++k)
    if (a(k) != b(k)) ++d;
  return d;
}

inline bool has_max_rep_shape(const Permutation& w) {
  const auto img = w.images();
  return std::is_sorted(img.begin(), img.end() - 2, std::greater<>());
}

/// Problems with one step, empty if it satisfies every chain invariant.
inline std::vector<std::string> chain_step_violations(const ChainStep& s) {
  std::vector<std::string> out;
  const std::string tag = format_coset(s.from) + " -> " + format_coset(s.to);
  if (s.to.i() != s.from.i() - 1 || s.to.j() != s.from.j() - 1)
    out.push_back(tag + ": target is not (i-1, j-1)");
  if (height(s.to.root()) != height(s.from.root()))
    out.push_back(tag + ": height changed");
  if (s.start != max_rep(s.from))
    out.push_back(tag + ": start is not max_rep(from)");
  if (s.second != max_rep(s.to))
    out.push_back(tag + ": endpoint is not max_rep(to)");
  if (!has_max_rep_shape(s.first))
    out.push_back(tag + ": intermediate leaves the max_rep shape");
  if (positions_changed(s.start, s.first) != 2 ||
      positions_changed(s.first, s.second) != 2)
    out.push_back(tag + ": a move is not a single transposition");
  if (!(length(s.start) < length(s.first) && length(s.first) < length(s.second)))
    out.push_back(tag + ": length does not strictly increase");
  return out;
}

inline std::map<int, std::vector<CosetId>> cosets_by_height(int n) {
  std::map<int, std::vector<CosetId>> out;
  for (const CosetId& c : all_cosets(n)) out[height(c.root())].push_back(c);
  return out;
}

}  // namespace detail

inline constexpr int kTheoremMax = 8;
inline constexpr int kHasseMax = 7;

/// For each height level: start at the Bruhat-minimal coset of that height,
/// replay the chain and require that it visits every coset of the level with
/// every step valid.
inline VerificationReport verify_chain_coverage(int n, bool lift_ceiling = false) {
  detail::require_rank_between(n, kMinCosetRank,
                               lift_ceiling ? 16 : kTheoremMax,
                               "verify_chain_coverage");
  const auto t0 = detail::Clock::now();
  VerificationReport report{"chain_coverage", n, {}, {}};
  for (const auto& [h, level] : detail::cosets_by_height(n)) {
    std::optional<CosetId> bottom;
    for (const CosetId& c : level) {
      if (std::all_of(level.begin(), level.end(),
                      [&](const CosetId& d) { return coset_leq(c, d, n); })) {
        bottom = c;
        break;
      }
    }
    if (!bottom) {
      report.add("height " + std::to_string(h) + ": no minimal coset");
      continue;
    }
    std::set<CosetId> visited{*bottom};
    for (const ChainStep& s : chain_from(*bottom, n)) {
      for (auto& v : detail::chain_step_violations(s)) report.add(std::move(v));
      visited.insert(s.to);
    }
    for (const CosetId& c : level)
      if (!visited.contains(c))
        report.add("height " + std::to_string(h) + ": chain from " +
                   format_coset(*bottom) + " misses " + format_coset(c));
  }
  report.finalize();
  report.elapsed = detail::since(t0);
  return report;
}

/// Equal height implies comparable cosets, for every pair of distinct roots;
/// the chain coverage check is folded into the same report.
inline VerificationReport verify_theorem1(int n, bool lift_ceiling = false) {
  detail::require_rank_between(n, kMinCosetRank,
                               lift_ceiling ? 16 : kTheoremMax,
                               "verify_theorem1");
  const auto t0 = detail::Clock::now();
  VerificationReport report{"theorem1", n, {}, {}};
  const auto cosets = all_cosets(n);
  for (std::size_t a = 0; a < cosets.size(); ++a)
    for (std::size_t b = a + 1; b < cosets.size(); ++b) {
      const CosetId &x = cosets[a], &y = cosets[b];
      if (height(x.root()) == height(y.root()) && !comparable(x, y, n))
        report.add(format_coset(x) + " ~ " + format_coset(y) +
                   ": equal height, incomparable");
    }
  for (auto& v : verify_chain_coverage(n, lift_ceiling).counterexamples)
    report.add(std::move(v));
  report.finalize();
  report.elapsed = detail::since(t0);
  return report;
}

/// (a) incomparable cosets have different heights;
/// (b) distinct roots with equal n_J have different heights.
inline VerificationReport verify_contrapositives(int n, bool lift_ceiling = false) {
  detail::require_rank_between(n, kMinCosetRank,
                               lift_ceiling ? 16 : kTheoremMax,
                               "verify_contrapositives");
  const auto t0 = detail::Clock::now();
  VerificationReport report{"contrapositives", n, {}, {}};
  const auto cosets = all_cosets(n);
  std::vector<int> nj;
  for (const CosetId& c : cosets) nj.push_back(statistic_nJ(c.root(), n));
  for (std::size_t a = 0; a < cosets.size(); ++a)
    for (std::size_t b = a + 1; b < cosets.size(); ++b) {
      const CosetId &x = cosets[a], &y = cosets[b];
      if (height(x.root()) != height(y.root())) continue;
      const std::string pair = format_coset(x) + " ~ " + format_coset(y);
      if (!comparable(x, y, n))
        report.add(pair + ": incomparable with equal height");
      if (nj[a] == nj[b])
        report.add(pair + ": equal n_J " + std::to_string(nj[a]) +
                   " with equal height");
    }
  report.finalize();
  report.elapsed = detail::since(t0);
  return report;
}

/// Covering pairs a < b of the coset order, lexicographic by (a, b).
inline std::vector<std::pair<CosetId, CosetId>> hasse_covers(int n,
                                                             bool lift_ceiling = false) {
  detail::require_rank_between(n, kMinCosetRank, lift_ceiling ? 16 : kHasseMax,
                               "hasse_covers");
  const auto cosets = all_cosets(n);
  const std::size_t m = cosets.size();
  std::vector<Permutation> reps;
  for (const CosetId& c : cosets) reps.push_back(min_rep(c));
  std::vector<std::vector<char>> below(m, std::vector<char>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      below[a][b] = a != b && bruhat_leq(reps[a], reps[b]);

  std::vector<std::pair<CosetId, CosetId>> out;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!below[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < m && !between; ++c)
        between = below[a][c] && below[c][b];
      if (!between) out.emplace_back(cosets[a], cosets[b]);
    }
  return out;
}

}  // namespace typea
