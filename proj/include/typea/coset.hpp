#pragma once

/// Left cosets wW_J of the parabolic subgroup with J = S \ {s_{n-1}, s_{n-2}}.
///
/// With the composition convention of permutation.hpp, W_J = <s_1,...,s_{n-3}>
/// rearranges one-line positions 1..n-2, so a coset is determined by the two
/// rightmost entries (w(n-1), w(n)). Those entries are read as the root
/// (i, j), which is the bijection between roots and cosets.

#include <algorithm>
#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "typea/error.hpp"
#include "typea/permutation.hpp"
#include "typea/report.hpp"
#include "typea/roots.hpp"

namespace typea {

inline constexpr int kMinCosetRank = 3;

class ParabolicContext {
 public:
  explicit ParabolicContext(int n) : rank_(n) {
    if (n < kMinCosetRank)
      throw range_error("parabolic context: rank must be at least 3, got " +
                        std::to_string(n));
  }

  int rank() const { return rank_; }

  /// Indices of the simple reflections in J: {1, ..., n-3}.
  std::vector<int> generators() const {
    std::vector<int> g;
    for (int k = 1; k <= rank_ - 3; ++k) g.push_back(k);
    return g;
  }

  std::uint64_t subgroup_order() const { return factorial(rank_ - 2); }
  std::uint64_t coset_count() const {
    return static_cast<std::uint64_t>(rank_) * (rank_ - 1);
  }

  /// Length of the longest element of W_J.
  int longest_length() const { return (rank_ - 2) * (rank_ - 3) / 2; }

  bool contains(const Permutation& w) const {
    detail::require_same_rank(rank_, w.rank(), "parabolic contains");
    return w(rank_ - 1) == rank_ - 1 && w(rank_) == rank_;
  }

  /// All elements of W_J, lexicographic.
  std::vector<Permutation> elements() const {
    std::vector<Permutation> out;
    for_each_permutation(rank_ - 2, [&](const Permutation& u) {
      std::vector<int> v(u.images().begin(), u.images().end());
      v.push_back(rank_ - 1);
      v.push_back(rank_);
      out.emplace_back(std::move(v));
    });
    return out;
  }

 private:
  int rank_;
};

class CosetId {
 public:
  CosetId(int i, int j, int rank) : root_(i, j, rank) {
    if (rank < kMinCosetRank)
      throw range_error("coset: rank must be at least 3");
  }
  explicit CosetId(const Root& r) : CosetId(r.i(), r.j(), r.rank()) {}

  int i() const { return root_.i(); }
  int j() const { return root_.j(); }
  int rank() const { return root_.rank(); }
  const Root& root() const { return root_; }

  friend bool operator==(const CosetId&, const CosetId&) = default;
  friend auto operator<=>(const CosetId&, const CosetId&) = default;

 private:
  Root root_;
};

inline std::string format_coset(const CosetId& c) { return format_root(c.root()); }

/// All cosets in the lexicographic order of all_roots.
inline std::vector<CosetId> all_cosets(int n) {
  ParabolicContext ctx(n);
  std::vector<CosetId> out;
  for (const Root& r : all_roots(n)) out.emplace_back(r);
  return out;
}

namespace detail {

inline Permutation coset_rep(int i, int j, int n, bool descending) {
  std::vector<int> v;
  v.reserve(n);
  if (descending) {
    for (int k = n; k >= 1; --k)
      if (k != i && k != j) v.push_back(k);
  } else {
    for (int k = 1; k <= n; ++k)
      if (k != i && k != j) v.push_back(k);
  }
  v.push_back(i);
  v.push_back(j);
  return Permutation(std::move(v));
}

inline void check_coset_args(const Root& r, int n, const char* what) {
  if (n < kMinCosetRank)
    throw range_error(std::string(what) + ": rank must be at least 3, got " +
                      std::to_string(n));
  require_same_rank(r.rank(), n, what);
}

}  // namespace detail

/// w_alpha = n(n-1)...^i...^j...1 i j, the longest element of its coset.
inline Permutation max_rep(const Root& r, int n) {
  detail::check_coset_args(r, n, "max_rep");
  return detail::coset_rep(r.i(), r.j(), n, true);
}

/// Shortest element of the coset: remaining values ascending, then i, j.
inline Permutation min_rep(const Root& r, int n) {
  detail::check_coset_args(r, n, "min_rep");
  return detail::coset_rep(r.i(), r.j(), n, false);
}

inline Permutation max_rep(const CosetId& c) { return max_rep(c.root(), c.rank()); }
inline Permutation min_rep(const CosetId& c) { return min_rep(c.root(), c.rank()); }

inline CosetId coset_of(const Permutation& w) {
  const int n = w.rank();
  if (n < kMinCosetRank)
    throw range_error("coset_of: rank must be at least 3, got " +
                      std::to_string(n));
  return CosetId(w(n - 1), w(n), n);
}

/// n_J(alpha) = l(w_alpha).
inline int statistic_nJ(const Root& r, int n) { return length(max_rep(r, n)); }

inline std::uint64_t coset_count(int n) { return ParabolicContext(n).coset_count(); }

/// Permutation character of the root action: #{(i,j) : w(i)=i, w(j)=j}.
inline int fixed_roots_count(const Permutation& w) {
  if (w.rank() < 2) return 0;
  int count = 0;
  for (const Root& r : all_roots(w.rank()))
    if (act(w, r) == r) ++count;
  return count;
}

enum class CosetProbe { minimal, maximal };

/// Induced character 1 up from W_J: #{xW_J : x^{-1} w x in W_J}, probing
/// each coset through one representative.
inline int fixed_cosets_count(const Permutation& w,
                              CosetProbe probe = CosetProbe::minimal) {
  const ParabolicContext ctx(w.rank());
  int count = 0;
  for (const CosetId& c : all_cosets(w.rank())) {
    const Permutation x = probe == CosetProbe::minimal ? min_rep(c) : max_rep(c);
    if (ctx.contains(inverse(x) * w * x)) ++count;
  }
  return count;
}

/// One permutation per cycle type of S_n, cycles laid out on consecutive
/// points in non-increasing length order.
inline std::vector<Permutation> conjugacy_class_representatives(int n) {
  std::vector<Permutation> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      std::vector<int> v(n);
      int start = 0;
      for (int len : parts) {
        for (int k = 0; k < len; ++k)
          v[start + k] = start + (k + 1) % len + 1;
        start += len;
      }
      out.emplace_back(std::move(v));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline constexpr int kCharacterExhaustiveMax = 6;
inline constexpr int kCharacterMax = 7;

/// R = 1 up from W_J, checked pointwise on the group (n <= 6) or on class
/// representatives (n = 7). `lift_ceiling` allows n > 7 on class reps.
inline VerificationReport verify_character_identity(int n,
                                                    bool lift_ceiling = false) {
  detail::require_rank_between(n, kMinCosetRank,
                               lift_ceiling ? 1000 : kCharacterMax,
                               "verify_character_identity");
  const auto t0 = detail::Clock::now();
  VerificationReport report{"character", n, {}, {}};
  auto check = [&](const Permutation& w) {
    const int roots = fixed_roots_count(w);
    const int cosets = fixed_cosets_count(w);
    if (roots != cosets)
      report.add(format_one_line(w) + ": fixed roots " + std::to_string(roots) +
                 " != fixed cosets " + std::to_string(cosets));
  };
  if (n <= kCharacterExhaustiveMax)
    for_each_permutation(n, check);
  else
    for (const Permutation& w : conjugacy_class_representatives(n)) check(w);
  report.finalize();
  report.elapsed = detail::since(t0);
  return report;
}

}  // namespace typea
