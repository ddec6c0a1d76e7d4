#pragma once

// Root system of type A_{n-1}: roots e_i - e_j stored as index pairs (i, j).

#include <algorithm>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "typea/error.hpp"
#include "typea/permutation.hpp"

namespace typea {

class Root {
 public:
  Root(int i, int j, int rank) : i_(i), j_(j), rank_(rank) {
    if (rank < 2) throw range_error("root: rank must be at least 2");
    if (i < 1 || i > rank || j < 1 || j > rank)
      throw range_error("root: indices (" + std::to_string(i) + "," +
                        std::to_string(j) + ") outside 1.." +
                        std::to_string(rank));
    if (i == j) throw range_error("root: indices must differ");
  }

  int i() const { return i_; }
  int j() const { return j_; }
  int rank() const { return rank_; }

  Root negated() const { return Root(j_, i_, rank_); }

  friend bool operator==(const Root&, const Root&) = default;
  // Lexicographic by (i, j); rank participates only as a tiebreak.
  friend auto operator<=>(const Root& a, const Root& b) {
    if (auto c = a.i_ <=> b.i_; c != 0) return c;
    if (auto c = a.j_ <=> b.j_; c != 0) return c;
    return a.rank_ <=> b.rank_;
  }

 private:
  int i_;
  int j_;
  int rank_;
};

struct SimpleDecomposition {
  std::vector<int> coefficients;  // c_k for the simple root (k, k+1)

  int sum() const {
    return std::accumulate(coefficients.begin(), coefficients.end(), 0);
  }
  friend bool operator==(const SimpleDecomposition&,
                         const SimpleDecomposition&) = default;
};

inline int height(const Root& r) { return r.j() - r.i(); }

inline bool is_positive(const Root& r) { return r.i() < r.j(); }

/// All n(n-1) roots, lexicographic by (i, j).
inline std::vector<Root> all_roots(int n) {
  if (n < 2) throw range_error("all_roots: rank must be at least 2");
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.emplace_back(i, j, n);
  return out;
}

inline std::vector<Root> positive_roots(int n) {
  std::vector<Root> out;
  for (const Root& r : all_roots(n))
    if (is_positive(r)) out.push_back(r);
  return out;
}

/// Simple roots (k, k+1), k = 1..n-1.
inline std::vector<Root> simple_system(int n) {
  if (n < 2) throw range_error("simple_system: rank must be at least 2");
  std::vector<Root> out;
  for (int k = 1; k < n; ++k) out.emplace_back(k, k + 1, n);
  return out;
}

/// w acting on e_i - e_j gives e_{w(i)} - e_{w(j)}.
inline Root act(const Permutation& w, const Root& r) {
  detail::require_same_rank(w.rank(), r.rank(), "act");
  return Root(w(r.i()), w(r.j()), r.rank());
}

inline SimpleDecomposition decompose(const Root& r) {
  SimpleDecomposition d{std::vector<int>(r.rank() - 1, 0)};
  const int lo = std::min(r.i(), r.j());
  const int hi = std::max(r.i(), r.j());
  const int sign = is_positive(r) ? 1 : -1;
  for (int k = lo; k < hi; ++k) d.coefficients[k - 1] = sign;
  return d;
}

/// "a(i,j)"
inline std::string format_root(const Root& r) {
  return "a(" + std::to_string(r.i()) + "," + std::to_string(r.j()) + ")";
}

inline Root parse_root(std::string_view text, int n) {
  auto fail = [&] {
    return parse_error("parse_root: expected a(i,j), got '" +
                       std::string(text) + "'");
  };
  if (text.size() < 6 || text.substr(0, 2) != "a(" || text.back() != ')')
    throw fail();
  std::string_view body = text.substr(2, text.size() - 3);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw fail();
  auto number = [&](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (s.empty() || s.size() > 9) throw fail();
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw fail();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  const int i = number(body.substr(0, comma));
  const int j = number(body.substr(comma + 1));
  return Root(i, j, n);
}

}  // namespace typea
