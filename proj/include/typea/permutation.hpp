#pragma once

/// Permutations of {1,...,n} in one-line notation.
///
/// A Permutation stores its images w(1),...,w(n). Composition follows the
/// "right factor acts first" convention used everywhere in this library:
///
///     compose(u, v)(k) = u(v(k))
///
/// so right multiplication by a simple reflection s_i swaps the entries in
/// positions i and i+1, and left multiplication swaps the values i and i+1.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "typea/error.hpp"

namespace typea {

class Permutation {
 public:
  /// Validates that `images` is a bijection on {1,...,images.size()}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty())
      throw error("permutation: rank must be at least 1");
    std::vector<bool> seen(images_.size() + 1, false);
    const int n = rank();
    for (int v : images_) {
      if (v < 1 || v > n || seen[v])
        throw error("permutation: images are not a bijection on 1.." +
                    std::to_string(n));
      seen[v] = true;
    }
  }

  Permutation(std::initializer_list<int> images)
      : Permutation(std::vector<int>(images)) {}

  static Permutation identity(int n) {
    if (n < 1) throw range_error("identity: rank must be at least 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v), unchecked{});
  }

  /// Descending permutation n(n-1)...1, the longest element of S_n.
  static Permutation longest(int n) {
    if (n < 1) throw range_error("longest: rank must be at least 1");
    std::vector<int> v(n);
    std::iota(v.rbegin(), v.rend(), 1);
    return Permutation(std::move(v), unchecked{});
  }

  int rank() const { return static_cast<int>(images_.size()); }

  /// w(k), 1-based.
  int operator()(int k) const { return images_[k - 1]; }

  std::span<const int> images() const { return images_; }

  bool is_identity() const {
    for (int k = 0; k < rank(); ++k)
      if (images_[k] != k + 1) return false;
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on one-line notation.
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct unchecked {};
  Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& u, const Permutation& v);
  friend Permutation inverse(const Permutation& w);
  template <class F>
  friend Permutation detail_rebuild(const Permutation& w, F&& edit);

  std::vector<int> images_;
};

/// Copy `w`, let `edit` mutate the image vector, and revalidate.
template <class F>
Permutation detail_rebuild(const Permutation& w, F&& edit) {
  std::vector<int> v = w.images_;
  edit(v);
  return Permutation(std::move(v));
}

struct ReducedWord {
  std::vector<int> letters;  // simple-reflection indices, 1..n-1

  std::size_t size() const { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

enum class Side { left, right };

inline Permutation compose(const Permutation& u, const Permutation& v) {
  detail::require_same_rank(u.rank(), v.rank(), "compose");
  std::vector<int> out(u.rank());
  for (int k = 1; k <= u.rank(); ++k) out[k - 1] = u(v(k));
  return Permutation(std::move(out), Permutation::unchecked{});
}

inline Permutation operator*(const Permutation& u, const Permutation& v) {
  return compose(u, v);
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> out(w.rank());
  for (int k = 1; k <= w.rank(); ++k) out[w(k) - 1] = k;
  return Permutation(std::move(out), Permutation::unchecked{});
}

/// Coxeter length, computed as the inversion count.
inline int length(const Permutation& w) {
  const auto img = w.images();
  int count = 0;
  for (std::size_t a = 0; a < img.size(); ++a)
    for (std::size_t b = a + 1; b < img.size(); ++b)
      if (img[a] > img[b]) ++count;
  return count;
}

/// The adjacent transposition s_i of S_n.
inline Permutation simple_reflection(int n, int i) {
  if (i < 1 || i >= n)
    throw range_error("simple_reflection: index " + std::to_string(i) +
                      " outside 1.." + std::to_string(n - 1));
  return detail_rebuild(Permutation::identity(n),
                        [i](std::vector<int>& v) { std::swap(v[i - 1], v[i]); });
}

inline Permutation apply_simple(const Permutation& w, int i, Side side) {
  const int n = w.rank();
  if (i < 1 || i >= n)
    throw range_error("apply_simple: index " + std::to_string(i) +
                      " outside 1.." + std::to_string(n - 1));
  return detail_rebuild(w, [i, side](std::vector<int>& v) {
    if (side == Side::right) {
      std::swap(v[i - 1], v[i]);
    } else {
      for (int& x : v) {
        if (x == i)
          x = i + 1;
        else if (x == i + 1)
          x = i;
      }
    }
  });
}

/// Swap the values a and b wherever they sit in the one-line notation
/// (left multiplication by the transposition (a b)).
inline Permutation swap_values(const Permutation& w, int a, int b) {
  return detail_rebuild(w, [a, b](std::vector<int>& v) {
    for (int& x : v) {
      if (x == a)
        x = b;
      else if (x == b)
        x = a;
    }
  });
}

/// Letters evaluated left to right: s_{t1} s_{t2} ... s_{tr}.
inline Permutation evaluate(const ReducedWord& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int letter : word.letters) w = apply_simple(w, letter, Side::right);
  return w;
}

/// Canonical reduced word: strip the smallest-index right descent until the
/// identity is reached, then read the stripped letters in reverse.
inline ReducedWord reduced_word(const Permutation& w) {
  std::vector<int> v(w.images().begin(), w.images().end());
  std::vector<int> stripped;
  for (;;) {
    std::size_t k = 0;
    while (k + 1 < v.size() && v[k] < v[k + 1]) ++k;
    if (k + 1 >= v.size()) break;
    std::swap(v[k], v[k + 1]);
    stripped.push_back(static_cast<int>(k) + 1);
  }
  std::reverse(stripped.begin(), stripped.end());
  return ReducedWord{std::move(stripped)};
}

inline Permutation reversed(const Permutation& w) {
  return detail_rebuild(
      w, [](std::vector<int>& v) { std::reverse(v.begin(), v.end()); });
}

/// Value complement k -> n+1-k.
inline Permutation complemented(const Permutation& w) {
  const int n = w.rank();
  return detail_rebuild(w, [n](std::vector<int>& v) {
    for (int& x : v) x = n + 1 - x;
  });
}

// ---------------------------------------------------------------------------
// One-line text form

inline std::string format_one_line(const Permutation& w) {
  std::string out;
  const bool digits = w.rank() <= 9;
  for (int k = 1; k <= w.rank(); ++k) {
    if (!digits && k > 1) out += ',';
    out += std::to_string(w(k));
  }
  return out;
}

inline Permutation parse_one_line(std::string_view text, int n) {
  if (n < 1) throw parse_error("parse_one_line: rank must be at least 1");
  std::vector<int> values;
  const bool comma_form = text.find(',') != std::string_view::npos;
  if (comma_form) {
    std::size_t pos = 0;
    for (;;) {
      const std::size_t end = std::min(text.find(',', pos), text.size());
      std::string_view field = text.substr(pos, end - pos);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      if (field.empty() || field.size() > 9 ||
          !std::all_of(field.begin(), field.end(),
                       [](char c) { return c >= '0' && c <= '9'; }))
        throw parse_error("parse_one_line: bad entry '" + std::string(field) +
                          "' in '" + std::string(text) + "'");
      values.push_back(std::stoi(std::string(field)));
      if (end == text.size()) break;
      pos = end + 1;
    }
  } else {
    if (n > 9)
      throw parse_error("parse_one_line: digit form requires n <= 9, got n = " +
                        std::to_string(n));
    for (char c : text) {
      if (c < '0' || c > '9')
        throw parse_error("parse_one_line: non-digit in '" + std::string(text) +
                          "'");
      values.push_back(c - '0');
    }
  }
  if (static_cast<int>(values.size()) != n)
    throw parse_error("parse_one_line: expected " + std::to_string(n) +
                      " entries, got " + std::to_string(values.size()));
  try {
    return Permutation(std::move(values));
  } catch (const parse_error&) {
    throw;
  } catch (const error& e) {
    throw parse_error(std::string("parse_one_line: '") + std::string(text) +
                      "' is not a bijection on 1.." + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Enumeration

/// Calls f(w) for every w in S_n in lexicographic one-line order.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    f(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) { out.push_back(w); });
  return out;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

}  // namespace typea
