#pragma once

#include <stdexcept>
#include <string>

namespace typea {

// Base of everything the library throws.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed one-line or root text.
class parse_error : public error {
 public:
  using error::error;
};

// Two operands carry different ranks.
class rank_mismatch : public error {
 public:
  using error::error;
};

// Index or rank outside the supported range of an operation.
class range_error : public error {
 public:
  using error::error;
};

namespace detail {

inline void require_same_rank(int a, int b, const char* what) {
  if (a != b)
    throw rank_mismatch(std::string(what) + ": rank " + std::to_string(a) +
                        " vs " + std::to_string(b));
}

inline void require_rank_between(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi)
    throw range_error(std::string(what) + ": rank " + std::to_string(n) +
                      " outside supported range " + std::to_string(lo) +
                      ".." + std::to_string(hi));
}

}  // namespace detail
}  // namespace typea
