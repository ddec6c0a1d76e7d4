#pragma once

#include <algorithm>
#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace typea {

/// Outcome of one exhaustive check. Passes iff no counterexample was found.
struct VerificationReport {
  std::string check;
  int rank = 0;
  std::vector<std::string> counterexamples;
  std::chrono::duration<double> elapsed{0};

  bool pass() const { return counterexamples.empty(); }

  void add(std::string counterexample) {
    counterexamples.push_back(std::move(counterexample));
  }

  /// Sorts and dedupes counterexamples so reports are deterministic.
  void finalize() {
    std::sort(counterexamples.begin(), counterexamples.end());
    counterexamples.erase(
        std::unique(counterexamples.begin(), counterexamples.end()),
        counterexamples.end());
  }
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.check;
  j["rank"] = r.rank;
  j["pass"] = r.pass();
  j["counterexamples"] = r.counterexamples;
  j["elapsed"] = r.elapsed.count();
  return j;
}

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::chrono::duration<double> since(Clock::time_point t0) {
  return Clock::now() - t0;
}

}  // namespace detail
}  // namespace typea
