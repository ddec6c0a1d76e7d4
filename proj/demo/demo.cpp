// Small tour of the library: the root/coset bijection in S_6 and one step of
// the equal-height chain.

#include <iostream>

#include "typea/typea.hpp"

int main() {
  using namespace typea;
  constexpr int n = 6;

  const Root alpha(2, 4, n);
  const Permutation w = max_rep(alpha, n);
  std::cout << format_root(alpha) << ": height " << height(alpha) << ", w_alpha "
            << format_one_line(w) << ", n_J " << statistic_nJ(alpha, n) << '\n';

  if (auto step = chain_step(CosetId(alpha), n)) {
    std::cout << format_one_line(step->start) << " -> "
              << format_one_line(step->first) << " -> "
              << format_one_line(step->second) << "  (" << to_string(step->kind)
              << ")\n";
  }

  const auto costas = enumerate_costas(5);
  std::cout << costas.size() << " Costas arrays of order 5\n";

  const auto report = verify_theorem1(n);
  std::cout << report.check << " n=" << n << ": "
            << (report.pass() ? "pass" : "fail") << '\n';
}
