#pragma once

// Document builders behind the `typea` command-line tool. Each command
// writes to a caller-supplied stream so that it can be driven in-process.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "typea/bruhat.hpp"
#include "typea/coset.hpp"
#include "typea/costas.hpp"
#include "typea/error.hpp"
#include "typea/permutation.hpp"
#include "typea/report.hpp"
#include "typea/roots.hpp"

namespace typea::cli {

class usage_error : public error {
 public:
  using error::error;
};

namespace exit_code {
inline constexpr int pass = 0;
inline constexpr int failure = 1;
inline constexpr int usage = 2;
}  // namespace exit_code

enum class OutputFormat { text, csv, json, dot };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "dot") return OutputFormat::dot;
  throw usage_error("unknown format '" + std::string(s) +
                    "' (expected text, csv, json or dot)");
}

struct Options {
  bool force = false;          // lift rank ceilings
  std::ostream* warnings = nullptr;
};

namespace detail {

inline void check_rank(int n, int lo, int hi, const Options& opt,
                       const char* command) {
  if (n < lo)
    throw usage_error(std::string(command) + ": --n must be at least " +
                      std::to_string(lo));
  if (n > hi) {
    if (!opt.force)
      throw usage_error(std::string(command) + ": --n " + std::to_string(n) +
                        " exceeds the ceiling " + std::to_string(hi) +
                        " (use --force to override)");
    if (opt.warnings)
      *opt.warnings << "warning: " << command << " with n = " << n
                    << " is above the usual ceiling " << hi
                    << " and may be slow\n";
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// table

struct TableRow {
  Root root;
  int height;
  Permutation max_rep;
  int n_J;
};

/// One row per root, sorted by (height, i).
inline std::vector<TableRow> table_rows(int n) {
  std::vector<TableRow> rows;
  for (const Root& r : all_roots(n)) {
    Permutation w = max_rep(r, n);
    const int l = length(w);
    rows.push_back({r, height(r), std::move(w), l});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.root.i() < b.root.i();
  });
  return rows;
}

inline void cmd_table(int n, OutputFormat format, std::ostream& out,
                      const Options& opt = {}) {
  detail::check_rank(n, 3, 12, opt, "table");
  const auto rows = table_rows(n);
  switch (format) {
    case OutputFormat::csv:
      out << "root,height,max_rep,n_J\n";
      for (const auto& r : rows)
        out << format_root(r.root) << ',' << r.height << ','
            << format_one_line(r.max_rep) << ',' << r.n_J << '\n';
      break;
    case OutputFormat::json: {
      auto doc = nlohmann::ordered_json::array();
      for (const auto& r : rows)
        doc.push_back({{"root", format_root(r.root)},
                       {"height", r.height},
                       {"max_rep", format_one_line(r.max_rep)},
                       {"n_J", r.n_J}});
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::text: {
      const int perm_width = std::max<int>(8, static_cast<int>(format_one_line(rows.front().max_rep).size()) + 2);
      out << std::left << std::setw(10) << "root" << std::setw(8) << "height"
          << std::setw(perm_width) << "max_rep" << "n_J\n";
      for (const auto& r : rows)
        out << std::left << std::setw(10) << format_root(r.root) << std::setw(8)
            << r.height << std::setw(perm_width) << format_one_line(r.max_rep)
            << r.n_J << '\n';
      break;
    }
    case OutputFormat::dot:
      throw usage_error("table: dot format is only valid for poset");
  }
}

// ---------------------------------------------------------------------------
// verify

inline void print_report(const VerificationReport& r, OutputFormat format,
                         std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << r.check << " n=" << r.rank << ": " << (r.pass() ? "PASS" : "FAIL")
      << " (" << r.counterexamples.size() << " counterexamples, "
      << std::fixed << std::setprecision(3) << r.elapsed.count() << "s)\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& c : r.counterexamples) out << "  " << c << '\n';
}

inline void print_report(const CostasReport& r, OutputFormat format,
                         std::ostream& out) {
  if (format == OutputFormat::json) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << "proposition n=" << r.rank << ": "
      << (r.proposition_pass() ? "PASS" : "FAIL") << " (costas_count "
      << r.costas_count << ", " << r.counterexamples.size()
      << " counterexamples, " << std::fixed << std::setprecision(3)
      << r.elapsed.count() << "s)\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& c : r.counterexamples)
    out << "  " << format_one_line(c.array) << ": " << format_root(c.beta)
        << " ~ " << format_root(c.gamma) << '\n';
}

/// Returns the process exit status: 0 pass, 1 counterexample found.
inline int cmd_verify(std::string_view target, int n, OutputFormat format,
                      std::ostream& out, const Options& opt = {}) {
  if (format != OutputFormat::text && format != OutputFormat::json)
    throw usage_error("verify: format must be text or json");
  if (target == "theorem1" || target == "contrapositives") {
    detail::check_rank(n, kMinCosetRank, kTheoremMax, opt, "verify");
    const auto report = target == "theorem1" ? verify_theorem1(n, opt.force)
                                             : verify_contrapositives(n, opt.force);
    print_report(report, format, out);
    return report.pass() ? exit_code::pass : exit_code::failure;
  }
  if (target == "character") {
    detail::check_rank(n, kMinCosetRank, kCharacterMax, opt, "verify");
    const auto report = verify_character_identity(n, opt.force);
    print_report(report, format, out);
    return report.pass() ? exit_code::pass : exit_code::failure;
  }
  if (target == "proposition") {
    detail::check_rank(n, kPropositionMin, kCostasSoftMax, opt, "verify");
    const auto report = verify_proposition(n, opt.force);
    print_report(report, format, out);
    return report.proposition_pass() ? exit_code::pass : exit_code::failure;
  }
  throw usage_error("verify: unknown target '" + std::string(target) +
                    "' (expected theorem1, contrapositives, character or "
                    "proposition)");
}

// ---------------------------------------------------------------------------
// costas

inline void cmd_costas(int n, bool count_only, std::ostream& out,
                       const Options& opt = {}) {
  detail::check_rank(n, 1, 10, opt, "costas");
  if (n > kCostasSoftMax && opt.warnings)
    *opt.warnings << "warning: enumerating Costas arrays of order " << n
                  << " may take a while\n";
  const auto arrays = enumerate_costas(n);
  if (count_only) {
    out << arrays.size() << '\n';
    return;
  }
  for (const auto& w : arrays) out << format_one_line(w) << '\n';
}

// ---------------------------------------------------------------------------
// poset

inline void write_poset_dot(int n, std::ostream& out, bool lift_ceiling = false) {
  const auto covers = hasse_covers(n, lift_ceiling);
  out << "digraph cosets {\n";
  for (const CosetId& c : all_cosets(n)) {
    const std::string name = format_coset(c);
    out << "  \"" << name << "\" [label=\"" << name
        << " | h=" << height(c.root())
        << " | nJ=" << statistic_nJ(c.root(), n) << "\"];\n";
  }
  for (const auto& [lo, hi] : covers)
    out << "  \"" << format_coset(lo) << "\" -> \"" << format_coset(hi)
        << "\";\n";
  out << "}\n";
}

/// Writes to `path`, or to `out` when the path is empty.
inline void cmd_poset(int n, const std::filesystem::path& path,
                      std::ostream& out, const Options& opt = {}) {
  detail::check_rank(n, kMinCosetRank, kHasseMax, opt, "poset");
  if (path.empty()) {
    write_poset_dot(n, out, opt.force);
    return;
  }
  std::ostringstream doc;
  write_poset_dot(n, doc, opt.force);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw usage_error("poset: cannot write '" + path.string() + "'");
  file << doc.str();
  if (!file) throw usage_error("poset: failed writing '" + path.string() + "'");
}

// ---------------------------------------------------------------------------
// chain

inline void cmd_chain(int n, const Root& root, std::ostream& out,
                      const Options& opt = {}) {
  detail::check_rank(n, kMinCosetRank, 12, opt, "chain");
  const CosetId start(root);
  auto anchor = [&](const CosetId& c) {
    const Permutation w = max_rep(c);
    out << format_one_line(w) << "  length=" << length(w)
        << "  coset=" << format_coset(c) << "  height=" << height(c.root())
        << '\n';
  };
  anchor(start);
  for (const ChainStep& s : chain_from(start, n)) {
    out << format_one_line(s.first) << "  length=" << length(s.first) << '\n';
    anchor(s.to);
  }
}

}  // namespace typea::cli
