// typea: tables, exhaustive verifications, Costas enumeration and coset
// poset export for the type A root system.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "typea/commands.hpp"

int main(int argc, char** argv) {
  using namespace typea;
  using namespace typea::cli;

  CLI::App app{"Type A root system: n_J statistic, coset Bruhat order, Costas arrays"};
  app.require_subcommand(1);

  int n = 0;
  std::string format = "text";
  bool force = false;

  auto* table = app.add_subcommand("table", "Per-root height, w_alpha and n_J");
  table->add_option("--n", n, "Rank n of S_n")->required();
  table->add_option("--format", format, "text | csv | json");
  table->add_flag("--force", force, "Lift rank ceiling");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification");
  verify->add_option("target", target, "theorem1 | contrapositives | character | proposition")
      ->required();
  verify->add_option("--n", n, "Rank n of S_n")->required();
  verify->add_option("--format", format, "text | json");
  verify->add_flag("--force", force, "Lift rank ceiling");

  bool count_only = false;
  auto* costas = app.add_subcommand("costas", "List Costas permutations");
  costas->add_option("--n", n, "Order")->required();
  costas->add_flag("--count-only", count_only, "Print only the count");
  costas->add_flag("--force", force, "Lift rank ceiling");

  std::string out_path;
  auto* poset = app.add_subcommand("poset", "Export the coset Bruhat order as DOT");
  poset->add_option("--n", n, "Rank n of S_n")->required();
  poset->add_option("--out", out_path, "Output file (default: stdout)");
  poset->add_option("--format", format, "dot");
  poset->add_flag("--force", force, "Lift rank ceiling");

  std::string root_text;
  auto* chain = app.add_subcommand("chain", "Replay the equal-height chain from a root");
  chain->add_option("--n", n, "Rank n of S_n")->required();
  chain->add_option("--root", root_text, "Starting root, e.g. a(2,4)")->required();
  chain->add_flag("--force", force, "Lift rank ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? exit_code::pass : exit_code::usage;
  }

  const Options opt{force, &std::cerr};
  try {
    if (*table) {
      cmd_table(n, parse_format(format), std::cout, opt);
    } else if (*verify) {
      return cmd_verify(target, n, parse_format(format), std::cout, opt);
    } else if (*costas) {
      cmd_costas(n, count_only, std::cout, opt);
    } else if (*poset) {
      if (format != "text" && parse_format(format) != OutputFormat::dot)
        throw usage_error("poset: only dot output is supported");
      cmd_poset(n, out_path, std::cout, opt);
    } else if (*chain) {
      if (n < kMinCosetRank) throw usage_error("chain: --n must be at least 3");
      cmd_chain(n, parse_root(root_text, n), std::cout, opt);
    }
  } catch (const typea::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::pass;
}
