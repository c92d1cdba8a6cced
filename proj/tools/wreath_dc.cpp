// Command-line front end: experiments on balls in C wr Z, Z wr Z and F wr Z.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wreath/cli.hpp"

namespace {

struct Flags {
  std::string group;
  std::optional<std::size_t> radius;
  std::optional<std::string> method;
  std::string format = "csv";
  std::string out;
  unsigned workers = 0;
  std::optional<std::uint64_t> element_budget;
  std::uint64_t pair_budget = wreath::cli::kDefaultPairBudget;
  std::int64_t lamp_index = 0;
  std::size_t conjugator_radius = 8;
  std::optional<std::string> element;
  std::vector<std::int64_t> exponents;
  std::string predicate = "in_base";
  bool list = false;
};

void add_common(CLI::App& cmd, Flags& f) {
  cmd.add_option("--group", f.group, "C<q>wrZ, ZwrZ or table:<path>wrZ");
  cmd.add_option("--radius", f.radius, "ball radius (default depends on the group)");
  cmd.add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd.add_option("--out", f.out, "output file (default: stdout)");
  cmd.add_option("--workers", f.workers, "worker threads (0: available parallelism)");
  cmd.add_option("--element-budget", f.element_budget, "maximum ball elements (env WREATH_DC_BUDGET)");
  cmd.add_option("--pair-budget", f.pair_budget, "maximum commutes() checks for naive counting");
  cmd.add_option("--lamp-index", f.lamp_index, "use the lamp generator at position i");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth, commuting-pair and conjugacy experiments on wreath products with Z"};
  app.set_version_flag("--version", std::string(wreath::cli::kToolVersion));
  app.require_subcommand(1);
  Flags f;

  auto* ball = app.add_subcommand("ball", "per-radius ball and base counts");
  add_common(*ball, f);
  ball->add_flag("--list", f.list, "list every element instead");

  auto* growth = app.add_subcommand("growth", "ball sizes, growth ratios and n-th roots");
  add_common(*growth, f);

  auto* dc = app.add_subcommand("dc", "degree-of-commutativity sequence");
  add_common(*dc, f);
  dc->add_option("--method", f.method, "naive or structured (default)");

  auto* conj = app.add_subcommand("conj-dc", "conjugacy-class ratio next to dc");
  add_common(*conj, f);
  conj->add_option("--method", f.method, "both (default), invariant or saturation");
  conj->add_option("--conjugator-radius", f.conjugator_radius, "radius of the conjugator ball");

  auto* cent = app.add_subcommand("centralizer", "centralizer of --element in the ball, or a sweep over the ball");
  add_common(*cent, f);
  cent->add_option("--element", f.element, "word in the generators, e.g. \"a0 t\"");

  auto* tau = app.add_subcommand("tau", "translation length estimate |g^n|/n");
  add_common(*tau, f);
  tau->add_option("--element", f.element, "word in the generators (default: t)");
  tau->add_option("--exponents", f.exponents, "increasing exponents (default: 8 16 32 64)");

  auto* bounds = app.add_subcommand("bounds", "counting bounds against exact ball data");
  add_common(*bounds, f);

  auto* comb = app.add_subcommand("comb", "composition and weak-composition counts against enumeration");
  add_common(*comb, f);

  auto* density = app.add_subcommand("density", "density of a subset in each ball");
  add_common(*density, f);
  density->add_option("--predicate", f.predicate, "always, identity, in_base or torsion_in_base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return wreath::cli::kInputError;
  }

  wreath::cli::RunConfig config;
  config.command = app.get_subcommands().front()->get_name();
  config.group = f.group;
  config.radius = f.radius;
  config.method = f.method;
  config.format = wreath::cli::parse_format(f.format);
  config.workers = f.workers;
  config.element_budget = f.element_budget;
  config.pair_budget = f.pair_budget;
  config.lamp_index = f.lamp_index;
  config.conjugator_radius = f.conjugator_radius;
  config.element = f.element;
  config.exponents = f.exponents;
  config.predicate = f.predicate;
  config.list = f.list;

  const wreath::cli::RunResult result = wreath::cli::run(config);
  if (!result.output.empty()) {
    if (f.out.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream file(f.out, std::ios::binary);
      file << result.output;
      if (!file) {
        std::cerr << "error: cannot write " << f.out << "\n";
        return wreath::cli::kInputError;
      }
    }
  }
  if (!result.error.empty()) std::cerr << (result.exit_code == 1 ? "warning: " : "error: ") << result.error << "\n";
  return result.exit_code;
}
