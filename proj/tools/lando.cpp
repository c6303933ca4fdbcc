#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace lando::cli;

  CLI::App app{"Friendliness of trees and the circle-system realizability question"};
  app.require_subcommand(1);
  app.set_version_flag("--version", lando::kVersion);

  CliConfig cfg;
  cfg.jobs = default_jobs();

  auto* enumerate = app.add_subcommand("enumerate", "List every free tree with N edges");
  enumerate->add_option("--edges", cfg.edges, "Edge count")->required()->check(CLI::Range(0, 12));

  auto* check = app.add_subcommand("check", "Decide whether two trees are friendly");
  check->add_option("--a", cfg.tree_a, "First tree file")->required()->check(CLI::ExistingFile);
  check->add_option("--b", cfg.tree_b, "Second tree file")->required()->check(CLI::ExistingFile);
  check->add_flag("--witness", cfg.witness, "Print the realizable bijection when one exists");

  auto* survey = app.add_subcommand("survey", "Check every pair of trees with N edges");
  survey->add_option("--edges", cfg.edges, "Edge count")->required()->check(CLI::Range(0, 8));
  survey->add_option("--out", cfg.out, "Report file")->required();
  survey->add_option("--jobs", cfg.jobs, "Worker threads (default $LANDO_JOBS or 1)")->check(CLI::PositiveNumber);
  survey->add_flag("--recheck", cfg.recheck, "Confirm unfriendly rows by unpruned enumeration at every size");
  survey->add_flag("!--no-timing", cfg.timing, "Write seconds=0.000 so reports are byte-reproducible");

  auto* theorem = app.add_subcommand("verify-theorem1", "Confirm the trees G and H are unfriendly");
  theorem->add_flag("--recheck", cfg.recheck, "Also run is_realizable on all 5040 bijections");
  theorem->add_option("--fixture-g", cfg.fixture_g, "Replace the G fixture (testing)")->check(CLI::ExistingFile)->group("");
  theorem->add_option("--fixture-h", cfg.fixture_h, "Replace the H fixture (testing)")->check(CLI::ExistingFile)->group("");

  auto* dual = app.add_subcommand("dual", "Dual tree of a nesting of circles");
  dual->add_option("--nesting", cfg.nesting, "Nesting file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  return guarded(std::cerr, [&] {
    if (*enumerate) return cmd_enumerate(cfg, std::cout);
    if (*check) return cmd_check(cfg, std::cout);
    if (*survey) return cmd_survey(cfg, std::cout);
    if (*theorem) return cmd_verify_theorem1(cfg, std::cout);
    return cmd_dual(cfg, std::cout);
  });
}
