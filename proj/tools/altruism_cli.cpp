#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "altruism/cli/experiment.hpp"
#include "altruism/cli/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Simulation and analytics runner for host/parasite altruism models"};
  app.require_subcommand(1);

  std::string spec_file;
  std::string out_dir;
  unsigned threads = 1;
  auto* run = app.add_subcommand("run", "Run an experiment spec");
  run->add_option("spec", spec_file, "Experiment spec (JSON) or manifest")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  std::string group;
  bool fast = false;
  auto* suite = app.add_subcommand("suite", "Run an acceptance group");
  suite->add_option("name", group,
                    "identities | fixation | stationary | convergence | chaos | invasion | all")
      ->required();
  suite->add_flag("--fast", fast, "Replicas / 10, tolerances x 2");
  suite->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    altruism::RunOptions opt;
    if (!out_dir.empty()) opt.out_dir = out_dir;
    opt.threads = threads;
    return altruism::run_command(spec_file, opt, std::cout);
  }
  altruism::SuiteOptions opt;
  opt.fast = fast;
  opt.threads = threads;
  return altruism::run_suite(group, opt, std::cout);
}
