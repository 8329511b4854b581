#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hooleyff_cli/runner.hpp"

int main(int argc, char** argv) {
  using namespace hooleyff::cli;

  CLI::App app{"Short trace sums over F_q[u]: bounds, transforms and exact identities"};
  app.require_subcommand(1);

  RunOptions options;
  std::string config;
  std::string out_dir;
  std::uint64_t seed = 0;
  auto* run = app.add_subcommand("run", "Run the experiment described by a .toml or .json config");
  run->add_option("config", config, "Config file")->required();
  run->add_option("--jobs,-j", options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* out_opt = run->add_option("--out,-o", out_dir, "Output directory (overrides HOOLEYFF_OUT and the config)");
  auto* seed_opt = run->add_option("--seed", seed, "Override the config seed");
  run->add_flag("--gnuplot", options.gnuplot, "Also write a gnuplot script next to the CSV");

  std::string filter;
  auto* list = app.add_subcommand("list-catalog", "List built-in families and example specs");
  list->add_option("filter", filter, "Substring filter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfigError;
  }

  if (*list) {
    for (const auto& line : list_catalog(filter)) std::cout << line << '\n';
    return 0;
  }
  if (*out_opt) options.out_dir = out_dir;
  if (*seed_opt) options.seed = seed;
  return run_config_file(config, options, std::cout, std::cerr);
}
