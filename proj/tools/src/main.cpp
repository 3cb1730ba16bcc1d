#include <CLI11.hpp>
#include <iostream>

#include "vstokes/cli/commands.hpp"

using namespace vstokes;

namespace {

struct Overrides {
  std::string output_dir;
  int threads = 0;
  long long seed = -1;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--output-dir", o.output_dir, "Output directory");
  cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Sampling seed")->check(CLI::NonNegativeNumber);
}

cli::ScenarioConfig resolve(const std::string& file, const Overrides& o) {
  nlohmann::json raw = file.empty() ? nlohmann::json::object() : cli::read_config_file(file);
  if (!o.output_dir.empty()) raw["output_dir"] = o.output_dir;
  if (o.threads > 0) raw["threads"] = o.threads;
  if (o.seed >= 0) raw["seed"] = o.seed;
  return cli::load_config(raw);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Particle-in-cell Vlasov-Stokes solver and inertialess-limit harness"};
  app.require_subcommand(1);
  Overrides o;
  std::string config;

  auto* run = app.add_subcommand("run", "Run one scenario");
  run->add_option("config", config, "Flat JSON config")->required();
  add_overrides(run, o);
  auto* sweep = app.add_subcommand("sweep", "Run the lambda sweep and write convergence.csv");
  sweep->add_option("config", config, "Flat JSON config")->required();
  add_overrides(sweep, o);
  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("config", config, "Flat JSON config");
  add_overrides(verify, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::kExitConfig;
  }

  cli::ScenarioConfig cfg;
  try {
    cfg = resolve(config, o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kExitConfig;
  }
  try {
    if (*run) return cli::cmd_run(cfg, std::cout, std::cerr);
    if (*sweep) return cli::cmd_sweep(cfg, std::cout, std::cerr);
    return cli::cmd_verify(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitInvariant;
  }
}
