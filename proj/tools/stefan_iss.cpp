// Command-line front end: run, sweep, converge, oracle, check.

#include <iostream>

#include <CLI11.hpp>

#include "stefan/io/commands.hpp"

namespace {

using stefan::io::CommandOptions;

void add_scenario_flags(CLI::App* cmd, CommandOptions& opts) {
  cmd->add_option("scenario", opts.scenario_file, "Scenario JSON file (default: built-in zinc scenario)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
  auto& o = opts.overrides;
  cmd->add_option("--tfinal", o.final_time, "Simulation horizon [s]")->check(CLI::PositiveNumber);
  cmd->add_option("--grid", o.grid, "Liquid grid cells");
  cmd->add_option("--gain", o.gain, "Control gain c [1/s]");
  cmd->add_option("--setpoint", o.setpoint, "Interface setpoint s_r [m]");
  cmd->add_option("--qf-decay", o.qf_decay, "Heat-loss decay rate K [1/s]");
  cmd->add_option("--output-interval", o.output_interval, "Snapshot spacing [s]");
  cmd->add_flag("--two-phase", o.two_phase, "Use the built-in two-phase scenario");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stefan problem simulation with backstepping boundary control"};
  app.require_subcommand(1);
  CommandOptions opts;

  auto* run = app.add_subcommand("run", "Simulate one scenario and write trajectory.csv and report.json");
  add_scenario_flags(run, opts);
  run->add_option("--qf-bar", opts.overrides.qf_bar, "Heat-loss magnitude [W/m^2]");

  auto* sweep = app.add_subcommand("sweep", "Simulate several heat-loss magnitudes");
  add_scenario_flags(sweep, opts);
  sweep->add_option("--qf-bar", opts.qf_bars, "Heat-loss magnitudes [W/m^2]")->required()->expected(1, -1);

  auto* converge = app.add_subcommand("converge", "Grid-convergence study of s(t_f)");
  add_scenario_flags(converge, opts);
  converge->add_option("--qf-bar", opts.overrides.qf_bar, "Heat-loss magnitude [W/m^2]");
  converge->add_option("--grids", opts.grids, "Grid sizes (at least three)")->required()->expected(1, -1);

  auto* oracle = app.add_subcommand("oracle", "Compare against the Neumann similarity solution");
  oracle->add_option("scenario", opts.scenario_file, "Scenario JSON supplying liquid properties")
      ->check(CLI::ExistingFile);
  oracle->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
  oracle->add_option("--stefan-number", opts.stefan_number, "Stefan number C_p dT / dH");
  oracle->add_option("--grids", opts.grids, "Grid sizes")->expected(1, -1);
  oracle->add_option("--tfinal", opts.overrides.final_time, "Horizon [s]")->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Evaluate the admissibility assumptions only");
  add_scenario_flags(check, opts);
  check->add_option("--qf-bar", opts.overrides.qf_bar, "Heat-loss magnitude [W/m^2]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : stefan::io::exit_usage;
  }

  if (*run) return stefan::io::cmd_run(opts, std::cerr);
  if (*sweep) return stefan::io::cmd_sweep(opts, std::cerr);
  if (*converge) return stefan::io::cmd_converge(opts, std::cerr);
  if (*oracle) return stefan::io::cmd_oracle(opts, std::cerr);
  return stefan::io::cmd_check(opts, std::cerr);
}
