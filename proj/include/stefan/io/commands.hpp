#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "stefan/core/scenario.hpp"

namespace stefan::io {

enum ExitCode : int {
  exit_ok = 0,
  exit_invalid = 1,  ///< assumption failure or validity violation
  exit_usage = 2,    ///< parse or usage error
  exit_solver = 3,   ///< solver failure or early termination
};

/// Command-line adjustments applied on top of the scenario file.
struct Overrides {
  std::optional<double> final_time;
  std::optional<int> grid;
  std::optional<double> gain;
  std::optional<double> setpoint;
  std::optional<double> qf_bar;
  std::optional<double> qf_decay;
  std::optional<double> output_interval;
  bool two_phase = false;  ///< selects the built-in two-phase scenario when no file is given
};

struct CommandOptions {
  std::optional<std::filesystem::path> scenario_file;
  std::filesystem::path out_dir = "out";
  Overrides overrides;
  std::vector<double> qf_bars;
  std::vector<int> grids;
  std::optional<double> stefan_number;
};

/// Paper disturbance q_f(t) = q_bar e^{-Kt} decays at this rate unless overridden.
inline constexpr double default_decay_rate = 5.0e-6;
inline constexpr double default_qf_bar = 1.0e3;

/// Loads the scenario file (or the built-in zinc scenario) and applies overrides.
/// Throws ScenarioParseError.
Scenario resolve_scenario(const CommandOptions& opts);
void apply_overrides(Scenario& scenario, const Overrides& o);

/// Maximum number of concurrent simulations (STEFAN_ISS_THREADS, default: cores).
unsigned worker_limit();

int cmd_run(const CommandOptions& opts, std::ostream& log);
int cmd_sweep(const CommandOptions& opts, std::ostream& log);
int cmd_converge(const CommandOptions& opts, std::ostream& log);
int cmd_oracle(const CommandOptions& opts, std::ostream& log);
int cmd_check(const CommandOptions& opts, std::ostream& log);

/// Observed order p from three solutions on grids of decreasing spacing,
/// solving (h1^p - h2^p) / (h2^p - h3^p) = (f1 - f2) / (f2 - f3). Empty when
/// the differences vanish or change sign.
std::optional<double> observed_order(const std::vector<int>& grids, const std::vector<double>& values);

}  // namespace stefan::io
