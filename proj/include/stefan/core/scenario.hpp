#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stefan/core/disturbance.hpp"
#include "stefan/core/phase.hpp"
#include "stefan/core/profile.hpp"
#include "stefan/core/state.hpp"

namespace stefan {

enum class ControllerMode { ClosedLoop, OpenLoop, DirichletValidation };

std::string to_string(ControllerMode mode);

/// Complete simulation configuration. Defaults reproduce the one-phase zinc
/// scenario (s0 = 0.1 m, s_r = 0.35 m, 10 K ramp, c = 5e-3 1/s).
struct Scenario {
  PhaseProperties liquid = PhaseProperties::zinc();
  std::optional<PhaseProperties> solid;  ///< present iff two-phase
  double domain_length = 0.0;            ///< L, two-phase only

  double initial_interface = 0.1;  ///< s0 [m]
  InitialProfile liquid_profile = InitialProfile::linear(10.0);
  InitialProfile solid_profile;

  double setpoint = 0.35;  ///< s_r [m]
  double gain = 5.0e-3;    ///< c [1/s]
  DisturbanceSpec disturbance;

  int grid = 100;        ///< liquid cells N
  int solid_grid = 100;  ///< solid cells N_s
  /// Upper bound on the step [s]; zero lets the stability limit decide.
  double time_step = 0.0;
  double cfl_safety = 0.4;
  double final_time = 1.0e4;
  /// Snapshot spacing [s]; zero means final_time / 500.
  double output_interval = 0.0;

  ControllerMode mode = ControllerMode::ClosedLoop;
  std::optional<double> open_loop_q0;  ///< defaults to the closed-loop flux at t = 0
  double dirichlet_delta_t = 0.0;      ///< fixed T(0,t) - T_m in validation mode

  bool two_phase() const { return solid.has_value(); }
  double output_step() const { return output_interval > 0.0 ? output_interval : final_time / 500.0; }

  /// Structural validation; throws std::invalid_argument.
  void validate() const;

  /// Non-fatal remarks: profile clamps and unbounded disturbance energy.
  std::vector<std::string> warnings() const;

  static Scenario zinc_one_phase(const DisturbanceSpec& disturbance);
  /// Zinc liquid over a colder zinc solid on L = 0.5 m, heat loss at x = L.
  static Scenario zinc_two_phase(const DisturbanceSpec& disturbance);
};

/// T0(x) - T_m at physical position x; liquid on [0, s0], solid on [s0, L].
/// Throws std::domain_error outside the domain.
double eval_initial_profile(const Scenario& scenario, double x);

OnePhaseState initial_one_phase_state(const Scenario& scenario);
TwoPhaseState initial_two_phase_state(const Scenario& scenario);

}  // namespace stefan
