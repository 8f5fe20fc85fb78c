#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stefan/core/disturbance.hpp"
#include "stefan/core/scenario.hpp"

namespace stefan {

struct ValidityFlags {
  bool liquid_below_melting = false;
  bool solid_above_melting = false;
  bool interface_outside_domain = false;
  bool setpoint_overshoot = false;
  bool nonpositive_flux = false;

  bool any() const {
    return liquid_below_melting || solid_above_melting || interface_outside_domain ||
           setpoint_overshoot || nonpositive_flux;
  }
};

/// State plus diagnostics at one output time. `solid` is empty for
/// one-phase runs; `far_temperature` and `solid_energy` are then NaN.
struct Snapshot {
  double t = 0.0;
  double s = 0.0;
  std::vector<double> liquid;
  std::vector<double> solid;

  double q_c = 0.0;                   ///< boundary heat input [W/m^2]
  double q_f = 0.0;                   ///< heat loss [W/m^2]
  double energy = 0.0;                ///< E [J/m^2]
  double lyapunov = 0.0;              ///< V
  double psi = 0.0;                   ///< L2 reference-error norm
  double boundary_temperature = 0.0;  ///< T(0,t) - T_m [K]
  double far_temperature = 0.0;       ///< T_s(L,t) - T_m [K]
  double solid_energy = 0.0;          ///< (k_s/alpha_s) int_s^L (T_s - T_m) dx [J/m^2]
  ValidityFlags flags;
};

/// Run-level metadata needed to interpret the snapshots.
struct TrajectoryInfo {
  bool two_phase = false;
  ControllerMode mode = ControllerMode::ClosedLoop;
  double setpoint = 0.0;
  double gain = 0.0;
  double domain_length = 0.0;
  DisturbanceSpec disturbance;
  double negative_tolerance = 0.0;  ///< tol_neg [K]
};

struct Termination {
  std::string reason;
  double time = 0.0;
};

struct Trajectory {
  TrajectoryInfo info;
  std::vector<Snapshot> snapshots;
  std::optional<Termination> termination;  ///< set when the run stopped early
  std::size_t steps = 0;

  bool empty() const { return snapshots.empty(); }
  const Snapshot& front() const { return snapshots.front(); }
  const Snapshot& back() const { return snapshots.back(); }
};

}  // namespace stefan
