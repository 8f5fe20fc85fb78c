#pragma once

#include <optional>
#include <utility>

#include "stefan/control/control.hpp"
#include "stefan/core/phase.hpp"
#include "stefan/core/scenario.hpp"
#include "stefan/core/state.hpp"
#include "stefan/core/trajectory.hpp"
#include "stefan/solver/errors.hpp"

namespace stefan {

struct StepDiagnostics {
  double sdot = 0.0;                  ///< interface velocity used for the step [m/s]
  double interface_flux = 0.0;        ///< -k T_x(s-, t) [W/m^2]
  double solid_interface_flux = 0.0;  ///< k_s T_s,x(s+, t) [W/m^2], two-phase only
  double boundary_temperature = 0.0;  ///< T(0, t) - T_m after the step [K]
  double cfl = 0.0;                   ///< dt over the explicit stability limit
  bool upwinded = false;              ///< a node exceeded cell Peclet 2
};

struct OnePhaseParams {
  PhaseProperties liquid = PhaseProperties::zinc();
  /// Fixed T(0,t) - T_m; replaces the flux condition when set.
  std::optional<double> boundary_temperature;
  /// PhaseDisappeared is raised once s drops below this [m].
  double min_interface = 0.0;
};

/// Explicit stability limit s^2 / (2 alpha N^2) of the immobilized heat equation.
double stable_time_step(double extent, double alpha, std::size_t cells);

/// -k u_x(s, t) from the three-point one-sided difference at xi = 1.
double interface_gradient(const OnePhaseState& state, const OnePhaseParams& params);

/// -k u_x(0, t) from the three-point one-sided difference at xi = 0.
double boundary_flux(const OnePhaseState& state, const OnePhaseParams& params);

/// Advances the immobilized one-phase system by one forward-Euler step:
///   u_t = (alpha/s^2) u_xixi + (xi sdot / s) u_xi,
///   ghost point u[-1] = u[1] + 2 dxi s q_c / k, u[N] = 0,
///   sdot = -beta u_x(s) - (beta/k) q_f.
/// Throws PhaseDisappeared or NumericalBlowup.
std::pair<OnePhaseState, StepDiagnostics> step(const OnePhaseState& state, double q_c, double q_f,
                                               double dt, const OnePhaseParams& params);

/// Integrates the scenario from t = 0 to final_time. An early stop on
/// PhaseDisappeared is recorded in `termination`; NumericalBlowup propagates.
Trajectory run(const Scenario& scenario, const ControllerConfig& controller,
               const DisturbanceSpec& disturbance);
Trajectory run(const Scenario& scenario);

}  // namespace stefan
