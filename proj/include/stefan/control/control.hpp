#pragma once

#include <variant>

#include "stefan/core/disturbance.hpp"
#include "stefan/core/phase.hpp"
#include "stefan/core/scenario.hpp"
#include "stefan/core/state.hpp"
#include "stefan/core/trajectory.hpp"

namespace stefan {

struct ControllerConfig {
  struct ClosedLoop1P {};
  struct ClosedLoop2P {};
  struct OpenLoop {
    double q0;
  };
  struct DirichletValidation {
    double delta_t;
  };
  using Mode = std::variant<ClosedLoop1P, ClosedLoop2P, OpenLoop, DirichletValidation>;

  double gain = 0.0;      ///< c [1/s]
  double setpoint = 0.0;  ///< s_r [m]
  Mode mode = ClosedLoop1P{};

  /// Throws std::invalid_argument unless c > 0, s_r > 0 and q0 >= 0.
  void validate() const;
};

/// Builds the controller of a scenario. Open-loop q0 defaults to the
/// closed-loop flux of the initial state.
ControllerConfig controller_config(const Scenario& scenario);

/// q_c = -c (rho C_p int_0^s u dx + rho dH* (s - s_r)), trapezoid on the grid.
double closed_loop_flux_1p(const OnePhaseState& state, const PhaseProperties& liquid,
                           const ControllerConfig& cfg);

/// q_c = -c ((k_l/alpha_l) int u_l + (k_s/alpha_s) int u_s + gamma (s - s_r)).
double closed_loop_flux_2p(const TwoPhaseState& state, const PhaseProperties& liquid,
                           const PhaseProperties& solid, const ControllerConfig& cfg);

/// q_c(t) = q0 e^{-ct} + c int_0^t e^{-c(t - tau)} q_f(tau) dtau. Closed form
/// for the analytic disturbances, adaptive trapezoid for tables.
double open_loop_flux(double t, double q0, double gain, const DisturbanceSpec& disturbance);

/// max_i |q_c(t_i) - open_loop_flux(t_i)| / max(q0, |q_c(t_i)|) with q0 the
/// first recorded flux. Throws std::invalid_argument when the trajectory has
/// no usable flux record.
double flux_equivalence_residual(const Trajectory& traj, const ControllerConfig& cfg);

}  // namespace stefan
