#pragma once

#include <utility>

#include "stefan/control/control.hpp"
#include "stefan/core/phase.hpp"
#include "stefan/core/scenario.hpp"
#include "stefan/core/state.hpp"
#include "stefan/core/trajectory.hpp"
#include "stefan/solver/errors.hpp"
#include "stefan/solver/one_phase.hpp"

namespace stefan {

struct TwoPhaseParams {
  PhaseProperties liquid = PhaseProperties::zinc();
  PhaseProperties solid = PhaseProperties::zinc();
  double min_interface = 0.0;  ///< PhaseDisappeared below this [m]
  /// PhaseDisappeared above this [m]; zero means L (1 - 1e-3).
  double max_interface = 0.0;
};

/// Explicit step limit shared by both phases.
double stable_time_step_2p(const TwoPhaseState& state, const TwoPhaseParams& params);

/// Advances liquid (on xi = x/s) and solid (on eta = (x - s)/(L - s)) by one
/// forward-Euler step. The solid obeys
///   v_t = (alpha_s/(L-s)^2) v_etaeta + ((1 - eta) sdot/(L - s)) v_eta,
/// with v(0) = 0 and the outflow ghost v[N+1] = v[N-1] - 2 deta (L - s) q_f / k_s;
/// the interface moves by gamma sdot = -k_l u_x(s-) + k_s v_x(s+).
std::pair<TwoPhaseState, StepDiagnostics> step2(const TwoPhaseState& state, double q_c, double q_f,
                                                double dt, const TwoPhaseParams& params);

Trajectory run2(const Scenario& scenario, const ControllerConfig& controller,
                const DisturbanceSpec& disturbance);
Trajectory run2(const Scenario& scenario);

}  // namespace stefan
