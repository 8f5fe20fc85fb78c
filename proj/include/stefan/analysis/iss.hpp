#pragma once

#include <span>

#include "stefan/core/phase.hpp"
#include "stefan/core/state.hpp"
#include "stefan/core/trajectory.hpp"

namespace stefan {

/// Psi = (int_0^s u^2 dx + (s - s_r)^2)^{1/2}.
double psi_norm_1p(const OnePhaseState& state, double setpoint);
/// Psi = (int_0^s u_l^2 dx + int_s^L u_s^2 dx + (s - s_r)^2)^{1/2}.
double psi_norm_2p(const TwoPhaseState& state, double setpoint);

/// Two-phase reference error X = s - s_r + (beta_s/alpha_s) int_s^L u_s dx.
double reference_error_2p(const TwoPhaseState& state, const PhaseProperties& liquid,
                          const PhaseProperties& solid, double setpoint);

enum class Variant { OnePhase, TwoPhase };

/// Lyapunov dissipation rate b = (1/8) min{alpha/s_r^2, c} (one-phase).
double lyapunov_decay_rate_1p(double alpha, double setpoint, double gain);
/// b = (1/8) min{alpha_l/L^2, 2 alpha_s/L^2, c} (two-phase).
double lyapunov_decay_rate_2p(double alpha_liquid, double alpha_solid, double length, double gain);

/// ISS decay rate lambda = b / 4.
double compute_lambda_1p(double alpha, double setpoint, double gain);
double compute_lambda_2p(double alpha_liquid, double alpha_solid, double length, double gain);
/// Dispatches on the scenario's phase count.
double compute_lambda(const Scenario& scenario);

struct ISSEnvelope {
  double lambda = 0.0;
  double m1 = 1.0;         ///< decay amplitude, >= 1
  double m2 = 0.0;         ///< disturbance gain, >= 0
  double min_slack = 0.0;  ///< min_i (envelope_i - value_i), >= 0 after a successful fit
};

/// Smallest (M1, M2), M1 >= 1, M2 >= 0, with
///   value_i <= M1 value_0 e^{-rate t_i} + M2 level_i   for every i,
/// minimising M1 + M2 sup(level) / value_0. `level` must be non-decreasing
/// (running supremum of the disturbance). Exact: the optimum is taken over
/// the vertices of the feasible polygon.
ISSEnvelope fit_decay_envelope(std::span<const double> times, std::span<const double> values,
                               std::span<const double> level, double rate);

/// Fits Psi(t) <= M1 Psi(0) e^{-lambda t} + M2 sup_{tau <= t} q_f(tau).
/// Throws std::invalid_argument on an empty trajectory.
ISSEnvelope fit_iss_envelope(const Trajectory& traj, double lambda);

/// Fits V(t) <= e^A V(0) e^{-rate t} + B sup d^2 with d = (beta/k) q_f;
/// returned as m1 = e^A, m2 = B.
ISSEnvelope fit_lyapunov_envelope(const Trajectory& traj, double rate, double beta_over_k);

}  // namespace stefan
