#pragma once

#include "stefan/core/phase.hpp"
#include "stefan/core/state.hpp"
#include "stefan/core/trajectory.hpp"

namespace stefan {

/// E = (k/alpha) int_0^s u dx + (k/beta) s  [J/m^2].
double internal_energy_1p(const OnePhaseState& state, const PhaseProperties& liquid);

/// Adds the solid sensible heat (k_s/alpha_s) int_s^L u_s dx; the latent term
/// uses gamma = rho_l dH*.
double internal_energy_2p(const TwoPhaseState& state, const PhaseProperties& liquid,
                          const PhaseProperties& solid);

/// (k_s/alpha_s) int_s^L u_s dx, non-positive for an admissible solid.
double solid_sensible_energy(const TwoPhaseState& state, const PhaseProperties& solid);

/// |E(t_f) - E(0) - int (q_c - q_f) dt| / max(|E(0)|, |E(t_f)|), time integral by
/// trapezoid over the snapshots. Returns 0 for fewer than two snapshots.
double energy_balance_residual(const Trajectory& traj);

}  // namespace stefan
