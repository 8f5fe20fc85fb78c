#include "stefan/analysis/energy.hpp"

#include <algorithm>
#include <cmath>

#include "stefan/core/quadrature.hpp"

namespace stefan {

double internal_energy_1p(const OnePhaseState& state, const PhaseProperties& liquid) {
  const auto c = derive_coefficients(liquid);
  return liquid.volumetric_heat_capacity() * trapezoid(state.u, state.spacing()) + c.gamma * state.s;
}

double solid_sensible_energy(const TwoPhaseState& state, const PhaseProperties& solid) {
  return solid.volumetric_heat_capacity() * trapezoid(state.solid, state.solid_spacing());
}

double internal_energy_2p(const TwoPhaseState& state, const PhaseProperties& liquid,
                          const PhaseProperties& solid) {
  const auto c = derive_coefficients(liquid);
  return liquid.volumetric_heat_capacity() * trapezoid(state.liquid, state.liquid_spacing()) +
         solid_sensible_energy(state, solid) + c.gamma * state.s;
}

double energy_balance_residual(const Trajectory& traj) {
  const auto& snaps = traj.snapshots;
  if (snaps.size() < 2) return 0.0;
  double net_input = 0.0;
  for (std::size_t i = 1; i < snaps.size(); ++i) {
    const double dt = snaps[i].t - snaps[i - 1].t;
    net_input += 0.5 * dt * ((snaps[i].q_c - snaps[i].q_f) + (snaps[i - 1].q_c - snaps[i - 1].q_f));
  }
  const double e0 = snaps.front().energy;
  const double ef = snaps.back().energy;
  const double scale = std::max(std::abs(e0), std::abs(ef));
  const double defect = std::abs(ef - e0 - net_input);
  if (scale == 0.0) return defect;
  return defect / scale;
}

}  // namespace stefan
