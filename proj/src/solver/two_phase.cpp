#include "stefan/solver/two_phase.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "driver.hpp"
#include "stefan/analysis/energy.hpp"
#include "stefan/analysis/iss.hpp"
#include "stefan/analysis/transform.hpp"
#include "stefan/analysis/validity.hpp"
#include "stencils.hpp"

namespace stefan {

double stable_time_step_2p(const TwoPhaseState& state, const TwoPhaseParams& params) {
  const double al = derive_coefficients(params.liquid).alpha;
  const double as = derive_coefficients(params.solid).alpha;
  return std::min(stable_time_step(state.s, al, state.liquid_cells()),
                  stable_time_step(state.length - state.s, as, state.solid_cells()));
}

std::pair<TwoPhaseState, StepDiagnostics> step2(const TwoPhaseState& state, double q_c, double q_f,
                                                double dt, const TwoPhaseParams& params) {
  if (!(dt > 0.0)) throw std::invalid_argument("step2 needs dt > 0");
  if (state.liquid.size() < 4 || state.solid.size() < 4) {
    throw std::invalid_argument("step2 needs at least 3 cells per phase");
  }
  const auto cl = derive_coefficients(params.liquid);
  const auto cs = derive_coefficients(params.solid);
  const double kl = params.liquid.conductivity();
  const double ks = params.solid.conductivity();
  const std::size_t nl = state.liquid_cells();
  const std::size_t ns = state.solid_cells();
  const double hl = 1.0 / static_cast<double>(nl);
  const double hs = 1.0 / static_cast<double>(ns);
  const double s = state.s;
  const double span_s = state.length - s;

  StepDiagnostics diag;
  diag.interface_flux = -kl * detail::backward_slope(state.liquid, hl) / s;
  diag.solid_interface_flux = ks * detail::forward_slope(state.solid, hs) / span_s;
  diag.sdot = (diag.interface_flux + diag.solid_interface_flux) / cl.gamma;
  diag.cfl = dt / stable_time_step_2p(state, params);

  TwoPhaseState next;
  next.t = state.t + dt;
  next.length = state.length;
  next.liquid.resize(nl + 1);
  next.solid.resize(ns + 1);

  const double dl = cl.alpha / (s * s);
  const double ml = diag.sdot / s;
  bool up = detail::advance_interior(state.liquid, next.liquid, hl, dl, dt,
                                     [ml](double xi) { return xi * ml; });
  const auto& ul = state.liquid;
  const double ghost_l = ul[1] + 2.0 * hl * s * q_c / kl;
  next.liquid[0] = ul[0] + dt * dl * (ul[1] - 2.0 * ul[0] + ghost_l) / (hl * hl);
  next.liquid[nl] = 0.0;

  const double ds = cs.alpha / (span_s * span_s);
  const double ms = diag.sdot / span_s;
  up = detail::advance_interior(state.solid, next.solid, hs, ds, dt,
                                [ms](double eta) { return (1.0 - eta) * ms; }) ||
       up;
  const auto& us = state.solid;
  const double ghost_s = us[ns - 1] - 2.0 * hs * span_s * q_f / ks;
  next.solid[ns] = us[ns] + dt * ds * (ghost_s - 2.0 * us[ns] + us[ns - 1]) / (hs * hs);
  next.solid[0] = 0.0;

  next.s = s + dt * diag.sdot;
  diag.upwinded = up;
  diag.boundary_temperature = next.liquid[0];

  if (!std::isfinite(next.s) || !detail::all_finite(next.liquid) || !detail::all_finite(next.solid)) {
    throw NumericalBlowup("non-finite state during two-phase step", state.t);
  }
  const double upper = params.max_interface > 0.0 ? params.max_interface : state.length * (1.0 - 1e-3);
  if (!(next.s > params.min_interface) || !(next.s > 0.0)) {
    std::ostringstream msg;
    msg << "liquid phase disappeared: s = " << next.s << " m";
    throw PhaseDisappeared(msg.str(), state.t);
  }
  if (!(next.s < upper)) {
    std::ostringstream msg;
    msg << "solid phase disappeared: s = " << next.s << " m, L = " << state.length << " m";
    throw PhaseDisappeared(msg.str(), state.t);
  }
  return {std::move(next), diag};
}

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

Trajectory run2(const Scenario& scenario, const ControllerConfig& controller,
                const DisturbanceSpec& disturbance) {
  scenario.validate();
  controller.validate();
  if (!scenario.two_phase()) throw std::invalid_argument("run2() needs a two-phase scenario");
  if (std::holds_alternative<ControllerConfig::DirichletValidation>(controller.mode)) {
    throw std::invalid_argument("Dirichlet validation mode is one-phase only");
  }

  TwoPhaseParams params;
  params.liquid = scenario.liquid;
  params.solid = *scenario.solid;
  params.min_interface = 1e-3 * scenario.initial_interface;
  params.max_interface = scenario.domain_length * (1.0 - 1e-3);

  const auto cl = derive_coefficients(scenario.liquid);
  const KernelParams kernel(compute_epsilon(cl.alpha, cl.beta, controller.gain, controller.setpoint),
                            controller.gain, cl.beta, cl.alpha);

  TwoPhaseState state = initial_two_phase_state(scenario);

  Trajectory traj;
  traj.info.two_phase = true;
  traj.info.mode = scenario.mode;
  traj.info.setpoint = controller.setpoint;
  traj.info.gain = controller.gain;
  traj.info.domain_length = scenario.domain_length;
  traj.info.disturbance = disturbance;
  traj.info.negative_tolerance =
      negative_tolerance(std::max(max_abs(state.liquid), max_abs(state.solid)));
  const auto variant = monitor_variant(traj.info);

  auto flux = [&](const TwoPhaseState& st, double t) {
    if (const auto* ol = std::get_if<ControllerConfig::OpenLoop>(&controller.mode)) {
      return open_loop_flux(t, ol->q0, controller.gain, disturbance);
    }
    return closed_loop_flux_2p(st, params.liquid, params.solid, controller);
  };

  auto record = [&](const TwoPhaseState& st, double t) {
    Snapshot snap;
    snap.t = t;
    snap.s = st.s;
    snap.liquid = st.liquid;
    snap.solid = st.solid;
    snap.q_c = flux(st, t);
    snap.q_f = disturbance(t);
    snap.energy = internal_energy_2p(st, params.liquid, params.solid);
    const double X = reference_error_2p(st, params.liquid, params.solid, controller.setpoint);
    snap.lyapunov = lyapunov_V(st.liquid, st.s, X, kernel);
    snap.psi = psi_norm_2p(st, controller.setpoint);
    snap.boundary_temperature = st.liquid.front();
    snap.far_temperature = st.solid.back();
    snap.solid_energy = solid_sensible_energy(st, params.solid);
    snap.flags = snapshot_flags(snap, traj.info, variant);
    traj.snapshots.push_back(std::move(snap));
  };
  auto advance = [&](TwoPhaseState& st, double t, double dt) {
    auto [next, diag] = step2(st, flux(st, t), disturbance(t), dt, params);
    st = std::move(next);
  };
  auto stable = [&](const TwoPhaseState& st) { return stable_time_step_2p(st, params); };

  detail::drive(scenario, state, traj, stable, advance, record);
  return traj;
}

Trajectory run2(const Scenario& scenario) {
  return run2(scenario, controller_config(scenario), scenario.disturbance);
}

}  // namespace stefan
