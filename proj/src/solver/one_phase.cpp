#include "stefan/solver/one_phase.hpp"

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

double stable_time_step(double extent, double alpha, std::size_t cells) {
  const double n = static_cast<double>(cells);
  return extent * extent / (2.0 * alpha * n * n);
}

double interface_gradient(const OnePhaseState& state, const OnePhaseParams& params) {
  if (state.u.size() < 4) throw std::invalid_argument("interface_gradient needs N >= 3");
  const double h = 1.0 / static_cast<double>(state.cells());
  return -params.liquid.conductivity() * detail::backward_slope(state.u, h) / state.s;
}

double boundary_flux(const OnePhaseState& state, const OnePhaseParams& params) {
  const double h = 1.0 / static_cast<double>(state.cells());
  return -params.liquid.conductivity() * detail::forward_slope(state.u, h) / state.s;
}

std::pair<OnePhaseState, StepDiagnostics> step(const OnePhaseState& state, double q_c, double q_f,
                                               double dt, const OnePhaseParams& params) {
  if (!(dt > 0.0)) throw std::invalid_argument("step needs dt > 0");
  if (state.u.size() < 4) throw std::invalid_argument("step needs N >= 3");
  const auto coeff = derive_coefficients(params.liquid);
  const double k = params.liquid.conductivity();
  const std::size_t n = state.cells();
  const double h = 1.0 / static_cast<double>(n);
  const double s = state.s;

  StepDiagnostics diag;
  diag.interface_flux = interface_gradient(state, params);
  diag.sdot = coeff.beta / k * (diag.interface_flux - q_f);
  diag.cfl = dt / stable_time_step(s, coeff.alpha, n);

  const double diffusivity = coeff.alpha / (s * s);
  const double metric = diag.sdot / s;

  OnePhaseState next;
  next.t = state.t + dt;
  next.u.resize(n + 1);
  diag.upwinded = detail::advance_interior(state.u, next.u, h, diffusivity, dt,
                                           [metric](double xi) { return xi * metric; });
  if (params.boundary_temperature) {
    next.u[0] = *params.boundary_temperature;
  } else {
    const double ghost = state.u[1] + 2.0 * h * s * q_c / k;
    next.u[0] = state.u[0] + dt * diffusivity * (state.u[1] - 2.0 * state.u[0] + ghost) / (h * h);
  }
  next.u[n] = 0.0;
  next.s = s + dt * diag.sdot;
  diag.boundary_temperature = next.u[0];

  if (!std::isfinite(next.s) || !detail::all_finite(next.u)) {
    throw NumericalBlowup("non-finite state during one-phase step", state.t);
  }
  if (!(next.s > params.min_interface) || !(next.s > 0.0)) {
    std::ostringstream msg;
    msg << "liquid phase disappeared: s = " << next.s << " m";
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

double controller_flux(const ControllerConfig& cfg, const OnePhaseState& state,
                       const OnePhaseParams& params, const DisturbanceSpec& disturbance, double t) {
  if (const auto* ol = std::get_if<ControllerConfig::OpenLoop>(&cfg.mode)) {
    return open_loop_flux(t, ol->q0, cfg.gain, disturbance);
  }
  if (std::holds_alternative<ControllerConfig::DirichletValidation>(cfg.mode)) {
    return boundary_flux(state, params);
  }
  return closed_loop_flux_1p(state, params.liquid, cfg);
}

}  // namespace

Trajectory run(const Scenario& scenario, const ControllerConfig& controller,
               const DisturbanceSpec& disturbance) {
  scenario.validate();
  controller.validate();
  if (scenario.two_phase()) throw std::invalid_argument("run() is one-phase; use run2()");

  OnePhaseParams params;
  params.liquid = scenario.liquid;
  params.min_interface = 1e-3 * scenario.initial_interface;
  if (const auto* d = std::get_if<ControllerConfig::DirichletValidation>(&controller.mode)) {
    params.boundary_temperature = d->delta_t;
  }

  const auto coeff = derive_coefficients(scenario.liquid);
  const KernelParams kernel(compute_epsilon(coeff.alpha, coeff.beta, controller.gain, controller.setpoint),
                            controller.gain, coeff.beta, coeff.alpha);

  OnePhaseState state = initial_one_phase_state(scenario);
  if (params.boundary_temperature) state.u[0] = *params.boundary_temperature;

  Trajectory traj;
  traj.info.two_phase = false;
  traj.info.mode = scenario.mode;
  traj.info.setpoint = controller.setpoint;
  traj.info.gain = controller.gain;
  traj.info.disturbance = disturbance;
  traj.info.negative_tolerance = negative_tolerance(max_abs(state.u));
  const auto variant = monitor_variant(traj.info);

  auto record = [&](const OnePhaseState& st, double t) {
    Snapshot snap;
    snap.t = t;
    snap.s = st.s;
    snap.liquid = st.u;
    snap.q_c = controller_flux(controller, st, params, disturbance, t);
    snap.q_f = disturbance(t);
    snap.energy = internal_energy_1p(st, scenario.liquid);
    snap.lyapunov = lyapunov_V(st, st.s - controller.setpoint, kernel);
    snap.psi = psi_norm_1p(st, controller.setpoint);
    snap.boundary_temperature = st.u.front();
    snap.far_temperature = std::nan("");
    snap.solid_energy = std::nan("");
    snap.flags = snapshot_flags(snap, traj.info, variant);
    traj.snapshots.push_back(std::move(snap));
  };
  auto advance = [&](OnePhaseState& st, double t, double dt) {
    const double q_c = controller_flux(controller, st, params, disturbance, t);
    auto [next, diag] = step(st, q_c, disturbance(t), dt, params);
    st = std::move(next);
  };
  auto stable = [&](const OnePhaseState& st) { return stable_time_step(st.s, coeff.alpha, st.cells()); };

  detail::drive(scenario, state, traj, stable, advance, record);
  return traj;
}

Trajectory run(const Scenario& scenario) {
  return run(scenario, controller_config(scenario), scenario.disturbance);
}

}  // namespace stefan
