#include "stefan/control/control.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "stefan/core/quadrature.hpp"

namespace stefan {

void ControllerConfig::validate() const {
  if (!(gain > 0.0)) throw std::invalid_argument("controller gain must be > 0");
  if (!(setpoint > 0.0)) throw std::invalid_argument("controller setpoint must be > 0");
  if (const auto* ol = std::get_if<OpenLoop>(&mode); ol && !(ol->q0 >= 0.0)) {
    throw std::invalid_argument("open-loop q0 must be >= 0");
  }
}

ControllerConfig controller_config(const Scenario& scenario) {
  ControllerConfig cfg;
  cfg.gain = scenario.gain;
  cfg.setpoint = scenario.setpoint;
  switch (scenario.mode) {
    case ControllerMode::ClosedLoop:
      if (scenario.two_phase()) {
        cfg.mode = ControllerConfig::ClosedLoop2P{};
      } else {
        cfg.mode = ControllerConfig::ClosedLoop1P{};
      }
      break;
    case ControllerMode::OpenLoop: {
      double q0 = 0.0;
      if (scenario.open_loop_q0) {
        q0 = *scenario.open_loop_q0;
      } else {
        ControllerConfig probe{scenario.gain, scenario.setpoint, ControllerConfig::ClosedLoop1P{}};
        q0 = scenario.two_phase()
                 ? closed_loop_flux_2p(initial_two_phase_state(scenario), scenario.liquid,
                                       *scenario.solid, probe)
                 : closed_loop_flux_1p(initial_one_phase_state(scenario), scenario.liquid, probe);
      }
      cfg.mode = ControllerConfig::OpenLoop{q0};
      break;
    }
    case ControllerMode::DirichletValidation:
      cfg.mode = ControllerConfig::DirichletValidation{scenario.dirichlet_delta_t};
      break;
  }
  return cfg;
}

double closed_loop_flux_1p(const OnePhaseState& state, const PhaseProperties& liquid,
                           const ControllerConfig& cfg) {
  const double thermal = liquid.volumetric_heat_capacity() * trapezoid(state.u, state.spacing());
  const double latent = derive_coefficients(liquid).gamma * (state.s - cfg.setpoint);
  return -cfg.gain * (thermal + latent);
}

double closed_loop_flux_2p(const TwoPhaseState& state, const PhaseProperties& liquid,
                           const PhaseProperties& solid, const ControllerConfig& cfg) {
  const double thermal_l =
      liquid.volumetric_heat_capacity() * trapezoid(state.liquid, state.liquid_spacing());
  const double thermal_s = solid.volumetric_heat_capacity() * trapezoid(state.solid, state.solid_spacing());
  const double latent = derive_coefficients(liquid).gamma * (state.s - cfg.setpoint);
  return -cfg.gain * (thermal_l + thermal_s + latent);
}

namespace {

double adaptive_trapezoid(const std::function<double(double)>& f, double a, double b, double fa,
                          double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double left = 0.5 * (m - a) * (fa + fm);
  const double right = 0.5 * (b - m) * (fm + fb);
  const double refined = left + right;
  // Richardson: the trapezoid error shrinks fourfold per halving.
  if (depth <= 0 || std::abs(refined - whole) <= 3.0 * tol) return refined + (refined - whole) / 3.0;
  return adaptive_trapezoid(f, a, m, fa, fm, left, 0.5 * tol, depth - 1) +
         adaptive_trapezoid(f, m, b, fm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  return adaptive_trapezoid(f, a, b, fa, fb, 0.5 * (b - a) * (fa + fb), tol, 40);
}

double table_convolution(double t, double gain, const DisturbanceSpec& disturbance,
                         const DisturbanceSpec::Table& tab) {
  // Split at the table knots so the integrand is smooth on every piece.
  std::vector<double> knots{0.0};
  for (double k : tab.times) {
    if (k > 0.0 && k < t) knots.push_back(k);
  }
  knots.push_back(t);
  const auto integrand = [&](double tau) { return std::exp(-gain * (t - tau)) * disturbance(tau); };
  const double scale = std::max(disturbance.supremum(), 1e-300);
  double acc = 0.0;
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const double piece = knots[i] - knots[i - 1];
    acc += integrate(integrand, knots[i - 1], knots[i], 1e-13 * scale * piece);
  }
  return gain * acc;
}

}  // namespace

double open_loop_flux(double t, double q0, double gain, const DisturbanceSpec& disturbance) {
  if (!(t >= 0.0)) throw std::invalid_argument("open_loop_flux needs t >= 0");
  const double homogeneous = q0 * std::exp(-gain * t);
  if (t == 0.0) return q0;
  const auto& kind = disturbance.kind();
  if (std::holds_alternative<DisturbanceSpec::Zero>(kind)) return homogeneous;
  if (const auto* c = std::get_if<DisturbanceSpec::Constant>(&kind)) {
    return homogeneous - c->qf_bar * std::expm1(-gain * t);
  }
  if (const auto* e = std::get_if<DisturbanceSpec::ExponentialDecay>(&kind)) {
    // c qf (e^{-Kt} - e^{-ct}) / (c - K), with the c == K limit c qf t e^{-ct}.
    const double diff = gain - e->decay_rate;
    if (std::abs(diff * t) < 1.0) {
      const double ratio = diff == 0.0 ? t : std::expm1(diff * t) / diff;
      return homogeneous + gain * e->qf_bar * std::exp(-gain * t) * ratio;
    }
    return homogeneous +
           gain * e->qf_bar * (std::exp(-e->decay_rate * t) - std::exp(-gain * t)) / diff;
  }
  return homogeneous +
         table_convolution(t, gain, disturbance, std::get<DisturbanceSpec::Table>(kind));
}

double flux_equivalence_residual(const Trajectory& traj, const ControllerConfig& cfg) {
  if (traj.empty()) throw std::invalid_argument("flux equivalence needs a non-empty trajectory");
  const double t0 = traj.front().t;
  const double q0 = traj.front().q_c;
  if (!std::isfinite(q0)) throw std::invalid_argument("trajectory carries no flux diagnostics");
  double worst = 0.0;
  for (const auto& snap : traj.snapshots) {
    if (!std::isfinite(snap.q_c)) throw std::invalid_argument("trajectory carries no flux diagnostics");
    const double reference = open_loop_flux(snap.t - t0, q0, cfg.gain, traj.info.disturbance);
    const double denom = std::max(q0, std::abs(snap.q_c));
    const double dev = std::abs(snap.q_c - reference);
    worst = std::max(worst, denom > 0.0 ? dev / denom : dev);
  }
  return worst;
}

}  // namespace stefan
