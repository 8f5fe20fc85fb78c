#include "stefan/core/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stefan {

std::string to_string(ControllerMode mode) {
  switch (mode) {
    case ControllerMode::ClosedLoop:
      return "closed_loop";
    case ControllerMode::OpenLoop:
      return "open_loop";
    case ControllerMode::DirichletValidation:
      return "dirichlet";
  }
  return "unknown";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid scenario: " + what);
}

}  // namespace

void Scenario::validate() const {
  require(std::isfinite(initial_interface) && initial_interface > 0.0, "initial_interface must be > 0");
  if (two_phase()) {
    require(std::isfinite(domain_length) && domain_length > initial_interface,
            "two-phase scenario needs domain_length > initial_interface");
    require(solid_grid >= 8, "solid_grid must be >= 8");
  }
  // s_r > s0 is deliberately left to the assumption report.
  require(std::isfinite(setpoint) && setpoint > 0.0, "setpoint must be > 0");
  require(std::isfinite(gain) && gain > 0.0, "gain must be > 0");
  require(grid >= 8, "grid must be >= 8");
  require(std::isfinite(final_time) && final_time > 0.0, "final_time must be > 0");
  require(time_step >= 0.0 && std::isfinite(time_step), "time_step must be >= 0");
  require(cfl_safety > 0.0 && cfl_safety <= 1.0, "cfl_safety must lie in (0, 1]");
  require(output_interval >= 0.0 && std::isfinite(output_interval), "output_interval must be >= 0");
  if (mode == ControllerMode::OpenLoop && open_loop_q0) {
    require(std::isfinite(*open_loop_q0) && *open_loop_q0 >= 0.0, "open-loop q0 must be >= 0");
  }
  if (mode == ControllerMode::DirichletValidation) {
    require(!two_phase(), "Dirichlet validation mode is one-phase only");
    require(std::isfinite(dirichlet_delta_t), "dirichlet delta_T must be finite");
  }
}

std::vector<std::string> Scenario::warnings() const {
  std::vector<std::string> out = liquid_profile.warnings();
  if (two_phase()) {
    out.insert(out.end(), solid_profile.warnings().begin(), solid_profile.warnings().end());
  }
  if (!disturbance.has_finite_total_energy()) {
    out.emplace_back("disturbance has unbounded total energy; the finite-integral heat-loss "
                     "condition is violated");
  }
  return out;
}

Scenario Scenario::zinc_one_phase(const DisturbanceSpec& disturbance) {
  Scenario sc;
  sc.disturbance = disturbance;
  return sc;
}

Scenario Scenario::zinc_two_phase(const DisturbanceSpec& disturbance) {
  Scenario sc;
  sc.solid = PhaseProperties(7140.0, 111961.0, 383.0, 121.0);
  sc.domain_length = 0.5;
  sc.solid_profile = InitialProfile::linear(-5.0);
  sc.disturbance = disturbance;
  return sc;
}

double eval_initial_profile(const Scenario& scenario, double x) {
  const double s0 = scenario.initial_interface;
  if (x >= 0.0 && x <= s0) return scenario.liquid_profile(x, s0, 0.0);
  if (scenario.two_phase() && x >= s0 && x <= scenario.domain_length) {
    return scenario.solid_profile(x, s0, scenario.domain_length);
  }
  throw std::domain_error("x = " + std::to_string(x) + " outside the scenario domain");
}

OnePhaseState initial_one_phase_state(const Scenario& scenario) {
  OnePhaseState st;
  st.s = scenario.initial_interface;
  const auto n = static_cast<std::size_t>(scenario.grid);
  st.u.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = st.s * static_cast<double>(i) / static_cast<double>(n);
    st.u[i] = scenario.liquid_profile(x, st.s, 0.0);
  }
  st.u[n] = 0.0;
  return st;
}

TwoPhaseState initial_two_phase_state(const Scenario& scenario) {
  if (!scenario.two_phase()) throw std::invalid_argument("scenario is not two-phase");
  TwoPhaseState st;
  st.s = scenario.initial_interface;
  st.length = scenario.domain_length;
  const auto nl = static_cast<std::size_t>(scenario.grid);
  const auto ns = static_cast<std::size_t>(scenario.solid_grid);
  st.liquid.resize(nl + 1);
  st.solid.resize(ns + 1);
  for (std::size_t i = 0; i < nl; ++i) {
    const double x = st.s * static_cast<double>(i) / static_cast<double>(nl);
    st.liquid[i] = scenario.liquid_profile(x, st.s, 0.0);
  }
  st.liquid[nl] = 0.0;
  st.solid[0] = 0.0;
  for (std::size_t j = 1; j <= ns; ++j) {
    const double x = std::min(
        st.length, st.s + (st.length - st.s) * static_cast<double>(j) / static_cast<double>(ns));
    st.solid[j] = scenario.solid_profile(x, st.s, st.length);
  }
  return st;
}

}  // namespace stefan
