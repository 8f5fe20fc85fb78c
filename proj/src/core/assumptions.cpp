#include "stefan/core/assumptions.hpp"

#include <algorithm>
#include <limits>

#include "stefan/core/quadrature.hpp"

namespace stefan {

bool AssumptionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const AssumptionCheck* AssumptionReport::find(const std::string& id) const {
  for (const auto& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

AssumptionReport check_assumptions(const Scenario& scenario) {
  AssumptionReport report;
  const auto liq = derive_coefficients(scenario.liquid);
  const double s0 = scenario.initial_interface;
  const double sr = scenario.setpoint;

  // Liquid initial data sampled on the solver grid.
  std::vector<double> ul(static_cast<std::size_t>(scenario.grid) + 1);
  const double hl = s0 / scenario.grid;
  for (std::size_t i = 0; i < ul.size(); ++i) {
    ul[i] = scenario.liquid_profile(std::min(s0, hl * static_cast<double>(i)), s0, 0.0);
  }
  const double liquid_integral = trapezoid(ul, hl);
  const double liquid_min = *std::min_element(ul.begin(), ul.end());

  report.checks.push_back({"initial_data", "s0 > 0 and min(T0 - Tm) >= 0 on the liquid",
                           s0 > 0.0 && liquid_min >= 0.0, liquid_min, 0.0});

  const double qf_bar = scenario.disturbance.supremum();
  const bool finite_energy = scenario.disturbance.has_finite_total_energy();
  report.checks.push_back({"heat_loss", "q_f >= 0 with finite total energy int_0^inf q_f dt",
                           finite_energy, finite_energy ? 0.0 : std::numeric_limits<double>::infinity(),
                           finite_energy ? 0.0 : std::numeric_limits<double>::max()});

  // Both one-phase and two-phase gain bounds use the liquid beta.
  const double gain_threshold = liq.beta / (scenario.liquid.conductivity() * sr) * qf_bar;
  const AssumptionCheck gain_check{"gain_bound", "c > beta / (k s_r) * sup q_f",
                                   scenario.gain > gain_threshold, scenario.gain, gain_threshold};

  if (!scenario.two_phase()) {
    const double threshold = s0 + liq.beta / liq.alpha * liquid_integral;
    report.checks.push_back({"setpoint_bound", "s_r > s0 + (beta/alpha) int_0^s0 (T0 - Tm) dx",
                             sr > threshold, sr, threshold});
    report.checks.push_back(gain_check);
    return report;
  }

  const double length = scenario.domain_length;
  std::vector<double> us(static_cast<std::size_t>(scenario.solid_grid) + 1);
  const double hs = (length - s0) / scenario.solid_grid;
  for (std::size_t j = 0; j < us.size(); ++j) {
    us[j] = scenario.solid_profile(std::min(length, s0 + hs * static_cast<double>(j)), s0, length);
  }
  const double solid_integral = trapezoid(us, hs);
  const double solid_max = *std::max_element(us.begin(), us.end());

  report.checks.push_back({"solid_initial_data", "0 < s0 < L and max(T_s0 - Tm) <= 0 on the solid",
                           s0 < length && solid_max <= 0.0, solid_max, 0.0});

  // gamma is the liquid rho * dH; beta_i = k_i / gamma for both phases.
  const double gamma = liq.gamma;
  const double energy = scenario.liquid.volumetric_heat_capacity() * liquid_integral +
                        scenario.solid->volumetric_heat_capacity() * solid_integral + gamma * s0;
  report.checks.push_back({"positive_initial_energy", "E(0) > 0", energy > 0.0, energy, 0.0});

  const double lower = s0 + scenario.liquid.volumetric_heat_capacity() / gamma * liquid_integral +
                       scenario.solid->volumetric_heat_capacity() / gamma * solid_integral;
  report.checks.push_back({"setpoint_bound",
                           "s0 + (beta_l/alpha_l) int T_l0 + (beta_s/alpha_s) int T_s0 < s_r < L",
                           lower < sr && sr < length, sr, lower});
  report.checks.push_back(gain_check);
  return report;
}

}  // namespace stefan
