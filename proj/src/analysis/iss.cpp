#include "stefan/analysis/iss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "stefan/core/quadrature.hpp"

namespace stefan {

double psi_norm_1p(const OnePhaseState& state, double setpoint) {
  const double X = state.s - setpoint;
  return std::sqrt(trapezoid_squared(state.u, state.spacing()) + X * X);
}

double psi_norm_2p(const TwoPhaseState& state, double setpoint) {
  const double X = state.s - setpoint;
  return std::sqrt(trapezoid_squared(state.liquid, state.liquid_spacing()) +
                   trapezoid_squared(state.solid, state.solid_spacing()) + X * X);
}

double reference_error_2p(const TwoPhaseState& state, const PhaseProperties& liquid,
                          const PhaseProperties& solid, double setpoint) {
  const double gamma = derive_coefficients(liquid).gamma;
  return state.s - setpoint +
         solid.volumetric_heat_capacity() / gamma * trapezoid(state.solid, state.solid_spacing());
}

double lyapunov_decay_rate_1p(double alpha, double setpoint, double gain) {
  return std::min(alpha / (setpoint * setpoint), gain) / 8.0;
}

double lyapunov_decay_rate_2p(double alpha_liquid, double alpha_solid, double length, double gain) {
  const double l2 = length * length;
  return std::min({alpha_liquid / l2, 2.0 * alpha_solid / l2, gain}) / 8.0;
}

double compute_lambda_1p(double alpha, double setpoint, double gain) {
  return lyapunov_decay_rate_1p(alpha, setpoint, gain) / 4.0;
}

double compute_lambda_2p(double alpha_liquid, double alpha_solid, double length, double gain) {
  return lyapunov_decay_rate_2p(alpha_liquid, alpha_solid, length, gain) / 4.0;
}

double compute_lambda(const Scenario& scenario) {
  const double alpha = derive_coefficients(scenario.liquid).alpha;
  if (!scenario.two_phase()) return compute_lambda_1p(alpha, scenario.setpoint, scenario.gain);
  return compute_lambda_2p(alpha, derive_coefficients(*scenario.solid).alpha,
                           scenario.domain_length, scenario.gain);
}

ISSEnvelope fit_decay_envelope(std::span<const double> times, std::span<const double> values,
                               std::span<const double> level, double rate) {
  const std::size_t n = values.size();
  if (n == 0 || times.size() != n || level.size() != n) {
    throw std::invalid_argument("envelope fit needs equally sized, non-empty series");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  const double y0 = values[0];
  std::vector<double> decay(n);
  for (std::size_t i = 0; i < n; ++i) decay[i] = y0 * std::exp(-rate * times[i]);

  // Constraints decay_i M1 + level_i M2 >= values_i. Those without a
  // disturbance term give a lower bound on M1; the rest are lines
  // M2 >= m_i - k_i M1 with k_i > 0.
  double m1_min = 1.0;
  struct Line {
    double m, k;
  };
  std::vector<Line> lines;
  for (std::size_t i = 0; i < n; ++i) {
    if (level[i] > 0.0) {
      lines.push_back({values[i] / level[i], decay[i] / level[i]});
    } else if (values[i] > 0.0) {
      m1_min = std::max(m1_min, decay[i] > 0.0 ? values[i] / decay[i] : inf);
    }
  }

  ISSEnvelope env;
  env.lambda = rate;
  if (!std::isfinite(m1_min)) {
    env.m1 = inf;
    env.m2 = inf;
    env.min_slack = -inf;
    return env;
  }

  auto required_m2 = [&](double m1) {
    double h = 0.0;
    for (const auto& l : lines) h = std::max(h, l.m - l.k * m1);
    return h;
  };

  const double sup_level = *std::max_element(level.begin(), level.end());
  const double weight = (sup_level > 0.0 && y0 > 0.0) ? sup_level / y0 : 1.0;

  // Walk the vertices of the upper envelope max_i(m_i - k_i M1) starting at
  // M1 = m1_min until it drops to zero; each vertex is a candidate optimum.
  std::vector<double> candidates{m1_min};
  if (!lines.empty()) {
    double x = m1_min;
    while (true) {
      double best = -inf;
      std::size_t active = 0;
      for (std::size_t j = 0; j < lines.size(); ++j) {
        const double v = lines[j].m - lines[j].k * x;
        if (v > best || (v == best && lines[j].k < lines[active].k)) {
          best = v;
          active = j;
        }
      }
      if (best <= 0.0 || lines[active].k == 0.0) break;
      const double zero_at = lines[active].m / lines[active].k;
      double next = zero_at;
      for (const auto& l : lines) {
        if (l.k < lines[active].k) {
          const double cross = (lines[active].m - l.m) / (lines[active].k - l.k);
          if (cross > x && cross < next) next = cross;
        }
      }
      candidates.push_back(next);
      if (next == zero_at || !(next > x)) break;
      x = next;
    }
  }

  double best_obj = inf;
  for (double m1 : candidates) {
    const double m2 = required_m2(m1);
    const double obj = m1 + weight * m2;
    if (obj < best_obj) {
      best_obj = obj;
      env.m1 = m1;
      env.m2 = m2;
    }
  }

  // Guard the binding constraints against round-off in the vertex solve.
  env.m1 *= 1.0 + 1e-12;
  env.m2 *= 1.0 + 1e-12;
  env.min_slack = inf;
  for (std::size_t i = 0; i < n; ++i) {
    env.min_slack = std::min(env.min_slack, env.m1 * decay[i] + env.m2 * level[i] - values[i]);
  }
  return env;
}

namespace {

std::vector<double> running_sup_qf(const Trajectory& traj, double scale, bool squared) {
  std::vector<double> level;
  level.reserve(traj.snapshots.size());
  double sup = 0.0;
  for (const auto& s : traj.snapshots) {
    double d = std::abs(s.q_f) * scale;
    if (squared) d *= d;
    sup = std::max(sup, d);
    level.push_back(sup);
  }
  return level;
}

}  // namespace

ISSEnvelope fit_iss_envelope(const Trajectory& traj, double lambda) {
  if (traj.empty()) throw std::invalid_argument("cannot fit an envelope to an empty trajectory");
  std::vector<double> t, psi;
  for (const auto& s : traj.snapshots) {
    t.push_back(s.t - traj.front().t);
    psi.push_back(s.psi);
  }
  const auto level = running_sup_qf(traj, 1.0, false);
  return fit_decay_envelope(t, psi, level, lambda);
}

ISSEnvelope fit_lyapunov_envelope(const Trajectory& traj, double rate, double beta_over_k) {
  if (traj.empty()) throw std::invalid_argument("cannot fit an envelope to an empty trajectory");
  std::vector<double> t, v;
  for (const auto& s : traj.snapshots) {
    t.push_back(s.t - traj.front().t);
    v.push_back(s.lyapunov);
  }
  const auto level = running_sup_qf(traj, beta_over_k, true);
  return fit_decay_envelope(t, v, level, rate);
}

}  // namespace stefan
