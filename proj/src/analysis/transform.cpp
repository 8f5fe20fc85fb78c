#include "stefan/analysis/transform.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "stefan/core/quadrature.hpp"

namespace stefan {

double KernelParams::epsilon_limit(double gain, double beta, double alpha) {
  return 2.0 * std::sqrt(alpha * gain) / beta;
}

KernelParams::KernelParams(double epsilon, double gain, double beta, double alpha)
    : epsilon_(epsilon), gain_(gain), beta_(beta), alpha_(alpha) {
  if (!(gain > 0.0 && beta > 0.0 && alpha > 0.0)) {
    throw std::domain_error("kernel parameters need c, beta, alpha > 0");
  }
  const double limit = epsilon_limit(gain, beta, alpha);
  if (!(epsilon > 0.0 && epsilon < limit)) {
    std::ostringstream msg;
    msg << "epsilon = " << epsilon << " outside (0, " << limit << "); omega would not be real";
    throw std::domain_error(msg.str());
  }
  const double eb2 = (epsilon * beta) * (epsilon * beta);
  r_ = beta * epsilon / (2.0 * alpha);
  omega_ = std::sqrt((4.0 * alpha * gain - eb2) / (4.0 * alpha * alpha));
  p1_ = -(2.0 * alpha * gain - eb2) / (2.0 * alpha * beta * omega_);
}

double KernelParams::psi(double x) const {
  return std::exp(r_ * x) * (p1_ * std::sin(omega_ * x) + epsilon_ * std::cos(omega_ * x));
}

namespace {

// out_i = f_i - (beta/alpha) int_{x_i}^{s} K(x_i - y) f(y) dy - K(x_i - s) X, where
// kernel[k] = K(-k h) since x_i - x_j = -(j - i) h.
std::vector<double> volterra_map(std::span<const double> f, double s, double X,
                                 std::span<const double> kernel, double ratio) {
  const std::size_t n = f.size() - 1;
  const double h = s / static_cast<double>(n);
  std::vector<double> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    double integral = 0.0;
    if (i < n) {
      integral = 0.5 * (kernel[0] * f[i] + kernel[n - i] * f[n]);
      for (std::size_t j = i + 1; j < n; ++j) integral += kernel[j - i] * f[j];
      integral *= h;
    }
    out[i] = f[i] - ratio * integral - kernel[n - i] * X;
  }
  return out;
}

void require_grid(std::span<const double> f, double s) {
  if (f.size() < 2) throw std::invalid_argument("transform needs at least two grid points");
  if (!(s > 0.0)) throw std::invalid_argument("transform needs s > 0");
}

}  // namespace

std::vector<double> direct_transform(std::span<const double> u, double s, double X,
                                     const KernelParams& kp) {
  require_grid(u, s);
  const std::size_t n = u.size() - 1;
  const double h = s / static_cast<double>(n);
  std::vector<double> kernel(n + 1);
  for (std::size_t k = 0; k <= n; ++k) kernel[k] = kp.phi(-static_cast<double>(k) * h);
  return volterra_map(u, s, X, kernel, kp.beta() / kp.alpha());
}

std::vector<double> direct_transform(const OnePhaseState& state, double X, const KernelParams& kp) {
  return direct_transform(state.u, state.s, X, kp);
}

std::vector<double> inverse_transform(std::span<const double> w, double s, double X,
                                      const KernelParams& kp) {
  require_grid(w, s);
  const std::size_t n = w.size() - 1;
  const double h = s / static_cast<double>(n);
  std::vector<double> kernel(n + 1);
  for (std::size_t k = 0; k <= n; ++k) kernel[k] = kp.psi(-static_cast<double>(k) * h);
  return volterra_map(w, s, X, kernel, kp.beta() / kp.alpha());
}

double lyapunov_margin(double epsilon, double alpha, double beta, double gain, double setpoint) {
  const double quad = beta / alpha * (64.0 * gain * setpoint * setpoint / alpha + 3.0);
  return gain / (8.0 * beta) - epsilon / (4.0 * setpoint) - quad * epsilon * epsilon;
}

EpsilonChoice choose_epsilon(double alpha, double beta, double gain, double setpoint) {
  const double a = beta / alpha * (64.0 * gain * setpoint * setpoint / alpha + 3.0);
  const double b = 1.0 / (4.0 * setpoint);
  const double c0 = gain / (8.0 * beta);
  EpsilonChoice choice{};
  // Positive root of a e^2 + b e - c0 = 0, written without cancellation.
  choice.root = 2.0 * c0 / (b + std::sqrt(b * b + 4.0 * a * c0));
  choice.cap = alpha / (8.0 * beta * setpoint * (64.0 * gain * setpoint * setpoint / alpha + 3.0));
  choice.real_limit = KernelParams::epsilon_limit(gain, beta, alpha);
  choice.epsilon = 0.5 * std::min({choice.root, choice.cap, choice.real_limit * (1.0 - 1e-6)});
  return choice;
}

double compute_epsilon(double alpha, double beta, double gain, double setpoint) {
  return choose_epsilon(alpha, beta, gain, setpoint).epsilon;
}

double lyapunov_V(std::span<const double> u, double s, double X, const KernelParams& kp) {
  const auto w = direct_transform(u, s, X, kp);
  const double h = s / static_cast<double>(w.size() - 1);
  return trapezoid_squared(w, h) / (2.0 * kp.alpha()) + kp.epsilon() * X * X / (2.0 * kp.beta());
}

double lyapunov_V(const OnePhaseState& state, double X, const KernelParams& kp) {
  return lyapunov_V(state.u, state.s, X, kp);
}

}  // namespace stefan
