#pragma once

#include <span>
#include <vector>

#include "stefan/core/state.hpp"

namespace stefan {

/// Parameters of the backstepping kernels
///   phi(x) = (c/beta) x - eps
///   psi(x) = e^{r x} (p1 sin(omega x) + eps cos(omega x))
/// with r = beta eps / (2 alpha), omega = sqrt(4 alpha c - (eps beta)^2) / (2 alpha),
/// p1 = -(2 alpha c - (eps beta)^2) / (2 alpha beta omega).
class KernelParams {
 public:
  /// Throws std::domain_error unless 0 < eps < 2 sqrt(alpha c) / beta.
  KernelParams(double epsilon, double gain, double beta, double alpha);

  double epsilon() const { return epsilon_; }
  double gain() const { return gain_; }
  double beta() const { return beta_; }
  double alpha() const { return alpha_; }
  double r() const { return r_; }
  double omega() const { return omega_; }
  double p1() const { return p1_; }

  double phi(double x) const { return gain_ / beta_ * x - epsilon_; }
  double psi(double x) const;

  /// Exclusive upper bound on eps keeping omega real.
  static double epsilon_limit(double gain, double beta, double alpha);

 private:
  double epsilon_;
  double gain_;
  double beta_;
  double alpha_;
  double r_;
  double omega_;
  double p1_;
};

/// w(x) = u(x) - (beta/alpha) int_x^s phi(x - y) u(y) dy - phi(x - s) X on the
/// uniform grid x_i = i s / N; inner integrals by trapezoid over [x_i, s].
std::vector<double> direct_transform(std::span<const double> u, double s, double X,
                                     const KernelParams& kp);
std::vector<double> direct_transform(const OnePhaseState& state, double X, const KernelParams& kp);

/// u(x) = w(x) - (beta/alpha) int_x^s psi(x - y) w(y) dy - psi(x - s) X.
std::vector<double> inverse_transform(std::span<const double> w, double s, double X,
                                      const KernelParams& kp);

/// Lyapunov margin g(eps) = c/(8 beta) - eps/(4 s_r) - (beta/alpha)(64 c s_r^2/alpha + 3) eps^2.
double lyapunov_margin(double epsilon, double alpha, double beta, double gain, double setpoint);

struct EpsilonChoice {
  double root;         ///< eps*, positive root of the margin
  double cap;          ///< alpha / (8 beta s_r (64 c s_r^2/alpha + 3))
  double real_limit;   ///< 2 sqrt(alpha c) / beta
  double epsilon;      ///< 0.5 min{root, cap, real_limit (1 - 1e-6)}
};

EpsilonChoice choose_epsilon(double alpha, double beta, double gain, double setpoint);
double compute_epsilon(double alpha, double beta, double gain, double setpoint);

/// V = ||w||^2 / (2 alpha) + eps X^2 / (2 beta) with w from direct_transform.
double lyapunov_V(const OnePhaseState& state, double X, const KernelParams& kp);
double lyapunov_V(std::span<const double> u, double s, double X, const KernelParams& kp);

}  // namespace stefan
