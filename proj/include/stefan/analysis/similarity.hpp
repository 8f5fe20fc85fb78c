#pragma once

namespace stefan {

/// Root lambda > 0 of lambda e^{lambda^2} erf(lambda) = St / sqrt(pi), the
/// classical one-phase Neumann condition, by bisection until the bracket is
/// narrower than `tolerance` relative to the root. Throws
/// std::invalid_argument unless St > 0.
double neumann_lambda(double stefan_number, double tolerance = 1e-12);

/// s(t) = 2 lambda sqrt(alpha t).
double neumann_interface(double lambda, double alpha, double t);

/// T(x,t) - T_m = delta_t (1 - erf(x / (2 sqrt(alpha t))) / erf(lambda)).
double neumann_temperature(double lambda, double alpha, double delta_t, double x, double t);

}  // namespace stefan
