#include "stefan/analysis/similarity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stefan {

double neumann_lambda(double stefan_number, double tolerance) {
  if (!(stefan_number > 0.0) || !std::isfinite(stefan_number)) {
    throw std::invalid_argument("Stefan number must be positive and finite");
  }
  const double target = stefan_number / std::sqrt(std::numbers::pi);
  // Multiplying out the exponential keeps the residual finite for large lambda.
  const auto residual = [target](double l) { return l * std::erf(l) - target * std::exp(-l * l); };
  double lo = 0.0;
  double hi = 1.0;
  while (residual(hi) < 0.0) hi *= 2.0;
  while (hi - lo > tolerance * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (residual(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double neumann_interface(double lambda, double alpha, double t) {
  return 2.0 * lambda * std::sqrt(alpha * t);
}

double neumann_temperature(double lambda, double alpha, double delta_t, double x, double t) {
  return delta_t * (1.0 - std::erf(x / (2.0 * std::sqrt(alpha * t))) / std::erf(lambda));
}

}  // namespace stefan
