#include "stefan/core/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stefan {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string("phase property '") + name +
                                "' must be positive and finite, got " + std::to_string(value));
  }
}

}  // namespace

PhaseProperties::PhaseProperties(double density, double latent_heat, double heat_capacity,
                                 double conductivity)
    : density_(density),
      latent_heat_(latent_heat),
      heat_capacity_(heat_capacity),
      conductivity_(conductivity) {
  require_positive(density, "density");
  require_positive(latent_heat, "latent_heat");
  require_positive(heat_capacity, "heat_capacity");
  require_positive(conductivity, "conductivity");
}

PhaseProperties PhaseProperties::zinc() { return {6570.0, 111961.0, 389.5687, 116.0}; }

DerivedCoefficients derive_coefficients(const PhaseProperties& p) {
  return {p.conductivity() / (p.density() * p.heat_capacity()),
          p.conductivity() / (p.density() * p.latent_heat()), p.density() * p.latent_heat()};
}

}  // namespace stefan
