#pragma once

namespace stefan {

/// Physical constants of one material phase (SI units).
/// Invariant: every field is strictly positive and finite.
class PhaseProperties {
 public:
  PhaseProperties(double density, double latent_heat, double heat_capacity, double conductivity);

  double density() const { return density_; }            ///< rho [kg/m^3]
  double latent_heat() const { return latent_heat_; }    ///< Delta H* [J/kg]
  double heat_capacity() const { return heat_capacity_; }///< C_p [J/(kg K)]
  double conductivity() const { return conductivity_; }  ///< k [W/(m K)]

  /// rho * C_p, the volumetric heat capacity [J/(m^3 K)].
  double volumetric_heat_capacity() const { return density_ * heat_capacity_; }

  /// Zinc, the reference material of the bundled scenarios.
  static PhaseProperties zinc();

 private:
  double density_;
  double latent_heat_;
  double heat_capacity_;
  double conductivity_;
};

struct DerivedCoefficients {
  double alpha;  ///< k / (rho C_p) [m^2/s]
  double beta;   ///< k / (rho Delta H*) [m^2/(s K)]
  double gamma;  ///< rho Delta H* [J/m^3]
};

DerivedCoefficients derive_coefficients(const PhaseProperties& p);

}  // namespace stefan
