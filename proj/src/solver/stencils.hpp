#pragma once

// Internal helpers shared by the one- and two-phase steppers.

#include <cmath>
#include <cstddef>
#include <span>

namespace stefan::detail {

/// Forward-Euler update of interior nodes 1..n-1 of
///   v_t = diffusivity v_zz + velocity(z_i) v_z
/// on a unit-interval grid of spacing h. Central differences unless the cell
/// Peclet number |velocity| h / diffusivity reaches 2, then first-order upwind.
/// Returns true when any node was upwinded.
template <class Velocity>
bool advance_interior(std::span<const double> v, std::span<double> out, double h, double diffusivity,
                      double dt, Velocity velocity) {
  const std::size_t n = v.size() - 1;
  const double inv_h2 = 1.0 / (h * h);
  bool upwinded = false;
  for (std::size_t i = 1; i < n; ++i) {
    const double a = velocity(static_cast<double>(i) * h);
    const double diffusion = diffusivity * (v[i + 1] - 2.0 * v[i] + v[i - 1]) * inv_h2;
    double advection;
    if (std::abs(a) * h < 2.0 * diffusivity) {
      advection = a * (v[i + 1] - v[i - 1]) / (2.0 * h);
    } else {
      upwinded = true;
      advection = a > 0.0 ? a * (v[i + 1] - v[i]) / h : a * (v[i] - v[i - 1]) / h;
    }
    out[i] = v[i] + dt * (diffusion + advection);
  }
  return upwinded;
}

/// d/dz at z = 1 from the second-order backward stencil.
inline double backward_slope(std::span<const double> v, double h) {
  const std::size_t n = v.size() - 1;
  return (3.0 * v[n] - 4.0 * v[n - 1] + v[n - 2]) / (2.0 * h);
}

/// d/dz at z = 0 from the second-order forward stencil.
inline double forward_slope(std::span<const double> v, double h) {
  return (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
}

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

}  // namespace stefan::detail
