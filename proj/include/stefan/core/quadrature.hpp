#pragma once

#include <cstddef>
#include <span>

namespace stefan {

/// Composite trapezoid rule for samples f[0..n] on a uniform grid of spacing h.
inline double trapezoid(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double acc = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i];
  return acc * h;
}

/// Composite trapezoid rule for f^2.
inline double trapezoid_squared(std::span<const double> f, double h) {
  if (f.size() < 2) return 0.0;
  double acc = 0.5 * (f.front() * f.front() + f.back() * f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) acc += f[i] * f[i];
  return acc * h;
}

}  // namespace stefan
