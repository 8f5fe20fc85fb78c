#pragma once

#include <cstddef>
#include <vector>

namespace stefan {

/// One-phase state on the immobilized coordinate xi = x / s.
/// u[i] = T(xi_i s, t) - T_m with xi_i = i / N; u[N] is the interface and is
/// held at exactly zero.
struct OnePhaseState {
  double t = 0.0;
  double s = 0.0;
  std::vector<double> u;

  std::size_t cells() const { return u.empty() ? 0 : u.size() - 1; }
  double spacing() const { return s / static_cast<double>(cells()); }
};

/// Two-phase state. The liquid lives on xi = x / s, the solid on
/// eta = (x - s) / (L - s); liquid.back() and solid.front() sit on the
/// interface and are exactly zero.
struct TwoPhaseState {
  double t = 0.0;
  double s = 0.0;
  double length = 0.0;  ///< L
  std::vector<double> liquid;
  std::vector<double> solid;

  std::size_t liquid_cells() const { return liquid.empty() ? 0 : liquid.size() - 1; }
  std::size_t solid_cells() const { return solid.empty() ? 0 : solid.size() - 1; }
  double liquid_spacing() const { return s / static_cast<double>(liquid_cells()); }
  double solid_spacing() const { return (length - s) / static_cast<double>(solid_cells()); }
};

}  // namespace stefan
