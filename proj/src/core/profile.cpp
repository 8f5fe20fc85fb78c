#include "stefan/core/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace stefan {

InitialProfile InitialProfile::linear(double wall_value) {
  if (!std::isfinite(wall_value)) throw std::invalid_argument("profile wall value not finite");
  return InitialProfile{Linear{wall_value}};
}

InitialProfile InitialProfile::tabulated(std::vector<double> x, std::vector<double> values,
                                         PhaseSide side) {
  if (x.size() < 2 || x.size() != values.size()) {
    throw std::invalid_argument("tabulated profile needs >= 2 samples with matching x and values");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(values[i])) {
      throw std::invalid_argument("tabulated profile contains non-finite samples");
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw std::invalid_argument("tabulated profile x must be strictly increasing");
    }
  }
  std::vector<std::string> warnings;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const bool wrong_sign = side == PhaseSide::Liquid ? values[i] < 0.0 : values[i] > 0.0;
    if (wrong_sign) {
      std::ostringstream msg;
      msg << (side == PhaseSide::Liquid ? "liquid" : "solid") << " profile sample " << i
          << " (x=" << x[i] << ") = " << values[i] << " clamped to 0";
      warnings.push_back(msg.str());
      values[i] = 0.0;
    }
  }
  InitialProfile p{Tabulated{std::move(x), std::move(values)}};
  p.warnings_ = std::move(warnings);
  return p;
}

InitialProfile InitialProfile::function(std::function<double(double)> f) {
  if (!f) throw std::invalid_argument("profile function is empty");
  return InitialProfile{Function{std::move(f)}};
}

double InitialProfile::operator()(double x, double interface, double wall) const {
  const double lo = std::min(interface, wall);
  const double hi = std::max(interface, wall);
  if (!(x >= lo && x <= hi)) {
    std::ostringstream msg;
    msg << "x = " << x << " outside phase domain [" << lo << ", " << hi << "]";
    throw std::domain_error(msg.str());
  }
  if (x == interface) return 0.0;

  if (const auto* lin = std::get_if<Linear>(&kind_)) {
    return lin->wall_value * (x - interface) / (wall - interface);
  }
  if (const auto* tab = std::get_if<Tabulated>(&kind_)) {
    const auto& xs = tab->x;
    const auto& vs = tab->values;
    if (x <= xs.front()) return vs.front();
    if (x >= xs.back()) return vs.back();
    const auto i = static_cast<std::size_t>(std::upper_bound(xs.begin(), xs.end(), x) - xs.begin());
    const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return (1.0 - w) * vs[i - 1] + w * vs[i];
  }
  return std::get<Function>(kind_).f(x);
}

}  // namespace stefan
