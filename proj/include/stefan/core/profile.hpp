#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace stefan {

enum class PhaseSide { Liquid, Solid };

/// Initial temperature-above-melting profile T0(x) - T_m of one phase [K].
///
/// The value at the interface is always exactly zero regardless of the
/// underlying data. Tabulated samples are clamped to the admissible sign of
/// their phase (>= 0 liquid, <= 0 solid); every clamp leaves a warning.
class InitialProfile {
 public:
  /// Linear ramp: `wall_value` at the fixed wall (x = 0 for the liquid,
  /// x = L for the solid), zero at the interface.
  struct Linear {
    double wall_value;
  };
  struct Tabulated {
    std::vector<double> x;
    std::vector<double> values;
  };
  struct Function {
    std::function<double(double)> f;
  };
  using Kind = std::variant<Linear, Tabulated, Function>;

  InitialProfile() : kind_(Linear{0.0}) {}
  static InitialProfile linear(double wall_value);
  static InitialProfile tabulated(std::vector<double> x, std::vector<double> values, PhaseSide side);
  static InitialProfile function(std::function<double(double)> f);

  /// Evaluates at physical position x in the phase domain bounded by
  /// `interface` and `wall`. Throws std::domain_error outside that interval.
  double operator()(double x, double interface, double wall) const;

  const Kind& kind() const { return kind_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  explicit InitialProfile(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
  std::vector<std::string> warnings_;
};

}  // namespace stefan
