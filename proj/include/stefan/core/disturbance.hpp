#pragma once

#include <string>
#include <variant>
#include <vector>

namespace stefan {

/// Declarative description of the heat-loss signal q_f(t) [W/m^2].
///
/// Every admissible signal is non-negative. A signal whose total energy
/// integral over [0, inf) diverges is still accepted but reports
/// `has_finite_total_energy() == false` so callers can flag it.
class DisturbanceSpec {
 public:
  struct Zero {};
  struct Constant {
    double qf_bar;
  };
  struct ExponentialDecay {
    double qf_bar;
    double decay_rate;  ///< K [1/s]
  };
  /// Piecewise-linear samples; held constant outside the sampled range.
  struct Table {
    std::vector<double> times;
    std::vector<double> values;
  };
  using Kind = std::variant<Zero, Constant, ExponentialDecay, Table>;

  DisturbanceSpec() = default;
  static DisturbanceSpec zero() { return DisturbanceSpec{}; }
  static DisturbanceSpec constant(double qf_bar);
  static DisturbanceSpec exponential(double qf_bar, double decay_rate);
  static DisturbanceSpec table(std::vector<double> times, std::vector<double> values);

  double operator()(double t) const;

  /// sup_{t >= 0} q_f(t). Analytic for the closed forms, max sample for tables.
  double supremum() const;

  /// Whether int_0^inf q_f(t) dt is finite.
  bool has_finite_total_energy() const;

  /// int_0^t q_f(tau) dtau.
  double integral(double t) const;

  const Kind& kind() const { return kind_; }
  std::string kind_name() const;

 private:
  explicit DisturbanceSpec(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_{Zero{}};
};

}  // namespace stefan
