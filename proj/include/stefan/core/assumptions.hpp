#pragma once

#include <string>
#include <vector>

#include "stefan/core/scenario.hpp"

namespace stefan {

/// One inequality of the admissibility gate, `lhs relation rhs`.
struct AssumptionCheck {
  std::string id;           ///< e.g. "initial_data", "setpoint_bound"
  std::string description;  ///< human-readable inequality
  bool passed = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;

  bool all_passed() const;
  const AssumptionCheck* find(const std::string& id) const;
};

/// Evaluates the admissibility conditions on initial data, heat loss,
/// setpoint and gain. Integrals use the composite trapezoid rule on the
/// scenario grid. Never throws for a structurally valid scenario.
AssumptionReport check_assumptions(const Scenario& scenario);

}  // namespace stefan
