#pragma once

#include <stdexcept>
#include <string>

namespace stefan {

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, double time) : std::runtime_error(what), time_(time) {}
  /// Simulation time at which the failing step started [s].
  double time() const { return time_; }

 private:
  double time_;
};

/// The interface left the admissible range, so one phase has (nearly) vanished.
class PhaseDisappeared : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A non-finite value appeared in the state.
class NumericalBlowup : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace stefan
