#pragma once

#include <cstddef>

#include "stefan/core/phase.hpp"
#include "stefan/core/scenario.hpp"

namespace stefan {

/// Fixed-temperature melting started from the Neumann similarity profile at
/// the time t0 where the exact interface equals `initial_interface`.
struct SimilaritySetup {
  PhaseProperties liquid = PhaseProperties::zinc();
  double stefan_number = 0.0;
  double lambda = 0.0;
  double delta_t = 0.0;  ///< wall superheat St * dH / C_p [K]
  double initial_interface = 0.1;
  double t0 = 0.0;       ///< similarity time of the initial state [s]
  double horizon = 1.0e4;

  /// Exact interface `t` seconds after the start of the run.
  double exact_interface(double t) const;
};

SimilaritySetup similarity_setup(const PhaseProperties& liquid, double stefan_number,
                                 double initial_interface = 0.1, double horizon = 1.0e4);

/// Dirichlet-validation scenario reproducing `setup` on `grid` cells.
Scenario similarity_scenario(const SimilaritySetup& setup, int grid);

struct SimilarityComparison {
  int grid = 0;
  double max_relative_error = 0.0;  ///< over the final half of the horizon
  double final_interface = 0.0;
  double exact_final_interface = 0.0;
  std::size_t steps = 0;
};

SimilarityComparison compare_with_similarity(const SimilaritySetup& setup, int grid);

}  // namespace stefan
