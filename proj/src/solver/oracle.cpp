#include "stefan/solver/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stefan/analysis/similarity.hpp"
#include "stefan/solver/one_phase.hpp"

namespace stefan {

double SimilaritySetup::exact_interface(double t) const {
  return neumann_interface(lambda, derive_coefficients(liquid).alpha, t0 + t);
}

SimilaritySetup similarity_setup(const PhaseProperties& liquid, double stefan_number,
                                 double initial_interface, double horizon) {
  SimilaritySetup s{.liquid = liquid, .stefan_number = stefan_number};
  s.lambda = neumann_lambda(stefan_number);
  s.delta_t = stefan_number * liquid.latent_heat() / liquid.heat_capacity();
  s.initial_interface = initial_interface;
  const double alpha = derive_coefficients(liquid).alpha;
  s.t0 = std::pow(initial_interface / (2.0 * s.lambda), 2) / alpha;
  s.horizon = horizon;
  return s;
}

Scenario similarity_scenario(const SimilaritySetup& setup, int grid) {
  Scenario sc;
  sc.liquid = setup.liquid;
  sc.initial_interface = setup.initial_interface;
  const double alpha = derive_coefficients(setup.liquid).alpha;
  sc.liquid_profile = InitialProfile::function([setup, alpha](double x) {
    return neumann_temperature(setup.lambda, alpha, setup.delta_t, x, setup.t0);
  });
  sc.setpoint = std::max(sc.setpoint, 2.0 * setup.exact_interface(setup.horizon));
  sc.grid = grid;
  sc.final_time = setup.horizon;
  sc.mode = ControllerMode::DirichletValidation;
  sc.dirichlet_delta_t = setup.delta_t;
  return sc;
}

SimilarityComparison compare_with_similarity(const SimilaritySetup& setup, int grid) {
  const auto traj = run(similarity_scenario(setup, grid));
  SimilarityComparison out{.grid = grid, .steps = traj.steps};
  for (const auto& snap : traj.snapshots) {
    if (snap.t < 0.5 * setup.horizon) continue;
    const double exact = setup.exact_interface(snap.t);
    out.max_relative_error = std::max(out.max_relative_error, std::abs(snap.s - exact) / exact);
  }
  out.final_interface = traj.back().s;
  out.exact_final_interface = setup.exact_interface(traj.back().t);
  if (traj.termination) out.max_relative_error = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace stefan
