#pragma once

// Time loop shared by the one- and two-phase runners: adaptive steps clipped
// so that every output time k * output_step is hit exactly.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "stefan/core/scenario.hpp"
#include "stefan/core/trajectory.hpp"
#include "stefan/solver/errors.hpp"

namespace stefan::detail {

/// `advance(state, t, dt_max)` performs one step of at most dt_max and returns
/// the step actually taken; `record(state, t)` appends a snapshot.
template <class State, class Advance, class Record, class StableStep>
void drive(const Scenario& scenario, State& state, Trajectory& traj, StableStep stable_step,
           Advance advance, Record record) {
  const double t_final = scenario.final_time;
  const double out_dt = scenario.output_step();
  const auto outputs = static_cast<std::size_t>(std::ceil(t_final / out_dt - 1e-9));

  double t = 0.0;
  record(state, t);
  try {
    for (std::size_t k = 1; k <= outputs; ++k) {
      const double target = std::min(t_final, static_cast<double>(k) * out_dt);
      while (t < target) {
        double dt = scenario.cfl_safety * stable_step(state);
        if (scenario.time_step > 0.0) dt = std::min(scenario.time_step, stable_step(state));
        bool lands = false;
        if (target - t <= dt * (1.0 + 1e-9)) {
          dt = target - t;
          lands = true;
        }
        advance(state, t, dt);
        ++traj.steps;
        t = lands ? target : t + dt;
        state.t = t;
      }
      record(state, t);
    }
  } catch (const PhaseDisappeared& e) {
    traj.termination = Termination{e.what(), e.time()};
  }
}

}  // namespace stefan::detail
