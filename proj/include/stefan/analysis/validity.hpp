#pragma once

#include <string>
#include <vector>

#include "stefan/core/trajectory.hpp"

namespace stefan {

enum class MonitorVariant {
  OnePhase,            ///< T >= T_m, s > 0, q_c > 0
  OnePhaseClosedLoop,  ///< additionally s < s_r and T(0,t) > T_m
  TwoPhase,            ///< T_l >= T_m, T_s <= T_m, 0 < s < L, q_c > 0
};

enum class ViolationKind {
  LiquidBelowMelting,
  SolidAboveMelting,
  InterfaceNonPositive,
  InterfaceAtOrBeyondSetpoint,
  InterfaceAtOrBeyondLength,
  NonPositiveFlux,
  BoundaryNotAboveMelting,
};

std::string to_string(ViolationKind kind);

struct Violation {
  double time = 0.0;
  ViolationKind kind{};
  double magnitude = 0.0;  ///< size of the excursion past the admissible bound
};

/// Variant implied by the run metadata.
MonitorVariant monitor_variant(const TrajectoryInfo& info);

/// tol_neg = 1e-10 max(max|u0|, 1 K).
double negative_tolerance(double max_abs_initial);

/// Violations present in a single snapshot, in a fixed order.
std::vector<Violation> check_snapshot(const Snapshot& snap, const TrajectoryInfo& info,
                                      MonitorVariant variant);
ValidityFlags snapshot_flags(const Snapshot& snap, const TrajectoryInfo& info, MonitorVariant variant);

/// Scans every snapshot; each offending (snapshot, condition) pair is one entry.
std::vector<Violation> validity_monitor(const Trajectory& traj, MonitorVariant variant);

}  // namespace stefan
