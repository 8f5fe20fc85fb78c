#include "stefan/analysis/validity.hpp"

#include <algorithm>
#include <cmath>

namespace stefan {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::LiquidBelowMelting:
      return "liquid_below_melting";
    case ViolationKind::SolidAboveMelting:
      return "solid_above_melting";
    case ViolationKind::InterfaceNonPositive:
      return "interface_non_positive";
    case ViolationKind::InterfaceAtOrBeyondSetpoint:
      return "interface_at_or_beyond_setpoint";
    case ViolationKind::InterfaceAtOrBeyondLength:
      return "interface_at_or_beyond_length";
    case ViolationKind::NonPositiveFlux:
      return "non_positive_flux";
    case ViolationKind::BoundaryNotAboveMelting:
      return "boundary_not_above_melting";
  }
  return "unknown";
}

MonitorVariant monitor_variant(const TrajectoryInfo& info) {
  if (info.two_phase) return MonitorVariant::TwoPhase;
  return info.mode == ControllerMode::ClosedLoop ? MonitorVariant::OnePhaseClosedLoop
                                                 : MonitorVariant::OnePhase;
}

double negative_tolerance(double max_abs_initial) { return 1e-10 * std::max(max_abs_initial, 1.0); }

std::vector<Violation> check_snapshot(const Snapshot& snap, const TrajectoryInfo& info,
                                      MonitorVariant variant) {
  std::vector<Violation> out;
  const double tol = info.negative_tolerance;
  const double t = snap.t;

  if (!snap.liquid.empty()) {
    const double lo = *std::min_element(snap.liquid.begin(), snap.liquid.end());
    if (lo < -tol) out.push_back({t, ViolationKind::LiquidBelowMelting, -lo});
  }
  if (variant == MonitorVariant::TwoPhase && !snap.solid.empty()) {
    const double hi = *std::max_element(snap.solid.begin(), snap.solid.end());
    if (hi > tol) out.push_back({t, ViolationKind::SolidAboveMelting, hi});
  }
  if (!(snap.s > 0.0)) out.push_back({t, ViolationKind::InterfaceNonPositive, -snap.s});
  if (variant == MonitorVariant::OnePhaseClosedLoop && snap.s >= info.setpoint) {
    out.push_back({t, ViolationKind::InterfaceAtOrBeyondSetpoint, snap.s - info.setpoint});
  }
  if (variant == MonitorVariant::TwoPhase && snap.s >= info.domain_length) {
    out.push_back({t, ViolationKind::InterfaceAtOrBeyondLength, snap.s - info.domain_length});
  }
  if (!(snap.q_c > 0.0)) out.push_back({t, ViolationKind::NonPositiveFlux, -snap.q_c});
  if (variant == MonitorVariant::OnePhaseClosedLoop && !(snap.boundary_temperature > 0.0)) {
    out.push_back({t, ViolationKind::BoundaryNotAboveMelting, -snap.boundary_temperature});
  }
  return out;
}

ValidityFlags snapshot_flags(const Snapshot& snap, const TrajectoryInfo& info, MonitorVariant variant) {
  ValidityFlags f;
  for (const auto& v : check_snapshot(snap, info, variant)) {
    switch (v.kind) {
      case ViolationKind::LiquidBelowMelting:
      case ViolationKind::BoundaryNotAboveMelting:
        f.liquid_below_melting = true;
        break;
      case ViolationKind::SolidAboveMelting:
        f.solid_above_melting = true;
        break;
      case ViolationKind::InterfaceNonPositive:
      case ViolationKind::InterfaceAtOrBeyondLength:
        f.interface_outside_domain = true;
        break;
      case ViolationKind::InterfaceAtOrBeyondSetpoint:
        f.setpoint_overshoot = true;
        break;
      case ViolationKind::NonPositiveFlux:
        f.nonpositive_flux = true;
        break;
    }
  }
  return f;
}

std::vector<Violation> validity_monitor(const Trajectory& traj, MonitorVariant variant) {
  std::vector<Violation> out;
  for (const auto& snap : traj.snapshots) {
    auto v = check_snapshot(snap, traj.info, variant);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

}  // namespace stefan
