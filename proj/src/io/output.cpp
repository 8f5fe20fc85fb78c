#include "stefan/io/output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "stefan/analysis/energy.hpp"
#include "stefan/control/control.hpp"
#include "stefan/io/scenario_json.hpp"

namespace stefan::io {

using nlohmann::json;

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_trajectory_csv(const Trajectory& traj, std::ostream& out) {
  const bool two = traj.info.two_phase;
  out << "t,s,q_c,q_f,T0_minus_Tm,E,V,Psi" << (two ? ",TL_minus_Tm" : "") << '\n';
  for (const auto& s : traj.snapshots) {
    out << format_double(s.t) << ',' << format_double(s.s) << ',' << format_double(s.q_c) << ','
        << format_double(s.q_f) << ',' << format_double(s.boundary_temperature) << ','
        << format_double(s.energy) << ',' << format_double(s.lyapunov) << ',' << format_double(s.psi);
    if (two) out << ',' << format_double(s.far_temperature);
    out << '\n';
  }
}

RunReport make_report(const Scenario& scenario, const Trajectory& traj) {
  RunReport r;
  r.scenario = scenario;
  r.assumptions = check_assumptions(scenario);
  r.warnings = scenario.warnings();
  r.steps = traj.steps;
  r.termination = traj.termination;
  if (traj.empty()) return r;

  r.final_time = traj.back().t;
  r.final_interface = traj.back().s;
  r.final_psi = traj.back().psi;
  r.offset = scenario.setpoint - r.final_interface;
  r.energy_residual = energy_balance_residual(traj);
  if (scenario.mode != ControllerMode::DirichletValidation) {
    r.flux_residual = flux_equivalence_residual(traj, controller_config(scenario));
  }
  r.envelope = fit_iss_envelope(traj, compute_lambda(scenario));
  r.violations = validity_monitor(traj, monitor_variant(traj.info));
  return r;
}

json to_json(const AssumptionReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"lhs", c.lhs}, {"rhs", c.rhs}});
  }
  return {{"all_passed", report.all_passed()}, {"checks", checks}};
}

namespace {

// Infinite envelope coefficients (infeasible fit) have no JSON number form.
json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

json to_json(const RunReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"time", v.time}, {"kind", to_string(v.kind)}, {"magnitude", v.magnitude}});
  }
  json j{
      {"schema_version", report_schema_version},
      {"scenario", to_json(r.scenario)},
      {"assumptions", to_json(r.assumptions)},
      {"warnings", r.warnings},
      {"terminal", {{"t", r.final_time}, {"s", r.final_interface}, {"psi", r.final_psi}, {"offset", r.offset}}},
      {"energy_residual", r.energy_residual},
      {"flux_residual", r.flux_residual ? json(*r.flux_residual) : json(nullptr)},
      {"iss_envelope",
       {{"lambda", r.envelope.lambda},
        {"M1", finite_or_null(r.envelope.m1)},
        {"M2", finite_or_null(r.envelope.m2)},
        {"min_slack", finite_or_null(r.envelope.min_slack)}}},
      {"violations", violations},
      {"steps", r.steps},
      {"valid", r.valid()},
  };
  if (r.termination) j["termination"] = {{"reason", r.termination->reason}, {"time", r.termination->time}};
  return j;
}

}  // namespace stefan::io
