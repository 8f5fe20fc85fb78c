#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stefan/analysis/iss.hpp"
#include "stefan/analysis/validity.hpp"
#include "stefan/core/assumptions.hpp"
#include "stefan/core/scenario.hpp"
#include "stefan/core/trajectory.hpp"

namespace stefan::io {

inline constexpr int report_schema_version = 1;

/// Shortest decimal text that round-trips a double (17 significant digits).
std::string format_double(double value);

/// Header plus one row per snapshot:
/// t,s,q_c,q_f,T0_minus_Tm,E,V,Psi[,TL_minus_Tm].
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

struct RunReport {
  Scenario scenario;
  AssumptionReport assumptions;
  std::vector<std::string> warnings;

  double final_time = 0.0;
  double final_interface = 0.0;
  double final_psi = 0.0;
  double offset = 0.0;  ///< s_r - s(t_f)

  double energy_residual = 0.0;
  std::optional<double> flux_residual;  ///< absent in Dirichlet-validation mode
  ISSEnvelope envelope;
  std::vector<Violation> violations;
  std::optional<Termination> termination;
  std::size_t steps = 0;

  bool valid() const { return violations.empty() && !termination; }
};

RunReport make_report(const Scenario& scenario, const Trajectory& traj);
nlohmann::json to_json(const AssumptionReport& report);
nlohmann::json to_json(const RunReport& report);

}  // namespace stefan::io
