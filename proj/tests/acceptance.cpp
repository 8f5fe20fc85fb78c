// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "stefan/analysis/energy.hpp"
#include "stefan/analysis/iss.hpp"
#include "stefan/analysis/transform.hpp"
#include "stefan/analysis/validity.hpp"
#include "stefan/control/control.hpp"
#include "stefan/core/assumptions.hpp"
#include "stefan/solver/one_phase.hpp"
#include "stefan/solver/oracle.hpp"
#include "stefan/solver/two_phase.hpp"

using namespace stefan;

namespace {

constexpr double loss_decay = 5e-6;
const std::vector<double> loss_magnitudes{1e3, 5e3, 1e4};

// Round-trip bound constant for profiles of amplitude <= 40 K [K].
constexpr double roundtrip_c = 1000.0;

Scenario zinc(double qf_bar) { return Scenario::zinc_one_phase(DisturbanceSpec::exponential(qf_bar, loss_decay)); }

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s %s (%s)\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

void criterion_oracle() {
  const auto zinc = PhaseProperties::zinc();
  const double st = zinc.heat_capacity() * 10.0 / zinc.latent_heat();
  const auto setup = similarity_setup(zinc, st);
  const auto coarse = compare_with_similarity(setup, 100);
  const auto start = std::chrono::steady_clock::now();
  const auto fine = compare_with_similarity(setup, 200);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = fine.max_relative_error < 1e-2 && fine.max_relative_error < coarse.max_relative_error && seconds < 30.0;
  report(1, "oracle equivalence", pass,
         fmt("St=%.6g lambda=%.10g err(N=100)=%.3e err(N=200)=%.3e runtime(N=200)=%.2fs", st, setup.lambda,
             coarse.max_relative_error, fine.max_relative_error, seconds));
}

void criterion_energy() {
  // Fine snapshot cadence so the time quadrature of q_c - q_f does not mask
  // the solver's own balance error.
  auto sc = zinc(5e3);
  sc.output_interval = 0.5;
  sc.grid = 200;
  const double fine = energy_balance_residual(run(sc));
  sc.grid = 100;
  sc.cfl_safety = 0.2;  // dt twice the N = 200 default
  const double coarse = energy_balance_residual(run(sc));
  report(2, "energy conservation", fine < 1e-3 && fine <= 0.5 * coarse,
         fmt("residual(200, dt)=%.3e residual(100, 2dt)=%.3e ratio=%.2f", fine, coarse, coarse / fine));
}

void criterion_flux() {
  bool pass = true;
  std::string detail;
  for (double q : loss_magnitudes) {
    auto sc = zinc(q);
    sc.grid = 100;
    const double coarse = flux_equivalence_residual(run(sc), controller_config(sc));
    sc.grid = 200;
    const double fine = flux_equivalence_residual(run(sc), controller_config(sc));
    pass = pass && coarse < 1e-2 && fine < 1e-2 && fine < coarse;
    detail += fmt("%sqf=%.0e: %.2e -> %.2e", detail.empty() ? "" : "; ", q, coarse, fine);
  }
  report(3, "closed/open-loop equivalence", pass, detail);
}

std::vector<Trajectory> zinc_runs() {
  std::vector<Trajectory> out;
  for (double q : loss_magnitudes) out.push_back(run(zinc(q)));
  return out;
}

void criterion_validity(const std::vector<Trajectory>& runs) {
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto v = validity_monitor(runs[i], MonitorVariant::OnePhaseClosedLoop);
    double min_qc = INFINITY, min_t0 = INFINITY, max_s = 0.0;
    for (const auto& s : runs[i].snapshots) {
      min_qc = std::min(min_qc, s.q_c);
      min_t0 = std::min(min_t0, s.boundary_temperature);
      max_s = std::max(max_s, s.s);
    }
    pass = pass && v.empty() && !runs[i].termination;
    detail += fmt("%sqf=%.0e: %zu violations, min q_c=%.3g, min T0-Tm=%.3g, max s=%.6f", detail.empty() ? "" : "; ",
                  loss_magnitudes[i], v.size(), min_qc, min_t0, max_s);
  }
  report(4, "model validity", pass, detail);
}

bool envelope_holds(const Trajectory& traj, const ISSEnvelope& env) {
  double sup = 0.0;
  const double psi0 = traj.front().psi;
  for (const auto& s : traj.snapshots) {
    sup = std::max(sup, s.q_f);
    if (s.psi > env.m1 * psi0 * std::exp(-env.lambda * (s.t - traj.front().t)) + env.m2 * sup) return false;
  }
  return true;
}

void criterion_iss(const std::vector<Trajectory>& runs) {
  const auto sc = zinc(0.0);
  const auto d = derive_coefficients(sc.liquid);
  const double expected = std::min(d.alpha / (sc.setpoint * sc.setpoint), sc.gain) / 32.0;
  const double lambda = compute_lambda(sc);
  bool pass = std::abs(lambda - expected) <= 1e-15 * expected;
  std::string detail = fmt("lambda=%.6e", lambda);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto env = fit_iss_envelope(runs[i], lambda);
    const bool ok = std::isfinite(env.m1) && std::isfinite(env.m2) && env.min_slack >= 0.0 && envelope_holds(runs[i], env);
    pass = pass && ok;
    detail += fmt("; qf=%.0e: M1=%.6g M2=%.4g", loss_magnitudes[i], env.m1, env.m2);
  }
  auto zero = zinc(0.0);
  zero.disturbance = DisturbanceSpec::zero();
  const auto traj = run(zero);
  const auto env = fit_iss_envelope(traj, lambda);
  const bool zero_ok = env.m2 == 0.0 && std::isfinite(env.m1) && envelope_holds(traj, env);
  detail += fmt("; qf=0: M1=%.6g M2=%g", env.m1, env.m2);
  report(5, "ISS envelope", pass && zero_ok, detail);
}

void criterion_ordering(const std::vector<Trajectory>& runs) {
  std::vector<double> offsets;
  for (const auto& r : runs) offsets.push_back(0.35 - r.back().s);
  const bool pass = offsets[0] < offsets[1] && offsets[1] < offsets[2];
  report(6, "disturbance ordering", pass,
         fmt("t_f=%.0fs offsets=%.6e < %.6e < %.6e", runs[0].back().t, offsets[0], offsets[1], offsets[2]));
}

void criterion_transform() {
  const auto d = derive_coefficients(PhaseProperties::zinc());
  const KernelParams kp(compute_epsilon(d.alpha, d.beta, 5e-3, 0.35), 5e-3, d.beta, d.alpha);
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> grid(32, 400), mode(1, 6);
  bool roundtrip = true, identities = true;
  double worst_ratio = 0.0, worst_identity = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = grid(rng);
    const double s = 0.02 + 0.33 * u01(rng);
    const double X = s - 0.35;
    const double a = 20.0 * u01(rng), b = 20.0 * u01(rng), p = 1.0 + 2.0 * u01(rng);
    const int m = mode(rng);
    std::vector<double> u(n + 1);
    for (int i = 0; i <= n; ++i) {
      const double x = s * i / n, r = 1.0 - x / s;
      u[i] = a * std::pow(r, p) + b * std::pow(std::sin(m * std::numbers::pi * x / s), 2) * r;
    }
    u[n] = 0.0;
    const auto w = direct_transform(u, s, X, kp);
    const auto back = inverse_transform(w, s, X, kp);
    double err = 0.0, umax = 0.0;
    for (int i = 0; i <= n; ++i) {
      err = std::max(err, std::abs(back[i] - u[i]));
      umax = std::max(umax, std::abs(u[i]));
    }
    const double bound = 1e-6 * umax + roundtrip_c / (double(n) * n);
    worst_ratio = std::max(worst_ratio, err / bound);
    roundtrip = roundtrip && err < bound;
    const double scale = std::abs(kp.epsilon() * X);
    const double id = std::max(std::abs(w[n] - kp.epsilon() * X), std::abs(back[n])) / scale;
    worst_identity = std::max(worst_identity, id);
    identities = identities && id <= 4.0 * std::numeric_limits<double>::epsilon();
  }
  report(7, "transform algebra", roundtrip && identities,
         fmt("100 profiles, worst err/bound=%.3f (C=%.0f K), worst interface identity=%.2e rel", worst_ratio, roundtrip_c,
             worst_identity));
}

void criterion_two_phase() {
  // Inert solid: no heat flows through the solid, so the liquid sees the
  // one-phase problem.
  auto one = zinc(0.0);
  one.disturbance = DisturbanceSpec::zero();
  one.output_interval = 10.0;
  auto two = Scenario::zinc_two_phase(DisturbanceSpec::zero());
  two.domain_length = 1.0;
  two.solid_profile = InitialProfile::linear(0.0);
  two.output_interval = 10.0;
  const auto a = run(one);
  const auto b = run2(two);
  double worst = a.snapshots.size() == b.snapshots.size() ? 0.0 : INFINITY;
  for (std::size_t i = 0; std::isfinite(worst) && i < a.snapshots.size(); ++i) {
    worst = std::max(worst, std::abs(a.snapshots[i].s - b.snapshots[i].s) / a.snapshots[i].s);
  }

  auto loss = Scenario::zinc_two_phase(DisturbanceSpec::exponential(1e4, loss_decay));
  loss.output_interval = 1.0;
  const auto traj = run2(loss);
  const auto violations = validity_monitor(traj, MonitorVariant::TwoPhase);
  const double residual = energy_balance_residual(traj);
  const bool pass = worst < 1e-6 && violations.empty() && !traj.termination && residual < 1e-3;
  report(8, "two-phase reduction", pass,
         fmt("inert-solid max rel diff=%.2e; qf=1e4 at x=L: %zu violations, energy residual=%.3e", worst,
             violations.size(), residual));
}

void criterion_assumptions() {
  const auto sc = zinc(1e4);
  const auto report_ = check_assumptions(sc);
  const auto* sp = report_.find("setpoint_bound");
  const auto* gb = report_.find("gain_bound");
  // Independent arithmetic: s0 + (C_p/dH) T0 s0 / 2 and q/(rho dH s_r).
  const double sp_ref = 0.1 + 389.5687 / 111961.0 * 10.0 * 0.1 / 2.0;
  const double gb_ref = 1e4 / (6570.0 * 111961.0 * 0.35);
  const bool pass = report_.all_passed() && sp && gb && std::abs(sp->rhs - sp_ref) <= 1e-12 * sp_ref &&
                    std::abs(gb->rhs - gb_ref) <= 1e-12 * gb_ref && std::abs(sp->rhs - 0.1017) < 5e-5 &&
                    std::abs(gb->rhs - 3.9e-5) < 5e-7;
  report(9, "assumption gate", pass,
         fmt("%zu checks passed; setpoint threshold=%.8f m; gain threshold=%.6e 1/s",
             report_.checks.size(), sp ? sp->rhs : NAN, gb ? gb->rhs : NAN));
}

}  // namespace

int main() {
  criterion_oracle();
  criterion_energy();
  criterion_flux();
  const auto runs = zinc_runs();
  criterion_validity(runs);
  criterion_iss(runs);
  criterion_ordering(runs);
  criterion_transform();
  criterion_two_phase();
  criterion_assumptions();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
