#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "stefan/analysis/energy.hpp"
#include "stefan/analysis/iss.hpp"
#include "stefan/analysis/similarity.hpp"
#include "stefan/analysis/validity.hpp"
#include "stefan/core/scenario.hpp"

using namespace stefan;

namespace {

Scenario zinc(double qf_bar) { return Scenario::zinc_one_phase(DisturbanceSpec::exponential(qf_bar, 5e-6)); }

// Smallest M1 + w M2 by dense scan over M1, with M2 the least feasible value.
double brute_force_objective(const std::vector<double>& t, const std::vector<double>& y,
                             const std::vector<double>& level, double rate, double w) {
  double best = std::numeric_limits<double>::infinity();
  for (int j = 0; j <= 200000; ++j) {
    const double m1 = 1.0 + j * 1e-4;
    double m2 = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double slack = y[i] - m1 * y[0] * std::exp(-rate * t[i]);
      if (slack <= 0.0) continue;
      if (level[i] <= 0.0) {
        ok = false;
        break;
      }
      m2 = std::max(m2, slack / level[i]);
    }
    if (ok) best = std::min(best, m1 + w * m2);
  }
  return best;
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("zinc initial energy") {
  const auto sc = zinc(1e3);
  // rho C_p T0 s0 / 2 + rho dH s0
  CHECK(internal_energy_1p(initial_one_phase_state(sc), sc.liquid) == doctest::Approx(74838110.1795).epsilon(1e-12));
}

TEST_CASE("solid sensible energy is non-positive") {
  const auto sc = Scenario::zinc_two_phase(DisturbanceSpec::zero());
  const auto st = initial_two_phase_state(sc);
  const auto& s = *sc.solid;
  CHECK(solid_sensible_energy(st, s) == doctest::Approx(s.density() * s.heat_capacity() * -5.0 * 0.4 / 2.0).epsilon(1e-12));
  CHECK(internal_energy_2p(st, sc.liquid, s) ==
        doctest::Approx(internal_energy_1p(OnePhaseState{0.0, st.s, st.liquid}, sc.liquid) + solid_sensible_energy(st, s)).epsilon(1e-14));
}

TEST_CASE("energy residual of an exact balance") {
  Trajectory traj;
  for (int i = 0; i <= 10; ++i) {
    Snapshot s;
    s.t = 10.0 * i;
    s.q_c = 5.0 + s.t;
    s.q_f = 2.0;
    s.energy = 100.0 + 3.0 * s.t + 0.5 * s.t * s.t;
    traj.snapshots.push_back(s);
  }
  CHECK(energy_balance_residual(traj) == doctest::Approx(0.0).epsilon(1e-15));
  traj.snapshots.back().energy += 1.0;
  CHECK(energy_balance_residual(traj) == doctest::Approx(1.0 / traj.back().energy).epsilon(1e-12));
}

TEST_CASE("decay rates") {
  const auto d = derive_coefficients(PhaseProperties::zinc());
  // alpha / s_r^2 = 3.70e-4 < c, so the diffusive branch controls.
  CHECK(compute_lambda_1p(d.alpha, 0.35, 5e-3) == doctest::Approx(d.alpha / (0.35 * 0.35) / 32.0).epsilon(1e-15));
  CHECK(compute_lambda_1p(d.alpha, 0.35, 5e-3) == doctest::Approx(1.15617213e-5).epsilon(1e-8));
  CHECK(compute_lambda_1p(d.alpha, 0.35, 1e-6) == doctest::Approx(1e-6 / 32.0));
  CHECK(compute_lambda_2p(1.0, 0.2, 1.0, 10.0) == doctest::Approx(0.4 / 32.0));
  CHECK(compute_lambda(zinc(1e3)) == compute_lambda_1p(d.alpha, 0.35, 5e-3));
}

TEST_CASE("envelope of a pure decay") {
  std::vector<double> t, y, level;
  for (int i = 0; i < 50; ++i) {
    t.push_back(i * 10.0);
    y.push_back(3.0 * std::exp(-0.01 * t.back()) * (i == 0 ? 1.0 / 3.0 : 1.0));
    level.push_back(0.0);
  }
  const auto env = fit_decay_envelope(t, y, level, 0.01);
  CHECK(env.m1 == doctest::Approx(3.0).epsilon(1e-11));
  CHECK(env.m2 == 0.0);
  CHECK(env.min_slack >= 0.0);
}

TEST_CASE("envelope is feasible and optimal") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> t, y, level;
    double sup = 0.0;
    for (int i = 0; i < 40; ++i) {
      t.push_back(i * 5.0);
      sup = std::max(sup, 2.0 * u(rng));
      level.push_back(sup);
      y.push_back(i == 0 ? 4.0 : 4.0 * std::exp(-0.05 * t.back()) * (1 + u(rng)) + u(rng) * sup);
    }
    const auto env = fit_decay_envelope(t, y, level, 0.05);
    CHECK(env.min_slack >= 0.0);
    CHECK(env.m1 >= 1.0);
    CHECK(env.m2 >= 0.0);
    const double w = level.back() / y[0];
    CHECK(env.m1 + w * env.m2 <= brute_force_objective(t, y, level, 0.05, w) + 1e-9);
  }
}

TEST_CASE("infeasible envelope") {
  const std::vector<double> t{0.0, 1.0}, y{0.0, 1.0}, level{0.0, 0.0};
  const auto env = fit_decay_envelope(t, y, level, 0.1);
  CHECK(std::isinf(env.m1));
  CHECK_THROWS_AS(fit_iss_envelope(Trajectory{}, 0.1), std::invalid_argument);
}

TEST_CASE("validity monitor flags each condition") {
  TrajectoryInfo info;
  info.setpoint = 0.35;
  info.negative_tolerance = 1e-9;
  Snapshot ok;
  ok.t = 1.0;
  ok.s = 0.2;
  ok.liquid = {5.0, 2.0, 0.0};
  ok.q_c = 10.0;
  ok.boundary_temperature = 5.0;
  CHECK(check_snapshot(ok, info, MonitorVariant::OnePhaseClosedLoop).empty());

  auto cold = ok;
  cold.liquid[1] = -1e-3;
  auto kinds = check_snapshot(cold, info, MonitorVariant::OnePhase);
  REQUIRE(kinds.size() == 1);
  CHECK(kinds[0].kind == ViolationKind::LiquidBelowMelting);
  CHECK(kinds[0].magnitude == doctest::Approx(1e-3));

  auto tiny = ok;
  tiny.liquid[1] = -1e-10;
  CHECK(check_snapshot(tiny, info, MonitorVariant::OnePhase).empty());

  auto overshoot = ok;
  overshoot.s = 0.35;
  CHECK(check_snapshot(overshoot, info, MonitorVariant::OnePhase).empty());
  kinds = check_snapshot(overshoot, info, MonitorVariant::OnePhaseClosedLoop);
  REQUIRE(kinds.size() == 1);
  CHECK(kinds[0].kind == ViolationKind::InterfaceAtOrBeyondSetpoint);

  auto flux = ok;
  flux.q_c = 0.0;
  flux.boundary_temperature = 0.0;
  kinds = check_snapshot(flux, info, MonitorVariant::OnePhaseClosedLoop);
  REQUIRE(kinds.size() == 2);
  CHECK(kinds[0].kind == ViolationKind::NonPositiveFlux);
  CHECK(kinds[1].kind == ViolationKind::BoundaryNotAboveMelting);

  info.two_phase = true;
  info.domain_length = 0.5;
  auto warm = ok;
  warm.solid = {0.0, 1e-3, -1.0};
  warm.s = 0.5;
  kinds = check_snapshot(warm, info, MonitorVariant::TwoPhase);
  REQUIRE(kinds.size() == 2);
  CHECK(kinds[0].kind == ViolationKind::SolidAboveMelting);
  CHECK(kinds[1].kind == ViolationKind::InterfaceAtOrBeyondLength);
}

TEST_CASE("monitor variant and tolerance") {
  TrajectoryInfo info;
  CHECK(monitor_variant(info) == MonitorVariant::OnePhaseClosedLoop);
  info.mode = ControllerMode::DirichletValidation;
  CHECK(monitor_variant(info) == MonitorVariant::OnePhase);
  info.two_phase = true;
  CHECK(monitor_variant(info) == MonitorVariant::TwoPhase);
  CHECK(negative_tolerance(10.0) == 1e-9);
  CHECK(negative_tolerance(0.1) == 1e-10);
}

TEST_CASE("Neumann similarity root") {
  // Roots evaluated independently in 30-digit arithmetic.
  CHECK(neumann_lambda(0.0347950357713846786) == doctest::Approx(0.131144774548099394).epsilon(1e-11));
  CHECK(neumann_lambda(0.5) == doctest::Approx(0.464785920646244447).epsilon(1e-11));
  CHECK(neumann_lambda(2.0) == doctest::Approx(0.800601362805608261).epsilon(1e-11));
  CHECK(neumann_lambda(10.0) == doctest::Approx(1.25697212127920327).epsilon(1e-11));
  CHECK_THROWS_AS(neumann_lambda(0.0), std::invalid_argument);
  CHECK_THROWS_AS(neumann_lambda(-1.0), std::invalid_argument);
}

TEST_CASE("Neumann root vanishes with the Stefan number") {
  double previous = 1.0;
  for (double st : {1e-2, 1e-4, 1e-6, 1e-10}) {
    const double l = neumann_lambda(st);
    CHECK(l < previous);
    CHECK(l == doctest::Approx(std::sqrt(st / 2.0)).epsilon(st));
    previous = l;
  }
  CHECK(neumann_lambda(1e-6) == doctest::Approx(7.07106663335462503e-4).epsilon(1e-11));
}

TEST_CASE("similarity profile") {
  const double l = neumann_lambda(0.5), a = 1e-5, t = 100.0;
  CHECK(neumann_temperature(l, a, 3.0, 0.0, t) == 3.0);
  CHECK(std::abs(neumann_temperature(l, a, 3.0, neumann_interface(l, a, t), t)) < 1e-14);
  CHECK(neumann_interface(l, a, 4.0 * t) == doctest::Approx(2.0 * neumann_interface(l, a, t)));
}

}
