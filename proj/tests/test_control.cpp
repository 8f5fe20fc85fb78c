#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>
#include <stdexcept>

#include "stefan/control/control.hpp"
#include "stefan/solver/one_phase.hpp"
#include "stefan/solver/two_phase.hpp"

using namespace stefan;

namespace {

Scenario zinc(double qf_bar) { return Scenario::zinc_one_phase(DisturbanceSpec::exponential(qf_bar, 5e-6)); }

// Composite Simpson on [a, b] with n (even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

// Reference convolution, split at the kinks of piecewise-linear signals.
double convolution(double t, double q0, double c, const DisturbanceSpec& d, std::vector<double> kinks = {}) {
  const auto f = [&](double tau) { return std::exp(-c * (t - tau)) * d(tau); };
  double acc = 0.0, a = 0.0;
  kinks.push_back(t);
  for (double k : kinks) {
    const double b = std::min(k, t);
    if (b > a) acc += simpson(f, a, b, 20000);
    a = std::max(a, b);
  }
  return q0 * std::exp(-c * t) + c * acc;
}

}  // namespace

TEST_SUITE("control") {

TEST_CASE("closed-loop flux of the zinc initial state") {
  const auto sc = zinc(1e3);
  const auto cfg = controller_config(sc);
  // -c (rho C_p T0 s0 / 2 + rho dH (s0 - s_r)), exact for the linear ramp.
  const double expected = -5e-3 * (6570.0 * 389.5687 * 10.0 * 0.1 / 2.0 + 6570.0 * 111961.0 * (0.1 - 0.35));
  CHECK(closed_loop_flux_1p(initial_one_phase_state(sc), sc.liquid, cfg) == doctest::Approx(expected).epsilon(1e-13));
  CHECK(expected == doctest::Approx(913081.0466025).epsilon(1e-12));
}

TEST_CASE("two-phase flux includes the solid sensible heat") {
  const auto sc = Scenario::zinc_two_phase(DisturbanceSpec::zero());
  const auto cfg = controller_config(sc);
  const auto st = initial_two_phase_state(sc);
  const auto& s = *sc.solid;
  const double liquid = 6570.0 * 389.5687 * 10.0 * 0.1 / 2.0;
  const double solid = s.density() * s.heat_capacity() * (-5.0) * 0.4 / 2.0;
  const double expected = -5e-3 * (liquid + solid + 6570.0 * 111961.0 * (0.1 - 0.35));
  CHECK(closed_loop_flux_2p(st, sc.liquid, s, cfg) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("open-loop flux, exponential disturbance") {
  const auto d = DisturbanceSpec::exponential(1e4, 5e-6);
  for (double t : {0.0, 1.0, 100.0, 5e3, 1e4}) {
    CHECK(open_loop_flux(t, 9e5, 5e-3, d) == doctest::Approx(convolution(t, 9e5, 5e-3, d)).epsilon(1e-10));
  }
  // c == K collapses to c q t e^{-ct}; nearby rates must agree with it.
  const double t = 300.0;
  const auto equal = DisturbanceSpec::exponential(2.0, 1e-3);
  CHECK(open_loop_flux(t, 0.0, 1e-3, equal) == doctest::Approx(1e-3 * 2.0 * t * std::exp(-1e-3 * t)).epsilon(1e-14));
  const auto near = DisturbanceSpec::exponential(2.0, 1e-3 * (1 + 1e-9));
  CHECK(open_loop_flux(t, 0.0, 1e-3, near) == doctest::Approx(1e-3 * 2.0 * t * std::exp(-1e-3 * t)).epsilon(1e-8));
}

TEST_CASE("open-loop flux, constant and zero disturbance") {
  CHECK(open_loop_flux(50.0, 7.0, 0.02, DisturbanceSpec::zero()) == doctest::Approx(7.0 * std::exp(-1.0)));
  CHECK(open_loop_flux(50.0, 0.0, 0.02, DisturbanceSpec::constant(3.0)) == doctest::Approx(3.0 * (1 - std::exp(-1.0))).epsilon(1e-14));
}

TEST_CASE("open-loop flux, tabulated disturbance") {
  const auto d = DisturbanceSpec::table({0.0, 100.0, 250.0, 400.0}, {0.0, 5e3, 1e3, 2e3});
  for (double t : {50.0, 100.0, 333.0, 600.0}) {
    CHECK(open_loop_flux(t, 1e5, 4e-3, d) == doctest::Approx(convolution(t, 1e5, 4e-3, d, {100.0, 250.0, 400.0})).epsilon(1e-10));
  }
}

TEST_CASE("controller configuration") {
  auto sc = zinc(1e3);
  CHECK(std::holds_alternative<ControllerConfig::ClosedLoop1P>(controller_config(sc).mode));
  sc.mode = ControllerMode::OpenLoop;
  const auto ol = controller_config(sc);
  REQUIRE(std::holds_alternative<ControllerConfig::OpenLoop>(ol.mode));
  CHECK(std::get<ControllerConfig::OpenLoop>(ol.mode).q0 == doctest::Approx(913081.0466025).epsilon(1e-12));

  ControllerConfig bad;
  bad.gain = -1.0;
  bad.setpoint = 0.35;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("open-loop and closed-loop runs coincide") {
  auto sc = zinc(5e3);
  sc.final_time = 3000.0;
  const auto closed = run(sc);
  sc.mode = ControllerMode::OpenLoop;
  const auto open = run(sc);
  CHECK(open.back().s == doctest::Approx(closed.back().s).epsilon(1e-5));
  CHECK(flux_equivalence_residual(closed, controller_config(zinc(5e3))) < 1e-3);
}

TEST_CASE("flux equivalence rejects empty trajectories") {
  CHECK_THROWS_AS(flux_equivalence_residual(Trajectory{}, controller_config(zinc(1e3))), std::invalid_argument);
}

}
