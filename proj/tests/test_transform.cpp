#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "stefan/analysis/transform.hpp"
#include "stefan/core/phase.hpp"

using namespace stefan;

namespace {

struct Zinc {
  DerivedCoefficients d = derive_coefficients(PhaseProperties::zinc());
  double gain = 5e-3;
  double setpoint = 0.35;
  KernelParams kernel() const { return KernelParams(compute_epsilon(d.alpha, d.beta, gain, setpoint), gain, d.beta, d.alpha); }
};

// Non-negative profile vanishing at x = s: positive combination of
// (1 - x/s)^p and sin^2 bumps.
std::vector<double> random_profile(std::mt19937_64& rng, double s, std::size_t n) {
  std::uniform_real_distribution<double> amp(0.0, 20.0), pow(1.0, 3.0);
  std::uniform_int_distribution<int> mode(1, 6);
  const double a = amp(rng), b = amp(rng), p = pow(rng);
  const int m = mode(rng);
  std::vector<double> u(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = s * double(i) / double(n);
    const double r = 1.0 - x / s;
    u[i] = a * std::pow(r, p) + b * std::pow(std::sin(m * std::numbers::pi * x / s), 2) * r;
  }
  u[n] = 0.0;
  return u;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

TEST_SUITE("transform") {

TEST_CASE("zinc epsilon choice") {
  const Zinc z;
  const auto e = choose_epsilon(z.d.alpha, z.d.beta, z.gain, z.setpoint);
  CHECK(e.root == doctest::Approx(36.1086).epsilon(1e-5));
  CHECK(e.cap == doctest::Approx(0.1182615).epsilon(1e-6));
  CHECK(e.real_limit == doctest::Approx(6037.31).epsilon(1e-6));
  CHECK(e.epsilon == doctest::Approx(0.0591307559).epsilon(1e-9));
  CHECK(lyapunov_margin(e.epsilon, z.d.alpha, z.d.beta, z.gain, z.setpoint) > 0.0);
  CHECK(lyapunov_margin(e.root, z.d.alpha, z.d.beta, z.gain, z.setpoint) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("kernel rejects complex frequency") {
  const Zinc z;
  const double lim = KernelParams::epsilon_limit(z.gain, z.d.beta, z.d.alpha);
  CHECK_THROWS_AS(KernelParams(lim, z.gain, z.d.beta, z.d.alpha), std::domain_error);
  CHECK_THROWS_AS(KernelParams(0.0, z.gain, z.d.beta, z.d.alpha), std::domain_error);
  CHECK_NOTHROW(KernelParams(0.999 * lim, z.gain, z.d.beta, z.d.alpha));
}

TEST_CASE("psi solves the resolvent ODE") {
  // Inverse kernel of phi: alpha psi'' - beta eps psi' + c psi = 0 with
  // psi(0) = eps and psi'(0) = (beta/alpha) eps^2 - c/beta.
  const Zinc z;
  const auto kp = z.kernel();
  CHECK(kp.psi(0.0) == doctest::Approx(kp.epsilon()));
  const double h = 1e-4;
  const double dpsi0 = (kp.psi(h) - kp.psi(-h)) / (2 * h);
  CHECK(dpsi0 == doctest::Approx(z.d.beta / z.d.alpha * kp.epsilon() * kp.epsilon() - z.gain / z.d.beta).epsilon(1e-6));
  for (double x : {-0.3, -0.1, -0.01}) {
    const double d1 = (kp.psi(x + h) - kp.psi(x - h)) / (2 * h);
    const double d2 = (kp.psi(x + h) - 2 * kp.psi(x) + kp.psi(x - h)) / (h * h);
    const double scale = z.gain * std::abs(kp.psi(x)) + z.d.alpha * std::abs(d2);
    CHECK(std::abs(z.d.alpha * d2 - z.d.beta * kp.epsilon() * d1 + z.gain * kp.psi(x)) < 1e-5 * scale);
  }
}

TEST_CASE("interface identities") {
  const Zinc z;
  const auto kp = z.kernel();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const double s = 0.05 + 0.3 * (trial / 20.0);
    const double X = s - z.setpoint;
    const auto u = random_profile(rng, s, 64);
    const auto w = direct_transform(u, s, X, kp);
    CHECK(std::abs(w.back() - kp.epsilon() * X) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(kp.epsilon() * X));
    const auto back = inverse_transform(w, s, X, kp);
    CHECK(std::abs(back.back()) <= 4 * std::numeric_limits<double>::epsilon() * std::abs(kp.epsilon() * X));
  }
}

TEST_CASE("round trip converges at second order") {
  const Zinc z;
  const auto kp = z.kernel();
  double previous = 0.0;
  for (std::size_t n : {50u, 100u, 200u, 400u}) {
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto u = random_profile(rng, 0.2, n);
      const auto back = inverse_transform(direct_transform(u, 0.2, -0.15, kp), 0.2, -0.15, kp);
      double err = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i) err = std::max(err, std::abs(back[i] - u[i]));
      worst = std::max(worst, err / std::max(1.0, max_abs(u)));
    }
    if (previous > 0.0) CHECK(previous / worst > 3.5);
    previous = worst;
  }
}

TEST_CASE("transforms are affine in (u, X)") {
  const Zinc z;
  const auto kp = z.kernel();
  std::mt19937_64 rng(3);
  const auto u1 = random_profile(rng, 0.2, 40);
  const auto u2 = random_profile(rng, 0.2, 40);
  std::vector<double> sum(u1.size());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = 2.0 * u1[i] + u2[i];
  const auto w1 = direct_transform(u1, 0.2, -0.1, kp);
  const auto w2 = direct_transform(u2, 0.2, 0.05, kp);
  const auto ws = direct_transform(sum, 0.2, 2.0 * -0.1 + 0.05, kp);
  for (std::size_t i = 0; i < ws.size(); ++i) CHECK(ws[i] == doctest::Approx(2.0 * w1[i] + w2[i]).epsilon(1e-12));
}

TEST_CASE("lyapunov functional") {
  const Zinc z;
  const auto kp = z.kernel();
  const std::vector<double> zero(33, 0.0);
  CHECK(lyapunov_V(zero, 0.2, 0.0, kp) == 0.0);
  // u = 0 leaves only the boundary term w(x) = -phi(x - s) X.
  const double s = 0.2, X = -0.1;
  double expected = 0.0;
  const std::size_t n = 32;
  std::vector<double> w2(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double w = -kp.phi(s * double(i) / n - s) * X;
    w2[i] = w * w;
  }
  for (std::size_t i = 0; i <= n; ++i) expected += (i == 0 || i == n ? 0.5 : 1.0) * w2[i];
  expected *= s / n / (2 * z.d.alpha);
  expected += kp.epsilon() * X * X / (2 * z.d.beta);
  CHECK(lyapunov_V(zero, s, X, kp) == doctest::Approx(expected).epsilon(1e-12));
  std::mt19937_64 rng(5);
  CHECK(lyapunov_V(random_profile(rng, s, n), s, X, kp) > 0.0);
}

}
