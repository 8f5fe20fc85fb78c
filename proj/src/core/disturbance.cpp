#include "stefan/core/disturbance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stefan {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("disturbance ") + what +
                                " must be finite and non-negative");
  }
}

double table_value(const DisturbanceSpec::Table& tab, double t) {
  const auto& ts = tab.times;
  const auto& vs = tab.values;
  if (t <= ts.front()) return vs.front();
  if (t >= ts.back()) return vs.back();
  const auto it = std::upper_bound(ts.begin(), ts.end(), t);
  const auto i = static_cast<std::size_t>(it - ts.begin());
  const double w = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
  return (1.0 - w) * vs[i - 1] + w * vs[i];
}

double table_integral(const DisturbanceSpec::Table& tab, double t) {
  const auto& ts = tab.times;
  const auto& vs = tab.values;
  double acc = vs.front() * std::clamp(t, 0.0, std::max(ts.front(), 0.0));
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double a = std::max(ts[i - 1], 0.0);
    const double b = std::min(ts[i], t);
    if (b <= a) continue;
    acc += 0.5 * (table_value(tab, a) + table_value(tab, b)) * (b - a);
  }
  if (t > ts.back()) acc += vs.back() * (t - std::max(ts.back(), 0.0));
  return acc;
}

}  // namespace

DisturbanceSpec DisturbanceSpec::constant(double qf_bar) {
  require_nonnegative(qf_bar, "magnitude");
  return DisturbanceSpec{Constant{qf_bar}};
}

DisturbanceSpec DisturbanceSpec::exponential(double qf_bar, double decay_rate) {
  require_nonnegative(qf_bar, "magnitude");
  require_nonnegative(decay_rate, "decay rate");
  return DisturbanceSpec{ExponentialDecay{qf_bar, decay_rate}};
}

DisturbanceSpec DisturbanceSpec::table(std::vector<double> times, std::vector<double> values) {
  if (times.empty() || times.size() != values.size()) {
    throw std::invalid_argument("disturbance table needs matching, non-empty time and value arrays");
  }
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw std::invalid_argument("disturbance table time not finite");
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("disturbance table times must be strictly increasing");
    }
    require_nonnegative(values[i], "table value");
  }
  return DisturbanceSpec{Table{std::move(times), std::move(values)}};
}

double DisturbanceSpec::operator()(double t) const {
  return std::visit(Overloaded{[](const Zero&) { return 0.0; },
                               [](const Constant& c) { return c.qf_bar; },
                               [t](const ExponentialDecay& e) {
                                 return e.qf_bar * std::exp(-e.decay_rate * t);
                               },
                               [t](const Table& tab) { return table_value(tab, t); }},
                    kind_);
}

double DisturbanceSpec::supremum() const {
  return std::visit(Overloaded{[](const Zero&) { return 0.0; },
                               [](const Constant& c) { return c.qf_bar; },
                               [](const ExponentialDecay& e) { return e.qf_bar; },
                               [](const Table& tab) {
                                 return *std::max_element(tab.values.begin(), tab.values.end());
                               }},
                    kind_);
}

bool DisturbanceSpec::has_finite_total_energy() const {
  return std::visit(Overloaded{[](const Zero&) { return true; },
                               [](const Constant& c) { return c.qf_bar == 0.0; },
                               [](const ExponentialDecay& e) {
                                 return e.qf_bar == 0.0 || e.decay_rate > 0.0;
                               },
                               [](const Table& tab) { return tab.values.back() == 0.0; }},
                    kind_);
}

double DisturbanceSpec::integral(double t) const {
  if (t <= 0.0) return 0.0;
  return std::visit(Overloaded{[](const Zero&) { return 0.0; },
                               [t](const Constant& c) { return c.qf_bar * t; },
                               [t](const ExponentialDecay& e) {
                                 if (e.decay_rate == 0.0) return e.qf_bar * t;
                                 return e.qf_bar * -std::expm1(-e.decay_rate * t) / e.decay_rate;
                               },
                               [t](const Table& tab) { return table_integral(tab, t); }},
                    kind_);
}

std::string DisturbanceSpec::kind_name() const {
  return std::visit(Overloaded{[](const Zero&) { return std::string("zero"); },
                               [](const Constant&) { return std::string("constant"); },
                               [](const ExponentialDecay&) { return std::string("exponential"); },
                               [](const Table&) { return std::string("table"); }},
                    kind_);
}

}  // namespace stefan
