#include "stefan/io/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <string>
#include <thread>

#include "stefan/io/output.hpp"
#include "stefan/io/scenario_json.hpp"
#include "stefan/solver/errors.hpp"
#include "stefan/solver/one_phase.hpp"
#include "stefan/solver/oracle.hpp"
#include "stefan/solver/two_phase.hpp"

namespace stefan::io {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

DisturbanceSpec zinc_disturbance() { return DisturbanceSpec::exponential(default_qf_bar, default_decay_rate); }

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

// Runs f(0..count-1) on at most worker_limit() threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& f) {
  const std::size_t workers = std::min<std::size_t>(worker_limit(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) f(i);
    });
  }
}

struct RunOutcome {
  int code = exit_ok;
  std::string message;
  std::optional<RunReport> report;
};

// Simulates, writes trajectory.csv and report.json into `dir`, and maps the
// outcome to an exit code. Never throws for a validated scenario.
RunOutcome execute(const Scenario& sc, const fs::path& dir) {
  RunOutcome out;
  fs::create_directories(dir);
  Trajectory traj;
  try {
    traj = sc.two_phase() ? run2(sc) : run(sc);
  } catch (const SolverError& e) {
    out.code = exit_solver;
    out.message = "solver failure at t = " + format_double(e.time()) + " s: " + e.what();
    return out;
  } catch (const std::exception& e) {
    out.code = exit_solver;
    out.message = std::string("solver failure: ") + e.what();
    return out;
  }

  RunReport report = make_report(sc, traj);
  {
    std::ofstream csv(dir / "trajectory.csv");
    write_trajectory_csv(traj, csv);
  }
  write_json(dir / "report.json", to_json(report));

  if (!report.assumptions.all_passed()) {
    out.code = exit_invalid;
    out.message = "assumption check failed:";
    for (const auto& c : report.assumptions.checks) {
      if (!c.passed) out.message += " " + c.id;
    }
  } else if (report.termination) {
    out.code = exit_solver;
    out.message = "run terminated at t = " + format_double(report.termination->time) + " s: " +
                  report.termination->reason;
  } else if (!report.violations.empty()) {
    out.code = exit_invalid;
    out.message = std::to_string(report.violations.size()) + " validity violation(s), first: " +
                  to_string(report.violations.front().kind) + " at t = " +
                  format_double(report.violations.front().time) + " s";
  }
  out.report = std::move(report);
  return out;
}

int worst(int a, int b) { return std::max(a, b); }

template <class F>
int guarded_command(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const ScenarioParseError& e) {
    log << "error: scenario " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

}  // namespace

void apply_overrides(Scenario& sc, const Overrides& o) {
  if (o.final_time) sc.final_time = *o.final_time;
  if (o.grid) {
    sc.solid_grid = std::max(8, static_cast<int>(std::lround(double(sc.solid_grid) * *o.grid / sc.grid)));
    sc.grid = *o.grid;
  }
  if (o.gain) sc.gain = *o.gain;
  if (o.setpoint) sc.setpoint = *o.setpoint;
  if (o.output_interval) sc.output_interval = *o.output_interval;

  if (o.qf_bar || o.qf_decay) {
    const auto& kind = sc.disturbance.kind();
    std::optional<double> rate = o.qf_decay;
    if (!rate) {
      if (const auto* e = std::get_if<DisturbanceSpec::ExponentialDecay>(&kind)) rate = e->decay_rate;
    }
    const double bar = o.qf_bar ? *o.qf_bar : sc.disturbance.supremum();
    sc.disturbance = rate ? DisturbanceSpec::exponential(bar, *rate) : DisturbanceSpec::constant(bar);
  }
  sc.validate();
}

Scenario resolve_scenario(const CommandOptions& opts) {
  Scenario sc;
  if (opts.scenario_file) {
    sc = load_scenario(*opts.scenario_file);
  } else {
    sc = opts.overrides.two_phase ? Scenario::zinc_two_phase(zinc_disturbance())
                                  : Scenario::zinc_one_phase(zinc_disturbance());
  }
  apply_overrides(sc, opts.overrides);
  return sc;
}

unsigned worker_limit() {
  unsigned limit = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("STEFAN_ISS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) limit = static_cast<unsigned>(v);
  }
  return limit;
}

std::optional<double> observed_order(const std::vector<int>& grids, const std::vector<double>& values) {
  if (grids.size() < 3 || values.size() < 3) return std::nullopt;
  const double d12 = values[0] - values[1];
  const double d23 = values[1] - values[2];
  if (d12 == 0.0 || d23 == 0.0 || (d12 > 0.0) != (d23 > 0.0)) return std::nullopt;
  const double ratio = d12 / d23;
  const double h1 = 1.0 / grids[0], h2 = 1.0 / grids[1], h3 = 1.0 / grids[2];
  const auto g = [&](double p) {
    return (std::pow(h1, p) - std::pow(h2, p)) / (std::pow(h2, p) - std::pow(h3, p));
  };
  double lo = 1e-6, hi = 20.0;
  if (ratio <= g(lo)) return 0.0;
  if (ratio >= g(hi)) return hi;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < ratio ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

int cmd_run(const CommandOptions& opts, std::ostream& log) {
  return guarded_command(log, [&] {
    const Scenario sc = resolve_scenario(opts);
    const auto outcome = execute(sc, opts.out_dir);
    if (!outcome.message.empty()) log << outcome.message << '\n';
    if (outcome.report) {
      log << "s(t_f) = " << format_double(outcome.report->final_interface)
          << " m, offset = " << format_double(outcome.report->offset) << " m\n";
    }
    return outcome.code;
  });
}

int cmd_sweep(const CommandOptions& opts, std::ostream& log) {
  return guarded_command(log, [&] {
    if (opts.qf_bars.empty()) throw std::invalid_argument("sweep needs at least one --qf-bar value");
    if (opts.qf_bars.size() == 1) {
      CommandOptions single = opts;
      single.overrides.qf_bar = opts.qf_bars.front();
      return cmd_run(single, log);
    }

    std::vector<Scenario> scenarios;
    for (double q : opts.qf_bars) {
      CommandOptions member = opts;
      member.overrides.qf_bar = q;
      scenarios.push_back(resolve_scenario(member));
    }
    std::vector<fs::path> dirs;
    for (std::size_t i = 0; i < scenarios.size(); ++i) {
      char name[64];
      std::snprintf(name, sizeof name, "run_%02zu", i);
      dirs.push_back(opts.out_dir / name);
    }
    std::vector<RunOutcome> outcomes(scenarios.size());
    parallel_for(scenarios.size(), [&](std::size_t i) { outcomes[i] = execute(scenarios[i], dirs[i]); });

    int code = exit_ok;
    json runs = json::array();
    std::vector<std::pair<double, double>> offsets;  // (qf_bar, offset)
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& o = outcomes[i];
      code = worst(code, o.code);
      json entry{{"qf_bar", opts.qf_bars[i]}, {"directory", dirs[i].filename().string()}, {"exit_code", o.code}};
      if (!o.message.empty()) {
        entry["message"] = o.message;
        log << "qf_bar = " << format_double(opts.qf_bars[i]) << ": " << o.message << '\n';
      }
      if (o.report) {
        entry["final_interface"] = o.report->final_interface;
        entry["offset"] = o.report->offset;
        entry["valid"] = o.report->valid();
        offsets.emplace_back(opts.qf_bars[i], o.report->offset);
      }
      runs.push_back(entry);
    }

    // Offsets must grow strictly with q_bar and agree for repeated q_bar.
    bool monotone = offsets.size() == opts.qf_bars.size();
    std::sort(offsets.begin(), offsets.end());
    for (std::size_t i = 1; monotone && i < offsets.size(); ++i) {
      const auto& [qa, oa] = offsets[i - 1];
      const auto& [qb, ob] = offsets[i];
      monotone = qa == qb ? oa == ob : oa < ob;
    }
    write_json(opts.out_dir / "sweep.json",
               {{"schema_version", report_schema_version}, {"runs", runs}, {"offsets_monotone", monotone}});
    log << "terminal offsets " << (monotone ? "increase" : "do not increase") << " with qf_bar\n";
    if (!monotone) code = worst(code, exit_invalid);
    return code;
  });
}

int cmd_converge(const CommandOptions& opts, std::ostream& log) {
  return guarded_command(log, [&] {
    if (opts.grids.size() < 3) throw std::invalid_argument("converge needs at least three --grids values");
    std::vector<int> grids = opts.grids;
    std::sort(grids.begin(), grids.end());
    if (std::adjacent_find(grids.begin(), grids.end()) != grids.end()) {
      throw std::invalid_argument("converge grids must be distinct");
    }

    std::vector<Scenario> scenarios;
    for (int n : grids) {
      CommandOptions member = opts;
      member.overrides.grid = n;
      scenarios.push_back(resolve_scenario(member));
    }
    std::vector<RunOutcome> outcomes(grids.size());
    parallel_for(grids.size(), [&](std::size_t i) {
      outcomes[i] = execute(scenarios[i], opts.out_dir / ("grid_" + std::to_string(grids[i])));
    });

    std::vector<double> values;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].code == exit_solver || !outcomes[i].report) {
        log << "grid " << grids[i] << ": " << outcomes[i].message << '\n';
        return int(exit_solver);
      }
      values.push_back(outcomes[i].report->final_interface);
    }

    json orders = json::array();
    for (std::size_t i = 0; i + 2 < grids.size(); ++i) {
      const auto p = observed_order({grids[i], grids[i + 1], grids[i + 2]}, {values[i], values[i + 1], values[i + 2]});
      orders.push_back(p ? json(*p) : json(nullptr));
    }
    const bool identical = std::all_of(values.begin(), values.end(), [&](double v) { return v == values.front(); });
    const json& finest = orders.back();
    write_json(opts.out_dir / "converge.json", {{"schema_version", report_schema_version},
                                                 {"grids", grids},
                                                 {"final_interface", values},
                                                 {"observed_orders", orders},
                                                 {"observed_order", finest},
                                                 {"identical", identical}});
    for (std::size_t i = 0; i < grids.size(); ++i) {
      log << "N = " << grids[i] << ": s(t_f) = " << format_double(values[i]) << '\n';
    }
    if (finest.is_number()) log << "observed order " << format_double(finest.get<double>()) << '\n';
    else log << (identical ? "identical results on all grids\n" : "observed order undefined\n");
    return int(exit_ok);
  });
}

int cmd_oracle(const CommandOptions& opts, std::ostream& log) {
  return guarded_command(log, [&] {
    const PhaseProperties liquid = opts.scenario_file ? load_scenario(*opts.scenario_file).liquid : PhaseProperties::zinc();
    const double st = opts.stefan_number.value_or(liquid.heat_capacity() * 10.0 / liquid.latent_heat());
    if (!(st > 0.0)) throw std::invalid_argument("--stefan-number must be positive");
    std::vector<int> grids = opts.grids.empty() ? std::vector<int>{50, 100, 200} : opts.grids;
    std::sort(grids.begin(), grids.end());
    for (int n : grids) {
      if (n < 8) throw std::invalid_argument("grid sizes must be at least 8");
    }
    const auto setup = similarity_setup(liquid, st, 0.1, opts.overrides.final_time.value_or(1.0e4));

    std::vector<SimilarityComparison> results(grids.size());
    std::vector<std::string> failures(grids.size());
    parallel_for(grids.size(), [&](std::size_t i) {
      try {
        results[i] = compare_with_similarity(setup, grids[i]);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    });

    int code = exit_ok;
    json rows = json::array();
    for (std::size_t i = 0; i < grids.size(); ++i) {
      if (!failures[i].empty() || !std::isfinite(results[i].max_relative_error)) {
        log << "grid " << grids[i] << ": solver failure " << failures[i] << '\n';
        code = exit_solver;
        continue;
      }
      const auto& r = results[i];
      rows.push_back({{"grid", r.grid},
                      {"max_relative_error", r.max_relative_error},
                      {"final_interface", r.final_interface},
                      {"exact_final_interface", r.exact_final_interface},
                      {"steps", r.steps}});
      log << "N = " << r.grid << ": max relative error " << format_double(r.max_relative_error) << '\n';
    }
    bool decreasing = code == exit_ok;
    for (std::size_t i = 1; decreasing && i < results.size(); ++i) {
      decreasing = results[i].max_relative_error < results[i - 1].max_relative_error;
    }
    fs::create_directories(opts.out_dir);
    write_json(opts.out_dir / "oracle.json", {{"schema_version", report_schema_version},
                                               {"stefan_number", st},
                                               {"lambda", setup.lambda},
                                               {"delta_T", setup.delta_t},
                                               {"t0", setup.t0},
                                               {"horizon", setup.horizon},
                                               {"grids", rows},
                                               {"error_decreasing", decreasing}});
    log << "lambda = " << format_double(setup.lambda) << '\n';
    return code;
  });
}

int cmd_check(const CommandOptions& opts, std::ostream& log) {
  return guarded_command(log, [&] {
    const Scenario sc = resolve_scenario(opts);
    const auto report = check_assumptions(sc);
    for (const auto& c : report.checks) {
      log << (c.passed ? "pass " : "FAIL ") << c.id << ": " << c.description << " (" << format_double(c.lhs)
          << " vs " << format_double(c.rhs) << ")\n";
    }
    for (const auto& w : sc.warnings()) log << "warning: " << w << '\n';
    return report.all_passed() ? int(exit_ok) : int(exit_invalid);
  });
}

}  // namespace stefan::io
