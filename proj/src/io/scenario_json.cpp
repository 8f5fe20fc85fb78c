#include "stefan/io/scenario_json.hpp"

#include <fstream>
#include <sstream>

namespace stefan::io {

using nlohmann::json;

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Reads typed fields while tracking the JSON pointer for error messages.
class Reader {
 public:
  Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) fail(path_, "expected an object");
  }

  [[noreturn]] static void fail(const std::string& where, const std::string& what) {
    throw ScenarioParseError(where.empty() ? "/" : where, what);
  }

  bool has(const char* key) const { return node_.contains(key); }
  std::string at(const char* key) const { return path_ + "/" + key; }

  const json& get(const char* key) const {
    if (!node_.contains(key)) fail(at(key), "missing required field");
    return node_.at(key);
  }

  double number(const char* key) const {
    const auto& v = get(key);
    if (!v.is_number()) fail(at(key), "expected a number");
    return v.get<double>();
  }
  double number_or(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }

  int integer_or(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const auto& v = get(key);
    if (!v.is_number_integer()) fail(at(key), "expected an integer");
    return v.get<int>();
  }

  std::string string(const char* key) const {
    const auto& v = get(key);
    if (!v.is_string()) fail(at(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const char* key) const {
    const auto& v = get(key);
    if (!v.is_array()) fail(at(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number()) fail(at(key) + "/" + std::to_string(i), "expected a number");
      out.push_back(v[i].get<double>());
    }
    return out;
  }

  Reader child(const char* key) const { return Reader(get(key), at(key)); }
  const std::string& path() const { return path_; }

 private:
  const json& node_;
  std::string path_;
};

template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioParseError(where.empty() ? "/" : where, e.what());
  }
}

PhaseProperties read_phase(const Reader& r) {
  return guarded(r.path(), [&] {
    return PhaseProperties(r.number("density"), r.number("latent_heat"), r.number("heat_capacity"),
                           r.number("conductivity"));
  });
}

InitialProfile read_profile(const Reader& r, PhaseSide side) {
  const auto kind = r.string("kind");
  return guarded(r.path(), [&] {
    if (kind == "linear") return InitialProfile::linear(r.number("wall_value"));
    if (kind == "table") return InitialProfile::tabulated(r.numbers("x"), r.numbers("values"), side);
    Reader::fail(r.at("kind"), "unknown profile kind '" + kind + "'");
  });
}

DisturbanceSpec read_disturbance(const Reader& r) {
  const auto kind = r.string("kind");
  return guarded(r.path(), [&] {
    if (kind == "zero") return DisturbanceSpec::zero();
    if (kind == "constant") return DisturbanceSpec::constant(r.number("qf_bar"));
    if (kind == "exponential") return DisturbanceSpec::exponential(r.number("qf_bar"), r.number("K"));
    if (kind == "table") return DisturbanceSpec::table(r.numbers("t"), r.numbers("values"));
    Reader::fail(r.at("kind"), "unknown disturbance kind '" + kind + "'");
  });
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError(line_column(text, e.byte), "malformed JSON");
  }
  const Reader r(doc, "");
  if (r.has("schema_version") && r.number("schema_version") != 1.0) {
    Reader::fail(r.at("schema_version"), "unsupported schema version");
  }

  Scenario sc;
  sc.liquid = read_phase(r.child("liquid"));
  if (r.has("solid")) {
    sc.solid = read_phase(r.child("solid"));
    sc.domain_length = r.number("domain_length");
  }
  sc.initial_interface = r.number("initial_interface");
  sc.liquid_profile = read_profile(r.child("liquid_profile"), PhaseSide::Liquid);
  if (sc.two_phase()) sc.solid_profile = read_profile(r.child("solid_profile"), PhaseSide::Solid);
  sc.setpoint = r.number("setpoint");
  sc.gain = r.number("gain");
  sc.disturbance = r.has("disturbance") ? read_disturbance(r.child("disturbance")) : DisturbanceSpec::zero();
  sc.grid = r.integer_or("grid", sc.grid);
  sc.solid_grid = r.integer_or("solid_grid", sc.solid_grid);
  sc.time_step = r.number_or("time_step", sc.time_step);
  sc.cfl_safety = r.number_or("cfl_safety", sc.cfl_safety);
  sc.final_time = r.number_or("final_time", sc.final_time);
  sc.output_interval = r.number_or("output_interval", sc.output_interval);

  if (r.has("controller")) {
    const auto c = r.child("controller");
    const auto mode = c.string("mode");
    if (mode == "closed_loop") {
      sc.mode = ControllerMode::ClosedLoop;
    } else if (mode == "open_loop") {
      sc.mode = ControllerMode::OpenLoop;
      if (c.has("q0")) sc.open_loop_q0 = c.number("q0");
    } else if (mode == "dirichlet") {
      sc.mode = ControllerMode::DirichletValidation;
      sc.dirichlet_delta_t = c.number("delta_T");
    } else {
      Reader::fail(c.at("mode"), "unknown controller mode '" + mode + "'");
    }
  }

  guarded("/", [&] { sc.validate(); });
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioParseError(path.string(), "cannot open scenario file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

json to_json(const PhaseProperties& p) {
  return {{"density", p.density()},
          {"latent_heat", p.latent_heat()},
          {"heat_capacity", p.heat_capacity()},
          {"conductivity", p.conductivity()}};
}

json to_json(const DisturbanceSpec& d) {
  const auto& k = d.kind();
  if (const auto* c = std::get_if<DisturbanceSpec::Constant>(&k)) {
    return {{"kind", "constant"}, {"qf_bar", c->qf_bar}};
  }
  if (const auto* e = std::get_if<DisturbanceSpec::ExponentialDecay>(&k)) {
    return {{"kind", "exponential"}, {"qf_bar", e->qf_bar}, {"K", e->decay_rate}};
  }
  if (const auto* t = std::get_if<DisturbanceSpec::Table>(&k)) {
    return {{"kind", "table"}, {"t", t->times}, {"values", t->values}};
  }
  return {{"kind", "zero"}};
}

namespace {

json profile_json(const InitialProfile& p) {
  const auto& k = p.kind();
  if (const auto* lin = std::get_if<InitialProfile::Linear>(&k)) {
    return {{"kind", "linear"}, {"wall_value", lin->wall_value}};
  }
  if (const auto* tab = std::get_if<InitialProfile::Tabulated>(&k)) {
    return {{"kind", "table"}, {"x", tab->x}, {"values", tab->values}};
  }
  return {{"kind", "function"}};
}

}  // namespace

json to_json(const Scenario& sc) {
  json j;
  j["schema_version"] = 1;
  j["liquid"] = to_json(sc.liquid);
  if (sc.two_phase()) {
    j["solid"] = to_json(*sc.solid);
    j["domain_length"] = sc.domain_length;
    j["solid_profile"] = profile_json(sc.solid_profile);
    j["solid_grid"] = sc.solid_grid;
  }
  j["initial_interface"] = sc.initial_interface;
  j["liquid_profile"] = profile_json(sc.liquid_profile);
  j["setpoint"] = sc.setpoint;
  j["gain"] = sc.gain;
  j["disturbance"] = to_json(sc.disturbance);
  j["grid"] = sc.grid;
  j["time_step"] = sc.time_step;
  j["cfl_safety"] = sc.cfl_safety;
  j["final_time"] = sc.final_time;
  j["output_interval"] = sc.output_step();
  json ctrl{{"mode", to_string(sc.mode)}};
  if (sc.mode == ControllerMode::OpenLoop && sc.open_loop_q0) ctrl["q0"] = *sc.open_loop_q0;
  if (sc.mode == ControllerMode::DirichletValidation) ctrl["delta_T"] = sc.dirichlet_delta_t;
  j["controller"] = ctrl;
  return j;
}

}  // namespace stefan::io
