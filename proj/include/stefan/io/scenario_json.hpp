#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "stefan/core/scenario.hpp"

namespace stefan::io {

/// Malformed or structurally invalid scenario document. `location` is
/// "line L, column C" for syntax errors and a JSON pointer for schema errors.
class ScenarioParseError : public std::runtime_error {
 public:
  ScenarioParseError(const std::string& location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(location) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json to_json(const PhaseProperties& p);
nlohmann::json to_json(const DisturbanceSpec& d);
/// Echo of a scenario in the input schema. Callable profiles, which have no
/// file representation, appear as {"kind": "function"}.
nlohmann::json to_json(const Scenario& scenario);

}  // namespace stefan::io
