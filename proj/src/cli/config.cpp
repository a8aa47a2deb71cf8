#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mvspace/cli.hpp"
#include "mvspace/errors.hpp"

namespace mvspace::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw ArgumentError("config key '" + key + "': '" + value + "' is not a number");
  return v;
}

}  // namespace

UnitSystem unit_system(Units units) {
  if (units == Units::si) return {299792458.0, 6.62607015e-34, 1.054571817e-34, 9.1093837015e-31};
  return {1.0, 1.0, 1.0, 1.0};
}

Units parse_units(const std::string& s) {
  if (s == "natural") return Units::natural;
  if (s == "si") return Units::si;
  throw ArgumentError("units must be 'natural' or 'si', got '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ArgumentError("format must be 'json' or 'csv', got '" + s + "'");
}

void apply_config_text(RunConfig& config, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ArgumentError("config line " + std::to_string(number) + ": expected 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "units") {
      config.units = parse_units(value);
    } else if (key == "format") {
      config.format = parse_format(value);
    } else if (key == "seed") {
      const double v = parse_number(key, value);
      if (v < 0 || v != static_cast<double>(static_cast<std::uint64_t>(v)))
        throw ArgumentError("config key 'seed': must be a non-negative integer");
      config.seed = static_cast<std::uint64_t>(v);
    } else if (key.rfind("tolerance.", 0) == 0 && key.size() > 10) {
      const double v = parse_number(key, value);
      if (!(v > 0.0)) throw ArgumentError("config key '" + key + "': tolerance must be positive");
      config.tolerances[key.substr(10)] = v;
    } else {
      throw ArgumentError("config line " + std::to_string(number) + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(config, buffer.str());
}

RunConfig default_config() {
  RunConfig config;
  if (const char* env = std::getenv(kUnitsEnvVar); env != nullptr && *env != '\0') config.units = parse_units(env);
  return config;
}

}  // namespace mvspace::cli
