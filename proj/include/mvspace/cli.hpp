#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace mvspace::cli {

enum class Units { natural, si };
enum class OutputFormat { json, csv };

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kUnitsEnvVar = "MVSPACE_UNITS";

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Units units = Units::natural;
  OutputFormat format = OutputFormat::json;
  std::uint64_t seed = kDefaultSeed;
  // Per-check tolerance overrides keyed by check name.
  std::map<std::string, double> tolerances;
};

// Physical constants for a unit system.
struct UnitSystem {
  double c;
  double h;
  double hbar;
  double electron_mass;
};
UnitSystem unit_system(Units units);

Units parse_units(const std::string& s);
OutputFormat parse_format(const std::string& s);

// Applies `key = value` lines. Keys: units, format, seed,
// tolerance.<check_name>. Blank lines and lines starting with '#' are
// skipped. Unknown keys and malformed values throw ArgumentError naming the
// key and line.
void apply_config_text(RunConfig& config, const std::string& text);
void apply_config_file(RunConfig& config, const std::string& path);

// Reads kUnitsEnvVar when set.
RunConfig default_config();

struct CheckResult {
  std::string check_name;
  double residual;
  double tolerance;
  bool pass;
};

// Suites: algebra, exponential, lorentz, kinematics, compton, dispersion,
// kg, dirac, schrodinger, all. Throws ArgumentError for an unknown suite.
std::vector<CheckResult> run_checks(const std::string& suite, const RunConfig& config, int trials);

// Entry point shared by the executable and tests. `args` excludes the
// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvspace::cli
