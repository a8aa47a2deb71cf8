#include <CLI11.hpp>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "mvspace/cli.hpp"
#include "mvspace/errors.hpp"
#include "mvspace/exponential.hpp"
#include "mvspace/interactions.hpp"
#include "mvspace/lorentz.hpp"
#include "mvspace/schrodinger.hpp"
#include "mvspace/serialization.hpp"

namespace mvspace::cli {

namespace {

using nlohmann::json;

constexpr double kPi = std::numbers::pi;

// "a,b,c" -> three doubles; `flag` names the option in error messages.
std::vector<double> parse_list(const std::string& text, std::size_t count, const std::string& flag) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < cell.size() && std::isspace(static_cast<unsigned char>(cell[used]))) ++used;
    if (used == 0 || used != cell.size() || !std::isfinite(v))
      throw ArgumentError(flag + ": '" + cell + "' is not a finite number");
    out.push_back(v);
  }
  if (out.size() != count)
    throw ArgumentError(flag + ": expected " + std::to_string(count) + " comma-separated numbers");
  return out;
}

Vector3 parse_vector(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, 3, flag);
  return {v[0], v[1], v[2]};
}

json parse_json_arg(const std::string& text, const std::string& flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(flag + ": invalid JSON (" + std::string(e.what()) + ")");
  }
}

// JSON output with a trailing newline.
void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

double angle(double value, bool degrees) { return degrees ? value * kPi / 180.0 : value; }

struct GlobalOptions {
  std::string config_path;
  std::string format;
  std::string units;
  std::optional<std::uint64_t> seed;
};

RunConfig resolve(const GlobalOptions& g) {
  RunConfig config = default_config();
  if (!g.config_path.empty()) apply_config_file(config, g.config_path);
  if (!g.units.empty()) config.units = parse_units(g.units);
  if (!g.format.empty()) config.format = parse_format(g.format);
  if (g.seed) config.seed = *g.seed;
  return config;
}

const char* units_name(Units u) { return u == Units::si ? "si" : "natural"; }

struct BoostOptions {
  std::optional<double> phi;
  std::optional<double> speed;
  std::string axis = "1,0,0";
  std::string field;
  std::string event;
};

int run_boost(const BoostOptions& o, const RunConfig& config, std::ostream& out) {
  const UnitSystem units = unit_system(config.units);
  const Vector3 axis = normalized(parse_vector(o.axis, "--axis"));
  double phi = 0.0;
  if (o.phi) phi = *o.phi;
  else if (o.speed) phi = std::copysign(rapidity_from_speed(std::abs(*o.speed) / units.c), *o.speed);
  else throw ArgumentError("boost needs --phi or --speed");

  json report = {{"phi", phi}, {"axis", to_json(axis)}, {"gamma", std::cosh(phi)}, {"units", units_name(config.units)}};
  if (!o.field.empty()) {
    const FieldMultivector f = field_from_json(parse_json_arg(o.field, "--field"), units.c);
    report["input"] = to_json(f);
    report["output"] = to_json(boost_field(f, phi, axis));
    report["kind"] = "field";
  } else {
    const Event e = event_from_json(parse_json_arg(o.event, "--event"), units.c);
    report["input"] = to_json(e);
    report["kind"] = "event";
    try {
      report["output"] = to_json(boost_event(e, phi, axis));
      report["method"] = "multivector";
    } catch (const DegenerateGeometryError&) {
      // x along the boost: use the component form with a signed scalar time.
      const double ts = norm(e.t());
      const Vector3 t_hat = ts > 0.0 ? e.t() / ts : default_time_direction(axis);
      const BoostedComponents b = boost_event_components(e.x(), ts, phi, axis, e.c());
      report["output"] = to_json(Event(b.x, t_hat * b.t, e.c()));
      report["method"] = "components";
    }
  }
  emit(out, report);
  return kExitOk;
}

struct RotateOptions {
  std::string vector;
  double theta = 0.0;
  std::string axis = "0,0,1";
  bool degrees = false;
};

int run_rotate(const RotateOptions& o, std::ostream& out) {
  const Vector3 v = parse_vector(o.vector, "--vector");
  const Vector3 axis = normalized(parse_vector(o.axis, "--axis"));
  const double theta = angle(o.theta, o.degrees);
  emit(out, {{"input", to_json(v)}, {"theta", theta}, {"axis", to_json(axis)}, {"output", to_json(rotate(v, theta, axis))}});
  return kExitOk;
}

struct ComptonOptions {
  double lambda_i = 1.0;
  double theta = 0.0;
  std::optional<double> m;
  bool degrees = false;
  int sweep = 0;
};

struct ComptonRow {
  double theta;
  double lambda_f;
  double shift;
  double formula_shift;
  double residual_norm;
};

ComptonRow compton_row(double lambda_i, double theta, double m, const UnitSystem& units) {
  const ComptonSolution s = compton_solve_multivector(lambda_i, theta, m, units.h, units.c);
  const double residual = std::sqrt(conservation_residual(s.ledger).norm_squared());
  return {theta, s.lambda_f, s.lambda_f - lambda_i, compton_wavelength_shift(lambda_i, theta, m, units.h, units.c),
          residual};
}

int run_compton(const ComptonOptions& o, const RunConfig& config, std::ostream& out) {
  const UnitSystem units = unit_system(config.units);
  const double m = o.m.value_or(units.electron_mass);
  if (o.sweep < 0) throw ArgumentError("--sweep must be non-negative");

  std::vector<ComptonRow> rows;
  if (o.sweep > 0) {
    for (int k = 1; k <= o.sweep; ++k) rows.push_back(compton_row(o.lambda_i, kPi * k / o.sweep, m, units));
  } else {
    rows.push_back(compton_row(o.lambda_i, angle(o.theta, o.degrees), m, units));
  }

  if (o.sweep > 0 || config.format == OutputFormat::csv) {
    out << "theta,lambda_f,shift,formula_shift,ledger_residual_norm\n";
    for (const auto& r : rows)
      out << format_double(r.theta) << ',' << format_double(r.lambda_f) << ',' << format_double(r.shift) << ','
          << format_double(r.formula_shift) << ',' << format_double(r.residual_norm) << '\n';
    return kExitOk;
  }
  const ComptonRow& r = rows.front();
  emit(out, {{"lambda_i", o.lambda_i},
             {"theta", r.theta},
             {"m", m},
             {"units", units_name(config.units)},
             {"lambda_f", r.lambda_f},
             {"shift", r.shift},
             {"formula_shift", r.formula_shift},
             {"ledger_residual_norm", r.residual_norm}});
  return kExitOk;
}

struct WavepacketOptions {
  WavePacketParams params;
  double t = 0.0;
  std::string x_range;
  int samples = 201;
  bool fit = false;
  std::optional<double> window_begin;
  std::optional<double> window_end;
};

int run_wavepacket(const WavepacketOptions& o, std::ostream& out) {
  const WavePacketParams& p = o.params;
  p.validate();
  if (o.fit) {
    const double unit_time = p.m / (p.hbar * p.sigma * p.sigma);
    const double begin = o.window_begin.value_or(2.0 * unit_time);
    const double end = o.window_end.value_or(begin + 8.0 * unit_time);
    json report = {{"t", o.t},
                   {"spread_fit", fit_spread(p, o.t)},
                   {"spread_formula", spread(p, o.t)},
                   {"w0", rotation_rate_reference(p)},
                   {"window", {begin, end}}};
    report["phase_rate_fit"] = p.narrow() ? json(phase_rotation_rate(p, {begin, end})) : json(nullptr);
    emit(out, report);
    return kExitOk;
  }

  const double centre = group_velocity(p) * o.t;
  const double s = spread(p, o.t);
  double x0 = centre - 4.0 * s;
  double x1 = centre + 4.0 * s;
  if (!o.x_range.empty()) {
    const auto r = parse_list(o.x_range, 2, "--x-range");
    x0 = r[0];
    x1 = r[1];
  }
  out << "x,re,im,modulus,analytic_modulus\n";
  for (const auto& row : sample_packet(p, o.t, x0, x1, o.samples))
    out << format_double(row.x) << ',' << format_double(row.numeric.re) << ',' << format_double(row.numeric.im) << ','
        << format_double(row.numeric.abs()) << ',' << format_double(row.analytic.abs()) << '\n';
  return kExitOk;
}

struct CheckOptions {
  std::string suite = "all";
  int trials = 100;
};

int run_check(const CheckOptions& o, const RunConfig& config, std::ostream& out) {
  const auto results = run_checks(o.suite, config, o.trials);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;

  if (config.format == OutputFormat::csv) {
    out << "check_name,residual,tolerance,pass\n";
    for (const auto& r : results)
      out << r.check_name << ',' << format_double(r.residual) << ',' << format_double(r.tolerance) << ','
          << (r.pass ? "true" : "false") << '\n';
  } else {
    json checks = json::array();
    for (const auto& r : results)
      checks.push_back({{"check_name", r.check_name}, {"residual", r.residual}, {"tolerance", r.tolerance}, {"pass", r.pass}});
    emit(out, {{"seed", config.seed},
               {"suite", o.suite},
               {"trials", o.trials},
               {"units", units_name(config.units)},
               {"checks", checks},
               {"pass", pass}});
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multivector spacetime toolkit", "mvspace"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--config", global.config_path, "key = value config file");
  app.add_option("--format", global.format, "json or csv");
  app.add_option("--units", global.units, "natural or si (default from MVSPACE_UNITS)");
  app.add_option("--seed", global.seed, "seed for randomized suites");

  BoostOptions boost;
  auto* boost_cmd = app.add_subcommand("boost", "Boost a field or an event");
  auto* phi_opt = boost_cmd->add_option("--phi", boost.phi, "rapidity");
  auto* speed_opt = boost_cmd->add_option("--speed", boost.speed, "speed (fraction of c in natural units)");
  phi_opt->excludes(speed_opt);
  boost_cmd->add_option("--axis", boost.axis, "boost direction x,y,z");
  auto* field_opt = boost_cmd->add_option("--field", boost.field, "field JSON {\"E\":[..],\"B\":[..]}");
  auto* event_opt = boost_cmd->add_option("--event", boost.event, "event JSON {\"x\":[..],\"t\":[..]}");
  field_opt->excludes(event_opt);
  boost_cmd->require_option(1, 0);

  RotateOptions rot;
  auto* rotate_cmd = app.add_subcommand("rotate", "Rotate a vector about an axis");
  rotate_cmd->add_option("--vector", rot.vector, "vector x,y,z")->required();
  rotate_cmd->add_option("--theta", rot.theta, "angle (radians)")->required();
  rotate_cmd->add_option("--axis", rot.axis, "rotation axis x,y,z");
  rotate_cmd->add_flag("--deg", rot.degrees, "angle in degrees");

  ComptonOptions comp;
  auto* compton_cmd = app.add_subcommand("compton", "Compton scattering from momentum conservation");
  compton_cmd->add_option("--lambda-i", comp.lambda_i, "incident wavelength")->required();
  compton_cmd->add_option("--theta", comp.theta, "scattering angle (radians)");
  compton_cmd->add_option("--m", comp.m, "electron mass (default: electron mass of the unit system)");
  compton_cmd->add_flag("--deg", comp.degrees, "angle in degrees");
  compton_cmd->add_option("--sweep", comp.sweep, "CSV sweep over N angles in (0, pi]");

  WavepacketOptions wave;
  auto* wave_cmd = app.add_subcommand("wavepacket", "Free Gaussian wave packet");
  wave_cmd->add_option("--sigma", wave.params.sigma, "momentum width");
  wave_cmd->add_option("--k0", wave.params.k0, "central wavenumber");
  wave_cmd->add_option("--m", wave.params.m, "mass");
  wave_cmd->add_option("--hbar", wave.params.hbar, "reduced Planck constant");
  wave_cmd->add_option("--t", wave.t, "time");
  wave_cmd->add_option("--x-range", wave.x_range, "a,b (default centre +- 4 spreads)");
  wave_cmd->add_option("--samples", wave.samples, "number of x samples");
  wave_cmd->add_flag("--fit", wave.fit, "emit fitted spread and phase rate as JSON");
  wave_cmd->add_option("--window-begin", wave.window_begin, "phase fit window start");
  wave_cmd->add_option("--window-end", wave.window_end, "phase fit window end");

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Run property and oracle check suites");
  check_cmd->add_option("--suite", check.suite, "algebra, exponential, lorentz, kinematics, compton, dispersion, kg, "
                                                "dirac, schrodinger or all");
  check_cmd->add_option("--trials", check.trials, "random trials per property");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const RunConfig config = resolve(global);
    if (boost_cmd->parsed()) return run_boost(boost, config, out);
    if (rotate_cmd->parsed()) return run_rotate(rot, out);
    if (compton_cmd->parsed()) return run_compton(comp, config, out);
    if (wave_cmd->parsed()) return run_wavepacket(wave, out);
    return run_check(check, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace mvspace::cli
