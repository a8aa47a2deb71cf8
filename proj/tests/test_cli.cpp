#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mvspace/cli.hpp"
#include "mvspace/errors.hpp"
#include "mvspace/serialization.hpp"

using namespace mvspace;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("multivector JSON and CSV round trip") {
  const Multivector m = Multivector::from_parts(0.1, {1.0, -2.5, 3e-17}, {4.0, 5.0, -6.0}, 1.0 / 3.0);
  CHECK(multivector_from_json(json::parse(to_json(m).dump())) == m);
  CHECK(multivector_from_csv_row(to_csv_row(m)) == m);
  CHECK_THROWS_AS(multivector_from_csv_row("1,2,3"), ArgumentError);
  CHECK_THROWS_AS(multivector_from_csv_row("1,2,3,4,5,6,7,x"), ArgumentError);
  CHECK_THROWS_AS(multivector_from_json(json::parse(R"({"s":1,"v":[0,0,0],"b":[0,0,0],"p":0,"q":1})")), ArgumentError);
  try {
    multivector_from_json(json::parse(R"({"s":1,"v":[0,0],"b":[0,0,0],"p":0})"));
    FAIL("expected an error");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("'v'") != std::string::npos);
  }
  const Event e({1.0, 0.0, 0.0}, {0.0, 2.0, 0.0}, 3.0);
  const Event back = event_from_json(json::parse(to_json(e).dump()), 1.0);
  CHECK(back.c() == 3.0);
  CHECK(back.t() == e.t());
  CHECK(event_from_json(json::parse(R"({"x":[1,0,0],"t":[0,1,0]})"), 5.0).c() == 5.0);
}

TEST_CASE("config file parsing") {
  cli::RunConfig c;
  cli::apply_config_text(c, "# comment\nunits = si\nformat=csv\n\nseed = 7\ntolerance.kg.convergence_order = 0.5\n");
  CHECK(c.units == cli::Units::si);
  CHECK(c.format == cli::OutputFormat::csv);
  CHECK(c.seed == 7);
  CHECK(c.tolerances.at("kg.convergence_order") == 0.5);
  CHECK_THROWS_AS(cli::apply_config_text(c, "colour = red\n"), ArgumentError);
  CHECK_THROWS_AS(cli::apply_config_text(c, "seed = -1\n"), ArgumentError);
  CHECK_THROWS_AS(cli::apply_config_text(c, "units = imperial\n"), ArgumentError);
  CHECK_THROWS_AS(cli::apply_config_text(c, "just text\n"), ArgumentError);
  CHECK(cli::RunConfig{}.seed == cli::kDefaultSeed);
}

TEST_CASE("boost subcommand") {
  const Result r = run({"boost", "--speed", "0.6", "--axis", "1,0,0", "--field", R"({"E":[0,1,0],"B":[0,0,0]})"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["output"]["E"][1].get<double>() == doctest::Approx(1.25));
  CHECK(j["output"]["B"][2].get<double>() == doctest::Approx(-0.75));

  const Result ev = run({"boost", "--phi", "0.5", "--axis", "0,2,0", "--event", R"({"x":[1,1,0],"t":[0,0,1]})"});
  REQUIRE(ev.code == 0);
  CHECK(json::parse(ev.out)["method"] == "multivector");
  const Result par = run({"boost", "--phi", "0.5", "--event", R"({"x":[2,0,0],"t":[0,0,1]})"});
  REQUIRE(par.code == 0);
  CHECK(json::parse(par.out)["method"] == "components");

  CHECK(run({"boost", "--phi", "1", "--speed", "0.5", "--field", R"({"E":[0,1,0],"B":[0,0,0]})"}).code == 2);
  CHECK(run({"boost", "--phi", "1"}).code == 2);
  CHECK(run({"boost", "--speed", "1.5", "--field", R"({"E":[0,1,0],"B":[0,0,0]})"}).code == 2);
  const Result bad = run({"boost", "--phi", "1", "--field", R"({"E":[0,1,0],"C":[0,0,0]})"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("'C'") != std::string::npos);
  CHECK(run({"boost", "--phi", "1", "--field", "{not json"}).code == 2);
  CHECK(run({"boost", "--phi", "1", "--axis", "1,0", "--field", R"({"E":[0,1,0],"B":[0,0,0]})"}).code == 2);
}

TEST_CASE("rotate subcommand") {
  const Result r = run({"rotate", "--vector", "1,0,0", "--theta", "90", "--deg", "--axis", "0,0,1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["output"][1].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(j["output"][0].get<double>()) < 1e-15);
}

TEST_CASE("compton subcommand") {
  const Result r = run({"compton", "--lambda-i", "1", "--theta", "3.14159265", "--m", "1", "--units", "natural"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["shift"].get<double>() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(j["ledger_residual_norm"].get<double>() < 1e-12);

  const Result deg = run({"compton", "--lambda-i", "1", "--theta", "90", "--deg", "--m", "1"});
  CHECK(json::parse(deg.out)["shift"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

  const Result si = run({"--units", "si", "compton", "--lambda-i", "2.5e-12", "--theta", "3.141592653589793"});
  REQUIRE(si.code == 0);
  CHECK(json::parse(si.out)["shift"].get<double>() == doctest::Approx(2 * 2.42631023867e-12).epsilon(1e-9));

  const Result sweep = run({"compton", "--lambda-i", "1", "--m", "1", "--sweep", "4"});
  REQUIRE(sweep.code == 0);
  std::istringstream lines(sweep.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 5);
  CHECK(sweep.out.rfind("theta,lambda_f,shift,formula_shift,ledger_residual_norm\n", 0) == 0);

  CHECK(run({"compton", "--lambda-i", "-1", "--theta", "1"}).code == 2);
  CHECK(run({"compton", "--theta", "1"}).code == 2);
}

TEST_CASE("wavepacket subcommand") {
  const Result csv = run({"wavepacket", "--t", "1", "--samples", "5"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("x,re,im,modulus,analytic_modulus\n", 0) == 0);

  const Result fit = run({"wavepacket", "--t", "1", "--fit"});
  REQUIRE(fit.code == 0);
  const json j = json::parse(fit.out);
  CHECK(j["w0"].get<double>() == 50.0);
  CHECK(std::abs(j["phase_rate_fit"].get<double>() / 50.0 - 1.0) < 1e-2);
  CHECK(std::abs(j["spread_fit"].get<double>() / j["spread_formula"].get<double>() - 1.0) < 1e-3);

  const Result wide = run({"wavepacket", "--sigma", "4", "--fit"});
  REQUIRE(wide.code == 0);
  CHECK(json::parse(wide.out)["phase_rate_fit"].is_null());
  CHECK(run({"wavepacket", "--sigma", "-1"}).code == 2);
}

TEST_CASE("check subcommand") {
  const Result r = run({"check", "--suite", "all", "--seed", "42", "--trials", "20"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["seed"] == 42);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() > 10);

  const Result tight = run({"check", "--suite", "kg"});
  REQUIRE(tight.code == 0);

  std::string path = "mvspace_test_config.txt";
  {
    std::ofstream f(path);
    f << "tolerance.kg.on_shell_residual = 1e-30\n";
  }
  const Result failing = run({"--config", path, "check", "--suite", "kg"});
  std::remove(path.c_str());
  CHECK(failing.code == 1);
  CHECK(json::parse(failing.out)["pass"] == false);

  CHECK(run({"check", "--suite", "nope"}).code == 2);
  CHECK(run({"--config", "/nonexistent/file", "check"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"rotate", "--vector", "1,0,0"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("boost") != std::string::npos);
}

TEST_CASE("identical arguments give identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"check", "--suite", "all", "--seed", "42"},
        std::vector<std::string>{"compton", "--lambda-i", "1", "--m", "1", "--sweep", "16"},
        std::vector<std::string>{"wavepacket", "--t", "2", "--samples", "33"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"check", "--seed", "1"}).out != run({"check", "--seed", "2"}).out);
}
