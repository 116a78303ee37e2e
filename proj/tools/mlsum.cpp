// mlsum: sum two weighted closed geodesics crossing once and report the
// decomposition as JSON (and optionally an SVG of the axes).
//
// Exit codes: 0 ok, 2 invalid input, 3 numerical breakdown.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlsum/error.hpp"
#include "mlsum/report.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitBreakdown = 3;

struct Inputs {
  std::optional<double> l, m, theta, c, d;
  double tol = 1e-12;
  int max_iter = 200;
};

double number_field(const nlohmann::json& j, const std::string& key) {
  const auto it = j.find(key);
  if (!it->is_number()) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "field '" + key + "' must be a number");
  return it->get<double>();
}

void read_config(const std::string& path, Inputs& in) {
  std::ifstream f(path);
  if (!f) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "config must be a JSON object");
  static const std::set<std::string> known{"l", "m", "theta", "c", "d", "tol", "max_iter"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "unknown field '" + key + "'");
  }
  if (j.contains("l")) in.l = number_field(j, "l");
  if (j.contains("m")) in.m = number_field(j, "m");
  if (j.contains("theta")) in.theta = number_field(j, "theta");
  if (j.contains("c")) in.c = number_field(j, "c");
  if (j.contains("d")) in.d = number_field(j, "d");
  if (j.contains("tol")) in.tol = number_field(j, "tol");
  if (j.contains("max_iter")) {
    const auto& v = j["max_iter"];
    if (!v.is_number_integer()) {
      throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "field 'max_iter' must be an integer");
    }
    in.max_iter = v.get<int>();
  }
}

double require(const std::optional<double>& v, const char* name) {
  if (!v) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, std::string("missing field '") + name + "'");
  return *v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum of two weighted simple closed geodesics meeting once"};
  std::string config_path, svg_path, json_path;
  std::optional<double> l, m, theta, c, d, tol;
  std::optional<int> max_iter;
  int oracle_bound = 0;
  app.add_option("--config", config_path, "JSON config {l, m, theta, c, d, tol, max_iter}");
  app.add_option("--l", l, "length of the first curve");
  app.add_option("--m", m, "length of the second curve");
  app.add_option("--theta", theta, "crossing angle in (0, pi/2]");
  app.add_option("--c", c, "weight of the first curve");
  app.add_option("--d", d, "weight of the second curve");
  app.add_option("--tol", tol, "relative weight tolerance (default 1e-12)");
  app.add_option("--max-iter", max_iter, "iteration cap (default 200)");
  app.add_option("--svg", svg_path, "write a Poincare-disk SVG here");
  app.add_option("--json", json_path, "write the JSON report here instead of stdout");
  app.add_option("--oracle-bound", oracle_bound, "word bound for the crossing-count cross-check (0 = off)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  Inputs in;
  mlsum::RunReport report;
  try {
    if (!config_path.empty()) read_config(config_path, in);
    if (l) in.l = l;
    if (m) in.m = m;
    if (theta) in.theta = theta;
    if (c) in.c = c;
    if (d) in.d = d;
    if (tol) in.tol = *tol;
    if (max_iter) in.max_iter = *max_iter;
    if (!std::isfinite(in.tol) || in.tol <= 0) {
      throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "field 'tol' must be positive");
    }
    if (in.max_iter < 0) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "field 'max_iter' must be >= 0");
    if (oracle_bound < 0) throw mlsum::Error(mlsum::ErrorCode::MalformedConfig, "--oracle-bound must be >= 0");

    const mlsum::TorusConfig cfg = mlsum::build_config(require(in.l, "l"), require(in.m, "m"),
                                                       require(in.theta, "theta"), require(in.c, "c"),
                                                       require(in.d, "d"));
    mlsum::EngineOptions opt;
    opt.max_iter = in.max_iter;
    opt.weight_tolerance = in.tol;
    report = mlsum::make_report(cfg, opt, oracle_bound);
  } catch (const mlsum::Error& e) {
    std::cerr << "mlsum: " << e.what() << "\n";
    return e.code() == mlsum::ErrorCode::NumericalBreakdown ? kExitBreakdown : kExitInvalid;
  }

  try {
    const std::string text = mlsum::report_json(report);
    if (json_path.empty()) {
      std::cout << text;
    } else {
      write_file(json_path, text);
    }
    if (!svg_path.empty()) write_file(svg_path, mlsum::render_svg(report));
  } catch (const std::exception& e) {
    std::cerr << "mlsum: " << e.what() << "\n";
    return 1;
  }

  if (report.decomposition.stop.kind == mlsum::StopKind::NumericalBreakdown) {
    std::cerr << "mlsum: numerical breakdown at step " << report.decomposition.stop.step << ": "
              << report.decomposition.stop.detail << "\n";
    return kExitBreakdown;
  }
  return 0;
}
