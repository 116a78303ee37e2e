#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mlsum/cocycle.hpp"
#include "mlsum/sum_engine.hpp"
#include "mlsum/torus.hpp"

namespace mlsum {

inline constexpr const char* kToolVersion = "mlsum 1.0.0";

/// Crossing-count cross-check of the cocycle identity, run on request.
struct OracleCheck {
  int word_bound = 0;
  MinkVec p0;
  GeneratorCocycle input;             // oracle cocycle of (C, c) + (D, d)
  GeneratorCocycle input_table;       // the same from the closed-form table
  std::optional<GeneratorCocycle> output;  // oracle cocycle of the components (exact case)
  double table_defect = 0;
  std::optional<double> sum_defect;
  bool unstable = false;
};

struct RunReport {
  std::string version = kToolVersion;
  double l = 0;
  double m = 0;
  double theta = 0;
  double c = 0;
  double d = 0;
  double tol = 1e-12;
  int max_iter = 200;
  bool swapped = false;
  double ratio = 0;
  MinkVec gamma_axis;
  MinkVec delta_axis;
  MinkVec alpha_axis;
  SumDecomposition decomposition;
  double verification = 0;
  std::vector<double> verification_per_step;
  std::vector<InvariantCheck> invariants;
  std::optional<OracleCheck> oracle;
};

RunReport make_report(const TorusConfig& cfg, const EngineOptions& opt, int oracle_bound);

void to_json(nlohmann::json& j, const RunReport& r);
void from_json(const nlohmann::json& j, RunReport& r);

/// Pretty-printed, with a trailing newline.
std::string report_json(const RunReport& r);

/// Poincare-disk picture of the boundary axis and the axes of every step.
std::string render_svg(const RunReport& r);

}  // namespace mlsum
