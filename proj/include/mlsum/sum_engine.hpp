#pragma once

// Sum of (C, c) and (D, d) for two simple closed geodesics crossing once.
//
// Each step rewrites (C_k, r_k d_k) + (D_k, d_k) as (boundary, a) + (C_k D_k, b)
// and continues on the remaining pair. The recursion runs in HighReal; the
// recorded trace is in doubles.

#include <optional>
#include <string>
#include <vector>

#include "mlsum/cocycle.hpp"
#include "mlsum/isometry.hpp"
#include "mlsum/scalar.hpp"
#include "mlsum/torus.hpp"
#include "mlsum/word.hpp"

namespace mlsum {

namespace tolerance {
inline constexpr double ratio_denominator = 1e-12;
inline constexpr double ratio_match = 1e-9;
inline constexpr double commutator_trace = 1e-8;
}  // namespace tolerance

/// cos angle(gh, h) / cos angle(gh, g).
template <class T>
T ratio(const BasicIsometry<T>& g, const BasicIsometry<T>& h) {
  const BasicMinkVec<T> x = axis(g * h);
  const T num = form(x, axis(h));
  const T den = form(x, axis(g));
  if (!(den > T(tolerance::ratio_denominator)) || !(num > T(0))) {
    throw Error(ErrorCode::IllConditioned, "ratio denominator is not safely positive");
  }
  return num / den;
}

template <class T>
struct PropSolution {
  T a;
  T b;
  T residual;  // max-norm of the six equations, relative, plus b_spread
  T b_spread;  // relative disagreement of the two expressions for b
};

/// Solves (g, c) + (h, d) = (commutator, a) + (h g, b) on the generators.
/// Requires c / d == ratio(g, h).
template <class T>
PropSolution<T> prop_solve(const BasicIsometry<T>& g, const BasicIsometry<T>& h, const T& c, const T& d) {
  using std::abs;
  if (!(d > T(0))) throw Error(ErrorCode::RatioMismatch, "second weight must be positive");
  const T r = ratio(g, h);
  if (abs(c / d - r) > T(tolerance::ratio_match) * r) {
    throw Error(ErrorCode::RatioMismatch, "weights do not satisfy the ratio condition");
  }
  const BasicIsometry<T> hg = h * g;
  const BasicMinkVec<T> xa = axis(commutator(g, h));
  const BasicMinkVec<T> xg = axis(g);
  const BasicMinkVec<T> xh = axis(h);
  const BasicMinkVec<T> xhg = axis(hg);

  const T cross = form(xg, xh);
  const T den_h = form(xhg, xh);
  const T den_g = form(xhg, xg);
  const T b_h = c * cross / den_h;
  const T b_g = d * cross / den_g;
  const T b = abs(den_h) >= abs(den_g) ? b_h : b_g;

  const T a = (c * form(xg, xa) - d * form(xh, xa)) / (T(1) - form(hg * xa, xa));

  const BasicMinkVec<T> gxa = g * xa;
  const BasicMinkVec<T> hxa = h * xa;
  const BasicMinkVec<T> gxhg = g * xhg;
  const BasicMinkVec<T> e_h = a * (xa - hxa) + b * xhg - c * xg;
  const BasicMinkVec<T> e_g = a * (xa - gxa) - b * gxhg + d * xh;
  const T scale = std::max({c, d, a * max_abs(gxa), a * max_abs(hxa), abs(b) * max_abs(gxhg)});
  const T spread = abs(b_h - b_g) / std::max(c, d);

  PropSolution<T> out{a, b, std::max(max_abs(e_h), max_abs(e_g)) / scale + spread, spread};
  if (!(a > T(0))) throw Error(ErrorCode::NegativeWeight, "boundary weight is not positive");
  if (b < -T(1e-12) * (c + d)) throw Error(ErrorCode::NegativeWeight, "product-curve weight is negative");
  return out;
}

enum class Branch { DropDelta, Collapse, SwapIn, KeepGamma };
const char* to_string(Branch b);

/// One recorded step, in doubles. Words are over the working pair of the config.
struct StepState {
  int k = 0;
  Word gamma_word;
  Word delta_word;
  double a_k = 0;  // boundary weight accumulated before this step
  double c_k = 0;
  double d_k = 0;
  double r_k = 0;
  double theta_k = 0;
  double log_theta_k = 0;  // natural log, taken before rounding to double
  double len_gamma = 0;
  double len_delta = 0;
  double residual_k = 0;
  double step_a = 0;
  double log_step_a = 0;  // step_a underflows double long before it reaches zero
  double step_b = 0;
  Branch branch = Branch::DropDelta;
  double trace_dev = 0;  // |tr commutator(gamma_k, delta_k) / tr alpha - 1|
  MinkVec axis_gamma;
  MinkVec axis_delta;
};

struct EngineState {
  int k = 0;
  Word gamma_word{"g"};
  Word delta_word{"d"};
  BasicIsometry<HighReal> gamma;
  BasicIsometry<HighReal> delta;
  HighReal a = 0;
  HighReal c = 0;
  HighReal d = 0;
};

EngineState initial_state(const TorusConfig& cfg);

/// High-precision matrices of the working pair, rebuilt from the parameters.
GeneratorPair<HighReal> working_pair_high(const TorusConfig& cfg);

struct StepResult {
  StepState record;
  EngineState next;
  HighReal step_a;
  HighReal step_b;
  HighReal r;
  bool terminal = false;  // next.d is zero
};

/// Requires s.d > weight_tol.
StepResult recursion_step(const EngineState& s, const HighReal& weight_tol);

enum class StopKind { TerminatedExact, MaxIterations, Overflow, NumericalBreakdown };
const char* to_string(StopKind k);

struct StopReason {
  StopKind kind = StopKind::MaxIterations;
  int step = 0;
  std::string detail;
};

struct Tail {
  double a = 0;
  double c = 0;
  double d = 0;
  Word gamma_word;
  Word delta_word;
  double len_gamma = 0;
  double len_delta = 0;
};

struct SumDecomposition {
  std::vector<WeightedCurve> components;  // exact case only
  std::optional<Tail> tail;               // truncated case
  StopReason stop;
  std::vector<StepState> trace;
  Word alpha_word{"DGdg"};
  double alpha_trace = 0;
};

struct EngineOptions {
  int max_iter = 200;
  double weight_tolerance = 1e-12;  // relative to c + d
  double length_guard = 650;
};

SumDecomposition run_sum(const TorusConfig& cfg, const EngineOptions& opt = {});

struct Verification {
  double total = 0;              // max-norm of the accumulated defect on the generators
  std::vector<double> per_step;  // defect contributed by each step, on the generators
  bool replay_matches = true;
};

/// Replays the first `upto` recorded steps (all by default) and accumulates
/// the defect of (C, c) + (D, d) = (boundary, a_k) + (C_k, c_k) + (D_k, d_k)
/// as a cocycle on the original generators.
Verification verify_decomposition(const SumDecomposition& dec, const TorusConfig& cfg, int upto = -1,
                                  const EngineOptions& opt = {});

struct InvariantCheck {
  std::string name;
  bool pass = false;
  double worst = 0;
};

std::vector<InvariantCheck> invariant_summary(const SumDecomposition& dec, const TorusConfig& cfg,
                                              const EngineOptions& opt = {});

}  // namespace mlsum
