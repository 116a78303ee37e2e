#include "mlsum/torus.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "mlsum/cocycle.hpp"
#include "mlsum/sum_engine.hpp"

namespace mlsum {

namespace {

constexpr int kScanSteps = 24;

double scan_radius(int j) { return 0.1 * std::pow(1.3, j); }

}  // namespace

Isometry lemma_gamma(double l) { return boost(l); }

Isometry lemma_delta(double m, double theta) { return conjugate(rotation(theta), boost(m)); }

TorusConfig build_config(double l, double m, double theta, double c, double d) {
  if (!std::isfinite(l) || l <= 0) throw Error(ErrorCode::InvalidLength, "l must be a positive finite length");
  if (!std::isfinite(m) || m <= 0) throw Error(ErrorCode::InvalidLength, "m must be a positive finite length");
  if (!std::isfinite(theta) || theta <= 0 || theta > std::numbers::pi / 2 + tolerance::axis) {
    throw Error(ErrorCode::InvalidAngle, "theta must lie in (0, pi/2]");
  }
  if (!std::isfinite(c) || !std::isfinite(d) || c < 0 || d < 0) {
    throw Error(ErrorCode::DegenerateWeights, "weights must be finite and non-negative");
  }
  if (c == 0 && d == 0) throw Error(ErrorCode::DegenerateWeights, "weights c and d are both zero");

  TorusConfig cfg;
  cfg.l = l;
  cfg.m = m;
  cfg.theta = theta;
  cfg.c = c;
  cfg.d = d;

  Isometry g, h;
  try {
    g = lemma_gamma(l);
    h = lemma_delta(m, theta);
  } catch (const Error& e) {
    throw Error(ErrorCode::NumericalBreakdown, e.what());
  }
  const Isometry alpha = commutator(g, h);
  // The commutator cancels entries of size e^(l+m); past a point double
  // precision cannot resolve it and the closed-form trace tells.
  const double q = 2 * std::sinh(l / 2) * std::sinh(m / 2) * std::sin(theta);
  const double expected_trace = std::pow(2 - q * q, 2) - 1;
  if (!std::isfinite(alpha.trace()) ||
      std::abs(alpha.trace() - expected_trace) > tolerance::setup_trace * std::max(1.0, std::abs(expected_trace))) {
    throw Error(ErrorCode::NumericalBreakdown, "boundary trace " + std::to_string(alpha.trace()) +
                                                   " lost to rounding (closed form " + std::to_string(expected_trace) +
                                                   "); lengths too large for double-precision setup");
  }
  if (classify(alpha) != IsometryType::Hyperbolic) {
    throw Error(ErrorCode::NonHyperbolicBoundary,
                "boundary commutator is not hyperbolic (trace " + std::to_string(alpha.trace()) + ")");
  }
  // Valid input from here on; any failure is a loss of precision.
  try {
    const double r = ratio(g, h);
    cfg.swapped = d > 0 && c / d < r;
    if (cfg.swapped) {
      // Mirror image of (h, g): the same torus seen with the opposite
      // orientation, so the working pair is again positively oriented.
      cfg.gamma = lemma_gamma(m);
      cfg.delta = lemma_delta(l, theta);
      cfg.weight_gamma = d;
      cfg.weight_delta = c;
    } else {
      cfg.gamma = g;
      cfg.delta = h;
      cfg.weight_gamma = c;
      cfg.weight_delta = d;
    }
    cfg.alpha = commutator(cfg.gamma, cfg.delta);
    cfg.ratio = ratio(cfg.gamma, cfg.delta);
    cfg.p0 = base_point(cfg);
  } catch (const Error& e) {
    throw Error(ErrorCode::NumericalBreakdown, e.what());
  }
  return cfg;
}

double axis_clearance(const TorusConfig& cfg, const MinkVec& p, int word_bound) {
  const GeneratorPair<double> pair = pair_of(cfg);
  const std::vector<Word> words = enumerate_reduced_words(word_bound);
  double worst = std::numeric_limits<double>::infinity();
  for (CurveKind kind : {CurveKind::C, CurveKind::D, CurveKind::Alpha, CurveKind::DeltaGamma}) {
    const Word eta = curve_word(kind);
    const MinkVec x = axis(pair.word_matrix(eta));
    for (const Word& w : words) {
      if (!is_canonical_coset_rep(w, eta)) continue;
      const MinkVec u = pair.word_matrix(w) * x;
      worst = std::min(worst, std::abs(form(u, p)) - 1e-12 * max_abs(u) * max_abs(p));
    }
  }
  return worst;
}

MinkVec base_point(const TorusConfig& cfg, int word_bound) {
  const MinkVec xa = axis(cfg.alpha);
  const MinkVec o{1, 0, 0};
  const double t = form(xa, o);
  const MinkVec foot = (o - t * xa) / std::sqrt(1 + t * t);
  for (int j = 0; j < kScanSteps; ++j) {
    const double s = scan_radius(j);
    const MinkVec p = std::cosh(s) * foot - std::sinh(s) * xa;
    if (axis_clearance(cfg, p, word_bound) > tolerance::base) return p;
  }
  throw Error(ErrorCode::NoGenericPoint, "no base point with enough axis clearance");
}

MinkVec core_base_point(const TorusConfig& cfg, int word_bound) {
  for (int j = 0; j < kScanSteps; ++j) {
    const double s = scan_radius(j);
    const MinkVec p = hyperboloid_point(s, (cfg.theta + std::numbers::pi) / 2);
    if (axis_clearance(cfg, p, word_bound) > tolerance::base) return p;
  }
  throw Error(ErrorCode::NoGenericPoint, "no base point with enough axis clearance");
}

}  // namespace mlsum
