#pragma once

// One-holed torus spanned by two closed geodesics C, D crossing once.

#include "mlsum/isometry.hpp"
#include "mlsum/minkowski.hpp"

namespace mlsum {

namespace tolerance {
inline constexpr double base = 1e-6;  // clearance of the base point from any axis
inline constexpr double setup_trace = 1e-8;  // relative, double commutator vs closed form
}

struct TorusConfig {
  // As given.
  double l = 0;
  double m = 0;
  double theta = 0;
  double c = 0;
  double d = 0;

  // Working generator pair. When `swapped`, the curves trade roles and the
  // pair is the mirror image: gamma = boost(m) with weight d, delta the
  // rotated boost of length l with weight c. Either way
  // weight_gamma / weight_delta >= ratio.
  bool swapped = false;
  Isometry gamma;
  Isometry delta;
  Isometry alpha;  // commutator(gamma, delta)
  double weight_gamma = 0;
  double weight_delta = 0;
  double ratio = 0;  // r(gamma, delta)
  MinkVec p0;
};

/// Lemma coordinates: gamma = boost(l), delta = rotation(theta) boost(m) rotation(-theta).
Isometry lemma_gamma(double l);
Isometry lemma_delta(double m, double theta);

TorusConfig build_config(double l, double m, double theta, double c, double d);

/// Hyperboloid point past the boundary axis, off every conjugate axis of
/// gamma, delta, alpha and delta*gamma by words of length <= word_bound.
MinkVec base_point(const TorusConfig& cfg, int word_bound = 6);

/// Near the crossing point, inside the torus, on the bisector of the obtuse
/// angle between the two axes. Only the cohomology class of the crossing
/// cocycle is meaningful from here.
MinkVec core_base_point(const TorusConfig& cfg, int word_bound = 6);

/// Smallest |form(u, p)| over the unit duals u of the conjugate axes above,
/// less a rounding allowance of 1e-12 |u| |p| for each.
double axis_clearance(const TorusConfig& cfg, const MinkVec& p, int word_bound);

}  // namespace mlsum
