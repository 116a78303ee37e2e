#pragma once

// Closed forms in the coordinates gamma = boost(l),
// delta = rotation(theta) boost(m) rotation(-theta).

#include "mlsum/minkowski.hpp"

namespace mlsum {

/// Spans the fixed line of delta * gamma.
MinkVec lemma_w(double l, double m, double theta);

/// Spans the fixed line of the commutator (equally of delta gamma - gamma delta).
MinkVec lemma_v(double l, double m, double theta);

/// v - delta v for v = lemma_v.
MinkVec lemma_v_minus_delta_v(double l, double m, double theta);

/// det[axis(gamma); w; v - delta v], zero for every parameter triple.
double lemma_det_check(double l, double m, double theta);

}  // namespace mlsum
