#include "mlsum/lemma_fixtures.hpp"

#include <cmath>

namespace mlsum {

MinkVec lemma_w(double l, double m, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double chl = std::cosh(l), shl = std::sinh(l), chm = std::cosh(m), shm = std::sinh(m);
  return {s * (chm - 1) * shl, -s * (chm - 1) * (chl + 1), shl * shm + c * (chl + 1) * (chm - 1)};
}

MinkVec lemma_v(double l, double m, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double chl = std::cosh(l), shl = std::sinh(l), chm = std::cosh(m), shm = std::sinh(m);
  return {shl * shm + (chl - 1) * (chm - 1) * c, -shm * (chl - 1) - shl * (chm - 1) * c, -s * shl * (chm - 1)};
}

MinkVec lemma_v_minus_delta_v(double l, double m, double theta) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double chl = std::cosh(l), shl = std::sinh(l), chm = std::cosh(m);
  return 2 * (chm - 1) * MinkVec{(chl - 1) * c, -shl * c, -shl * s};
}

double lemma_det_check(double l, double m, double theta) {
  const MinkVec x{0, 0, 1};  // axis of boost(l)
  const MinkVec w = lemma_w(l, m, theta);
  const MinkVec u = lemma_v_minus_delta_v(l, m, theta);
  // Columns x, w, u.
  return x.x0 * (w.x1 * u.x2 - w.x2 * u.x1) - w.x0 * (x.x1 * u.x2 - x.x2 * u.x1) +
         u.x0 * (x.x1 * w.x2 - x.x2 * w.x1);
}

}  // namespace mlsum
