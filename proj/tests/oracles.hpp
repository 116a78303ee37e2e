#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library's own axis or trace code.

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "mlsum/isometry.hpp"
#include "mlsum/minkowski.hpp"

namespace oracle {

/// tr of the boundary commutator from the SL(2,R) trace identity
/// tr[A,B] = 2 - 4 sh^2(l/2) sh^2(m/2) sin^2(theta), lifted to SO(2,1) as t^2 - 1.
inline double commutator_trace(double l, double m, double theta) {
  const double a = std::sinh(l / 2) * std::sinh(m / 2) * std::sin(theta);
  const double t = 2 - 4 * a * a;
  return t * t - 1;
}

inline Eigen::Matrix3d to_eigen(const mlsum::Isometry& g) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m(i, j) = g(i, j);
  }
  return m;
}

/// Null eigenvectors (future pointing) for eigenvalues e^{-l} and e^{l}.
struct FixedPoints {
  mlsum::MinkVec repulsive;
  mlsum::MinkVec attractive;
};

inline FixedPoints fixed_points(const mlsum::Isometry& g) {
  Eigen::EigenSolver<Eigen::Matrix3d> es(to_eigen(g));
  int lo = 0, hi = 0;
  for (int i = 1; i < 3; ++i) {
    if (es.eigenvalues()(i).real() < es.eigenvalues()(lo).real()) lo = i;
    if (es.eigenvalues()(i).real() > es.eigenvalues()(hi).real()) hi = i;
  }
  auto vec = [&](int i) {
    const Eigen::Vector3cd v = es.eigenvectors().col(i);
    mlsum::MinkVec out{v(0).real(), v(1).real(), v(2).real()};
    if (out.x0 < 0) out = -out;
    return out / out.x0;
  };
  return {vec(lo), vec(hi)};
}

/// x0 from the orientation rule det[v-, v+, x0] > 0.
inline mlsum::MinkVec axis_from_fixed_points(const mlsum::Isometry& g) {
  const FixedPoints fp = fixed_points(g);
  const mlsum::MinkVec c = mlsum::minkowski_cross(fp.repulsive, fp.attractive);
  return c / std::sqrt(mlsum::form(c, c));
}

/// Boundary angle of a null vector.
inline double ideal_angle(const mlsum::MinkVec& v) { return std::atan2(v.x2, v.x1); }

/// Do the endpoint pairs {a1, a2} and {b1, b2} interleave on the circle?
inline bool interleaved(double a1, double a2, double b1, double b2) {
  auto between = [](double x, double lo, double hi) {
    const double two_pi = 2 * std::acos(-1.0);
    auto norm = [&](double t) { return std::fmod(std::fmod(t - lo, two_pi) + two_pi, two_pi); };
    return norm(x) > 0 && norm(x) < norm(hi);
  };
  return between(b1, a1, a2) != between(b2, a1, a2);
}

/// Random element rotation(a) boost(s) rotation(b).
inline mlsum::Isometry random_isometry(std::mt19937& rng, double max_boost) {
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  std::uniform_real_distribution<double> len(0.0, max_boost);
  return mlsum::rotation(ang(rng)) * mlsum::boost(len(rng)) * mlsum::rotation(ang(rng));
}

/// Random hyperbolic element with translation length in [lo, hi].
inline mlsum::Isometry random_hyperbolic(std::mt19937& rng, double lo, double hi, double max_conj) {
  std::uniform_real_distribution<double> len(lo, hi);
  return mlsum::conjugate(random_isometry(rng, max_conj), mlsum::boost(len(rng)));
}

inline mlsum::MinkVec random_vec(std::mt19937& rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  return {u(rng), u(rng), u(rng)};
}

}  // namespace oracle
