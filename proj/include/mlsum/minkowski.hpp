#pragma once

// Minkowski 3-space R^{2,1} with the form -x0*y0 + x1*y1 + x2*y2, and the
// hyperboloid model {p : <p,p> = -1, p0 > 0} of the hyperbolic plane.
//
// Everything is templated on the scalar so the same code runs in double and in
// the high-precision type used by the sum engine.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <ostream>

#include "mlsum/error.hpp"

namespace mlsum {

namespace tolerance {
inline constexpr double classify = 1e-10;  // causal classification, relative to scale^2
inline constexpr double unit = 1e-10;      // |<v,v>| - 1 for unit vectors
}  // namespace tolerance

template <class T>
struct BasicMinkVec {
  T x0{};
  T x1{};
  T x2{};

  T& operator[](std::size_t i) { return i == 0 ? x0 : (i == 1 ? x1 : x2); }
  const T& operator[](std::size_t i) const { return i == 0 ? x0 : (i == 1 ? x1 : x2); }

  BasicMinkVec& operator+=(const BasicMinkVec& o) {
    x0 += o.x0;
    x1 += o.x1;
    x2 += o.x2;
    return *this;
  }
  BasicMinkVec& operator-=(const BasicMinkVec& o) {
    x0 -= o.x0;
    x1 -= o.x1;
    x2 -= o.x2;
    return *this;
  }
  BasicMinkVec& operator*=(const T& s) {
    x0 *= s;
    x1 *= s;
    x2 *= s;
    return *this;
  }

  template <class U>
  BasicMinkVec<U> cast() const {
    return {static_cast<U>(x0), static_cast<U>(x1), static_cast<U>(x2)};
  }

  friend BasicMinkVec operator+(BasicMinkVec a, const BasicMinkVec& b) { return a += b; }
  friend BasicMinkVec operator-(BasicMinkVec a, const BasicMinkVec& b) { return a -= b; }
  friend BasicMinkVec operator-(const BasicMinkVec& a) { return {-a.x0, -a.x1, -a.x2}; }
  friend BasicMinkVec operator*(BasicMinkVec a, const T& s) { return a *= s; }
  friend BasicMinkVec operator*(const T& s, BasicMinkVec a) { return a *= s; }
  friend BasicMinkVec operator/(const BasicMinkVec& a, const T& s) {
    return {a.x0 / s, a.x1 / s, a.x2 / s};
  }
  friend bool operator==(const BasicMinkVec& a, const BasicMinkVec& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2;
  }
  friend std::ostream& operator<<(std::ostream& os, const BasicMinkVec& v) {
    return os << "(" << v.x0 << ", " << v.x1 << ", " << v.x2 << ")";
  }
};

using MinkVec = BasicMinkVec<double>;

template <class T>
T form(const BasicMinkVec<T>& u, const BasicMinkVec<T>& v) {
  return -u.x0 * v.x0 + u.x1 * v.x1 + u.x2 * v.x2;
}

template <class T>
T max_abs(const BasicMinkVec<T>& v) {
  using std::abs;
  return std::max({abs(v.x0), abs(v.x1), abs(v.x2)});
}

/// Lorentzian cross product: form(cross(u, v), w) == det[u; v; w].
template <class T>
BasicMinkVec<T> minkowski_cross(const BasicMinkVec<T>& u, const BasicMinkVec<T>& v) {
  // G applied to the Euclidean cross product.
  return {-(u.x1 * v.x2 - u.x2 * v.x1), u.x2 * v.x0 - u.x0 * v.x2, u.x0 * v.x1 - u.x1 * v.x0};
}

enum class CausalType { Timelike, Spacelike, Lightlike };

template <class T>
CausalType causal_type(const BasicMinkVec<T>& v) {
  const T q = form(v, v);
  const T s = max_abs(v);
  const T tol = T(tolerance::classify) * s * s;
  if (q < -tol) return CausalType::Timelike;
  if (q > tol) return CausalType::Spacelike;
  return CausalType::Lightlike;
}

template <class T>
BasicMinkVec<T> normalize_spacelike(const BasicMinkVec<T>& v) {
  using std::sqrt;
  const T q = form(v, v);
  const T s = max_abs(v);
  if (!(q > T(tolerance::classify) * s * s) || s == T(0)) {
    throw Error(ErrorCode::NotSpacelike, "vector is not spacelike");
  }
  return v / sqrt(q);
}

template <class T>
bool on_hyperboloid(const BasicMinkVec<T>& p, double tol = tolerance::unit) {
  using std::abs;
  return p.x0 > T(0) && abs(form(p, p) + T(1)) <= T(tol) * std::max(T(1), p.x0 * p.x0);
}

/// Point of the hyperboloid at distance `s` from (1,0,0) in the direction
/// (cos phi, sin phi) of the tangent plane there.
template <class T>
BasicMinkVec<T> hyperboloid_point(const T& s, const T& phi) {
  using std::cos;
  using std::cosh;
  using std::sin;
  using std::sinh;
  return {cosh(s), sinh(s) * cos(phi), sinh(s) * sin(phi)};
}

/// True when the geodesic dual to the unit spacelike `u` separates the
/// hyperboloid points p and q. An endpoint on that geodesic is an error, not a
/// tie: callers are expected to move the base point.
template <class T>
bool separates(const BasicMinkVec<T>& u, const BasicMinkVec<T>& p, const BasicMinkVec<T>& q) {
  using std::abs;
  const T fp = form(u, p);
  const T fq = form(u, q);
  const T su = max_abs(u);
  if (abs(fp) < T(tolerance::classify) * su * max_abs(p) ||
      abs(fq) < T(tolerance::classify) * su * max_abs(q)) {
    throw Error(ErrorCode::Degenerate, "segment endpoint lies on the dual geodesic");
  }
  return (fp < T(0)) != (fq < T(0));
}

}  // namespace mlsum
