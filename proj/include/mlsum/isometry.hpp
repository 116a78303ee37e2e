#pragma once

// The identity component of SO(2,1) acting on the hyperboloid model.

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

#include "mlsum/error.hpp"
#include "mlsum/minkowski.hpp"

namespace mlsum {

namespace tolerance {
inline constexpr double ortho = 1e-9;
inline constexpr double trace = 1e-9;
inline constexpr double axis = 1e-9;
}  // namespace tolerance

template <class T>
class BasicIsometry {
 public:
  using Rows = std::array<std::array<T, 3>, 3>;

  BasicIsometry() : m_{{{T(1), T(0), T(0)}, {T(0), T(1), T(0)}, {T(0), T(0), T(1)}}} {}
  explicit BasicIsometry(const Rows& rows) : m_(rows) {}

  static BasicIsometry identity() { return BasicIsometry(); }

  const T& operator()(int i, int j) const { return m_[i][j]; }
  T& operator()(int i, int j) { return m_[i][j]; }
  const Rows& rows() const { return m_; }

  BasicIsometry operator*(const BasicIsometry& o) const {
    BasicIsometry r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        r.m_[i][j] = m_[i][0] * o.m_[0][j] + m_[i][1] * o.m_[1][j] + m_[i][2] * o.m_[2][j];
      }
    }
    return r;
  }

  BasicMinkVec<T> operator*(const BasicMinkVec<T>& v) const {
    return {m_[0][0] * v.x0 + m_[0][1] * v.x1 + m_[0][2] * v.x2,
            m_[1][0] * v.x0 + m_[1][1] * v.x1 + m_[1][2] * v.x2,
            m_[2][0] * v.x0 + m_[2][1] * v.x1 + m_[2][2] * v.x2};
  }

  /// G m^T G; exact for elements of O(2,1).
  BasicIsometry inverse() const {
    BasicIsometry r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const bool flip = (i == 0) != (j == 0);
        r.m_[i][j] = flip ? -m_[j][i] : m_[j][i];
      }
    }
    return r;
  }

  T trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

  T determinant() const {
    return m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1]) -
           m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0]) +
           m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
  }

  T max_abs_entry() const {
    using std::abs;
    T s(0);
    for (const auto& row : m_) {
      for (const auto& x : row) s = std::max(s, T(abs(x)));
    }
    return s;
  }

  /// max |(m^T G m - G)_ij|, relative to the squared entry scale.
  T orthogonality_defect() const {
    using std::abs;
    T worst(0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        T acc = -m_[0][i] * m_[0][j] + m_[1][i] * m_[1][j] + m_[2][i] * m_[2][j];
        const T g = (i == j) ? (i == 0 ? T(-1) : T(1)) : T(0);
        worst = std::max(worst, T(abs(acc - g)));
      }
    }
    const T s = std::max(T(1), max_abs_entry());
    return worst / (s * s);
  }

  /// Gram-Schmidt of the columns against the Minkowski form.
  BasicIsometry reorthonormalized() const {
    using std::sqrt;
    BasicMinkVec<T> c[3];
    for (int j = 0; j < 3; ++j) c[j] = {m_[0][j], m_[1][j], m_[2][j]};
    c[0] = c[0] / sqrt(-form(c[0], c[0]));
    c[1] = c[1] + form(c[1], c[0]) * c[0];
    c[1] = c[1] / sqrt(form(c[1], c[1]));
    c[2] = c[2] + form(c[2], c[0]) * c[0] - form(c[2], c[1]) * c[1];
    c[2] = c[2] / sqrt(form(c[2], c[2]));
    BasicIsometry r;
    for (int j = 0; j < 3; ++j) {
      r.m_[0][j] = c[j].x0;
      r.m_[1][j] = c[j].x1;
      r.m_[2][j] = c[j].x2;
    }
    return r;
  }

  bool is_valid(double tol = tolerance::ortho) const {
    using std::abs;
    return orthogonality_defect() <= T(tol) && abs(determinant() - T(1)) <= T(tol) * max_abs_entry() &&
           m_[0][0] > T(0);
  }

  template <class U>
  BasicIsometry<U> cast() const {
    typename BasicIsometry<U>::Rows r;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) r[i][j] = static_cast<U>(m_[i][j]);
    }
    return BasicIsometry<U>(r);
  }

  friend bool operator==(const BasicIsometry& a, const BasicIsometry& b) { return a.m_ == b.m_; }

  friend std::ostream& operator<<(std::ostream& os, const BasicIsometry& g) {
    os << "[";
    for (int i = 0; i < 3; ++i) {
      os << (i ? "; " : "") << g.m_[i][0] << ", " << g.m_[i][1] << ", " << g.m_[i][2];
    }
    return os << "]";
  }

 private:
  Rows m_;
};

using Isometry = BasicIsometry<double>;

/// Translation by `l` along the geodesic {x2 = 0}: the matrix M(l).
template <class T>
BasicIsometry<T> boost(const T& l) {
  using std::cosh;
  using std::isfinite;
  using std::sinh;
  const T ch = cosh(l);
  const T sh = sinh(l);
  if (!isfinite(ch) || !isfinite(sh)) throw Error(ErrorCode::Overflow, "cosh(l) overflows");
  return BasicIsometry<T>({{{ch, sh, T(0)}, {sh, ch, T(0)}, {T(0), T(0), T(1)}}});
}

/// Rotation R_theta about (1,0,0).
template <class T>
BasicIsometry<T> rotation(const T& theta) {
  using std::cos;
  using std::sin;
  const T c = cos(theta);
  const T s = sin(theta);
  return BasicIsometry<T>({{{T(1), T(0), T(0)}, {T(0), c, -s}, {T(0), s, c}}});
}

template <class T>
BasicIsometry<T> conjugate(const BasicIsometry<T>& by, const BasicIsometry<T>& g) {
  return by * g * by.inverse();
}

/// h^-1 g^-1 h g; the boundary element alpha = commutator(gamma, delta).
template <class T>
BasicIsometry<T> commutator(const BasicIsometry<T>& g, const BasicIsometry<T>& h) {
  return h.inverse() * g.inverse() * h * g;
}

enum class IsometryType { Hyperbolic, Parabolic, Elliptic, Identity };

/// Trace trichotomy: tr > 3 hyperbolic, tr < 3 elliptic, tr = 3 parabolic or
/// the identity. Near 3 is reported as it is and never rounded either way.
template <class T>
IsometryType classify(const BasicIsometry<T>& g) {
  using std::abs;
  const T tr = g.trace();
  const T tol = T(tolerance::trace) * std::max(T(1), T(abs(tr)));
  if (tr - T(3) > tol) return IsometryType::Hyperbolic;
  if (tr - T(3) < -tol) return IsometryType::Elliptic;
  T off(0);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) off = std::max(off, T(abs(g(i, j) - (i == j ? T(1) : T(0)))));
  }
  return off <= tol ? IsometryType::Identity : IsometryType::Parabolic;
}

/// Unit spacelike vector x0(g) dual to the axis of g, oriented so that
/// det[v-, v+, x0] > 0 for the repulsive/attractive null eigenvectors.
///
/// g = exp(l X) with G X = [x0]_x, so the G-skew part of g - g^-1 = 2 sh(l) X
/// gives x0 directly; axis(M(l)) = (0,0,1).
template <class T>
BasicMinkVec<T> axis(const BasicIsometry<T>& g) {
  if (classify(g) != IsometryType::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "axis of a non-hyperbolic isometry");
  }
  const BasicIsometry<T> gi = g.inverse();
  // (G (g - g^-1))_{ij} = s_i (g - g^-1)_{ij} with s = (-1, 1, 1).
  const T s21 = g(2, 1) - gi(2, 1);
  const T s02 = -(g(0, 2) - gi(0, 2));
  const T s10 = g(1, 0) - gi(1, 0);
  return normalize_spacelike(BasicMinkVec<T>{s21, s02, s10});
}

template <class T>
T translation_length(const BasicIsometry<T>& g) {
  using std::acosh;
  if (classify(g) != IsometryType::Hyperbolic) {
    throw Error(ErrorCode::NotHyperbolic, "translation length of a non-hyperbolic isometry");
  }
  return acosh((g.trace() - T(1)) / T(2));
}

/// Angle in [0, pi) between the oriented axes of two hyperbolic isometries
/// whose axes cross. Uses atan2 of |u x v| and <u,v> so tiny angles keep
/// their relative precision.
template <class T>
T crossing_angle(const BasicMinkVec<T>& u, const BasicMinkVec<T>& v) {
  using std::atan2;
  using std::sqrt;
  const T s = form(u, v);
  const BasicMinkVec<T> w = minkowski_cross(u, v);
  const T sin2 = -form(w, w);
  if (!(sin2 > T(0))) throw Error(ErrorCode::Degenerate, "axes do not cross");
  return atan2(sqrt(sin2), s);
}

template <class T>
T crossing_angle(const BasicIsometry<T>& g, const BasicIsometry<T>& h) {
  return crossing_angle(axis(g), axis(h));
}

enum class AxesKind { Crossing, Disjoint, Asymptotic, Equal };

template <class T>
struct AxesRelation {
  AxesKind kind;
  T angle;   // meaningful for Crossing only
  T cosine;  // <x0(g), x0(h)>
};

template <class T>
AxesRelation<T> axes_relation(const BasicIsometry<T>& g, const BasicIsometry<T>& h) {
  using std::abs;
  using std::acos;
  const BasicMinkVec<T> u = axis(g);
  const BasicMinkVec<T> v = axis(h);
  const T s = form(u, v);
  const T tol(tolerance::axis);
  if (abs(s) < T(1) - tol) return {AxesKind::Crossing, acos(s), s};
  if (abs(s) > T(1) + tol) return {AxesKind::Disjoint, T(0), s};
  const T diff = std::min(max_abs(u - v), max_abs(u + v)) / std::max(T(1), max_abs(u));
  using std::sqrt;
  if (diff <= sqrt(tol)) return {AxesKind::Equal, T(0), s};
  return {AxesKind::Asymptotic, T(0), s};
}

}  // namespace mlsum
