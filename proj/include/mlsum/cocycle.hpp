#pragma once

// Minkowski-valued cocycles on the free group F(gamma, delta), stored by their
// values on the two generators.

#include <optional>
#include <vector>

#include "mlsum/isometry.hpp"
#include "mlsum/minkowski.hpp"
#include "mlsum/torus.hpp"
#include "mlsum/word.hpp"

namespace mlsum {

template <class T>
struct GeneratorPair {
  BasicIsometry<T> gamma;
  BasicIsometry<T> delta;

  BasicIsometry<T> letter(char c) const {
    switch (c) {
      case 'g': return gamma;
      case 'G': return gamma.inverse();
      case 'd': return delta;
      default: return delta.inverse();
    }
  }

  BasicIsometry<T> word_matrix(const Word& w) const {
    BasicIsometry<T> m;
    for (std::size_t i = 0; i < w.size(); ++i) m = m * letter(w[i]);
    return m;
  }
};

inline GeneratorPair<double> pair_of(const TorusConfig& cfg) { return {cfg.gamma, cfg.delta}; }

template <class T>
struct BasicGeneratorCocycle {
  BasicMinkVec<T> on_gamma;
  BasicMinkVec<T> on_delta;

  friend BasicGeneratorCocycle operator+(const BasicGeneratorCocycle& a, const BasicGeneratorCocycle& b) {
    return {a.on_gamma + b.on_gamma, a.on_delta + b.on_delta};
  }
  friend BasicGeneratorCocycle operator-(const BasicGeneratorCocycle& a, const BasicGeneratorCocycle& b) {
    return {a.on_gamma - b.on_gamma, a.on_delta - b.on_delta};
  }
  friend BasicGeneratorCocycle operator*(const T& s, const BasicGeneratorCocycle& a) {
    return {s * a.on_gamma, s * a.on_delta};
  }

  T max_abs() const { return std::max(mlsum::max_abs(on_gamma), mlsum::max_abs(on_delta)); }

  template <class U>
  BasicGeneratorCocycle<U> cast() const {
    return {on_gamma.template cast<U>(), on_delta.template cast<U>()};
  }
};

using GeneratorCocycle = BasicGeneratorCocycle<double>;

/// tau(x1 x2 ... xn) by tau(xy) = tau(x) + x tau(y), tau(x^-1) = -x^-1 tau(x).
template <class T>
BasicMinkVec<T> evaluate(const BasicGeneratorCocycle<T>& tau, const Word& w, const GeneratorPair<T>& pair) {
  BasicMinkVec<T> acc{T(0), T(0), T(0)};
  BasicIsometry<T> prefix;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const char c = w[i];
    const BasicIsometry<T> x = pair.letter(c);
    BasicMinkVec<T> tx;
    switch (c) {
      case 'g': tx = tau.on_gamma; break;
      case 'd': tx = tau.on_delta; break;
      case 'G': tx = -(x * tau.on_gamma); break;
      default: tx = -(x * tau.on_delta); break;
    }
    acc += prefix * tx;
    prefix = prefix * x;
  }
  return acc;
}

MinkVec evaluate(const GeneratorCocycle& tau, const Word& w, const TorusConfig& cfg);

/// The four simple curves of the torus relative to a generator pair:
/// C = gamma, D = delta, the boundary delta^-1 gamma^-1 delta gamma, and delta gamma.
enum class CurveKind { C, D, Alpha, DeltaGamma };

Word curve_word(CurveKind kind);
const char* to_string(CurveKind kind);

/// Unit-weight cocycle of the given curve, for a base point beyond the
/// boundary axis.
template <class T>
BasicGeneratorCocycle<T> curve_cocycle_table(const GeneratorPair<T>& pair, CurveKind kind) {
  const BasicMinkVec<T> zero{T(0), T(0), T(0)};
  switch (kind) {
    case CurveKind::C:
      return {zero, axis(pair.gamma)};
    case CurveKind::D:
      return {-axis(pair.delta), zero};
    case CurveKind::Alpha: {
      const BasicMinkVec<T> xa = axis(commutator(pair.gamma, pair.delta));
      return {xa - pair.gamma * xa, xa - pair.delta * xa};
    }
    case CurveKind::DeltaGamma: {
      const BasicMinkVec<T> xdg = axis(pair.delta * pair.gamma);
      return {-(pair.gamma * xdg), xdg};
    }
  }
  return {zero, zero};
}

GeneratorCocycle curve_cocycle_table(const TorusConfig& cfg, CurveKind kind);

struct WeightedCurve {
  Word word;
  double weight = 0;
};

struct ClassDifference {
  bool coboundary = false;
  MinkVec w;  // least-squares solution, meaningful when coboundary
  double residual = 0;
};

/// Is t2 - t1 of the form eta -> eta w - w?
ClassDifference class_difference(const GeneratorCocycle& t1, const GeneratorCocycle& t2,
                                 const GeneratorPair<double>& pair);
ClassDifference class_difference(const GeneratorCocycle& t1, const GeneratorCocycle& t2, const TorusConfig& cfg);

struct OracleResult {
  MinkVec value;
  int crossings = 0;
  int longest = 0;        // longest coset representative among the crossings
  bool unstable = false;  // a crossing was found at the enumeration horizon
};

/// Weighted sum of the lifts of `curve` crossing the segment [p, q], each
/// normal oriented from p towards q.
OracleResult rho_segment(const WeightedCurve& curve, const MinkVec& p, const MinkVec& q,
                         const GeneratorPair<double>& pair, int word_bound);

/// rho(p0, target p0) for the weighted curve; p0 defaults to base_point(cfg).
OracleResult crossing_cocycle_oracle(const WeightedCurve& curve, const Word& target, const TorusConfig& cfg,
                                     int word_bound = 6, std::optional<MinkVec> p0 = std::nullopt);

/// Cocycle on both generators from the oracle.
GeneratorCocycle oracle_cocycle(const std::vector<WeightedCurve>& curves, const TorusConfig& cfg, int word_bound,
                                const MinkVec& p0, bool* unstable = nullptr);

/// sum of weight * translation length.
double multicurve_length(const std::vector<WeightedCurve>& curves, const GeneratorPair<double>& pair);

}  // namespace mlsum
