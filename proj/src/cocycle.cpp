#include "mlsum/cocycle.hpp"

#include <Eigen/Dense>

namespace mlsum {

namespace tolerance {
inline constexpr double cls = 1e-8;
}

MinkVec evaluate(const GeneratorCocycle& tau, const Word& w, const TorusConfig& cfg) {
  return evaluate(tau, w, pair_of(cfg));
}

Word curve_word(CurveKind kind) {
  switch (kind) {
    case CurveKind::C: return Word("g");
    case CurveKind::D: return Word("d");
    case CurveKind::Alpha: return Word("DGdg");
    case CurveKind::DeltaGamma: return Word("dg");
  }
  return Word();
}

const char* to_string(CurveKind kind) {
  switch (kind) {
    case CurveKind::C: return "C";
    case CurveKind::D: return "D";
    case CurveKind::Alpha: return "Alpha";
    case CurveKind::DeltaGamma: return "DeltaGamma";
  }
  return "?";
}

GeneratorCocycle curve_cocycle_table(const TorusConfig& cfg, CurveKind kind) {
  return curve_cocycle_table(pair_of(cfg), kind);
}

ClassDifference class_difference(const GeneratorCocycle& t1, const GeneratorCocycle& t2,
                                 const GeneratorPair<double>& pair) {
  Eigen::Matrix<double, 6, 3> a;
  Eigen::Matrix<double, 6, 1> rhs;
  const GeneratorCocycle diff = t2 - t1;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      a(i, j) = pair.gamma(i, j) - (i == j ? 1.0 : 0.0);
      a(i + 3, j) = pair.delta(i, j) - (i == j ? 1.0 : 0.0);
    }
    rhs(i) = diff.on_gamma[i];
    rhs(i + 3) = diff.on_delta[i];
  }
  const Eigen::Vector3d w = a.colPivHouseholderQr().solve(rhs);
  const double residual = (a * w - rhs).cwiseAbs().maxCoeff();
  const double scale =
      std::max({t1.max_abs(), t2.max_abs(), a.cwiseAbs().maxCoeff() * w.cwiseAbs().maxCoeff()});
  ClassDifference out;
  out.w = {w(0), w(1), w(2)};
  out.residual = residual;
  out.coboundary = residual <= tolerance::cls * scale;
  return out;
}

ClassDifference class_difference(const GeneratorCocycle& t1, const GeneratorCocycle& t2, const TorusConfig& cfg) {
  return class_difference(t1, t2, pair_of(cfg));
}

namespace {

Word cyclic_core(const Word& w) {
  std::string s = w.str();
  std::size_t b = 0;
  std::size_t e = s.size();
  while (e - b >= 2 && s[b] == Word::inverse_letter(s[e - 1])) {
    ++b;
    --e;
  }
  return Word(std::string_view(s).substr(b, e - b));
}

}  // namespace

OracleResult rho_segment(const WeightedCurve& curve, const MinkVec& p, const MinkVec& q,
                         const GeneratorPair<double>& pair, int word_bound) {
  const Word eta = cyclic_core(curve.word);
  if (eta.empty()) throw Error(ErrorCode::Degenerate, "trivial curve word");
  const MinkVec x = axis(pair.word_matrix(eta));
  OracleResult out;
  MinkVec sum{0, 0, 0};
  for (const Word& w : enumerate_reduced_words(word_bound)) {
    if (!is_canonical_coset_rep(w, eta)) continue;
    const MinkVec u = pair.word_matrix(w) * x;
    bool crosses = false;
    try {
      crosses = separates(u, p, q);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Degenerate) {
        throw Error(ErrorCode::BasePointOnAxis, "segment endpoint on the lift by '" + w.str() + "'");
      }
      throw;
    }
    if (!crosses) continue;
    sum += form(u, q) > 0 ? u : -u;
    ++out.crossings;
    out.longest = std::max(out.longest, static_cast<int>(w.size()));
  }
  out.value = curve.weight * sum;
  out.unstable = out.crossings > 0 && out.longest >= word_bound;
  return out;
}

OracleResult crossing_cocycle_oracle(const WeightedCurve& curve, const Word& target, const TorusConfig& cfg,
                                     int word_bound, std::optional<MinkVec> p0) {
  const MinkVec p = p0 ? *p0 : base_point(cfg, word_bound);
  const GeneratorPair<double> pair = pair_of(cfg);
  return rho_segment(curve, p, pair.word_matrix(target) * p, pair, word_bound);
}

GeneratorCocycle oracle_cocycle(const std::vector<WeightedCurve>& curves, const TorusConfig& cfg, int word_bound,
                                const MinkVec& p0, bool* unstable) {
  GeneratorCocycle out{{0, 0, 0}, {0, 0, 0}};
  bool flag = false;
  for (const WeightedCurve& c : curves) {
    const OracleResult og = crossing_cocycle_oracle(c, Word("g"), cfg, word_bound, p0);
    const OracleResult od = crossing_cocycle_oracle(c, Word("d"), cfg, word_bound, p0);
    out.on_gamma += og.value;
    out.on_delta += od.value;
    flag = flag || og.unstable || od.unstable;
  }
  if (unstable) *unstable = flag;
  return out;
}

double multicurve_length(const std::vector<WeightedCurve>& curves, const GeneratorPair<double>& pair) {
  double total = 0;
  for (const WeightedCurve& c : curves) {
    if (c.weight < 0) throw Error(ErrorCode::NegativeWeight, "negative curve weight");
    if (c.weight == 0) continue;
    total += c.weight * translation_length(pair.word_matrix(c.word));
  }
  return total;
}

}  // namespace mlsum
