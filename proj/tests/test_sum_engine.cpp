#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "mlsum/cocycle.hpp"
#include "mlsum/sum_engine.hpp"
#include "mlsum/torus.hpp"

using namespace mlsum;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

// Frozen trace of (l, m, theta, c, d) = (2, 2, 1, 1, 0.3). An independent
// 4000-bit prototype agrees with these to all printed digits.
const std::vector<double> kRegressionTheta = {
    1.0, 0.3402637540363194, 0.12321097546446735, 0.045225564592678305, 0.01663249405078473, 0.0061185004786520605,
    1.6366313678840104e-05, 5.062990069769889e-08, 1.5662599501042147e-10, 4.845299314289112e-13,
};
const std::vector<Branch> kRegressionBranches = {
    Branch::KeepGamma, Branch::KeepGamma, Branch::KeepGamma, Branch::KeepGamma, Branch::SwapIn,    Branch::KeepGamma,
    Branch::KeepGamma, Branch::KeepGamma, Branch::SwapIn,    Branch::KeepGamma, Branch::KeepGamma, Branch::KeepGamma,
    Branch::KeepGamma, Branch::KeepGamma, Branch::SwapIn,    Branch::SwapIn,    Branch::SwapIn,
};
constexpr double kRegressionAlphaWeight = 0.029197732552657115;

}  // namespace

TEST_CASE("ratio") {
  for (double l : {2.0, 3.0, 3.5}) {
    const TorusConfig cfg = build_config(l, l, kHalfPi, 1, 1);
    CHECK(ratio(cfg.gamma, cfg.delta) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const TorusConfig a = build_config(2, 2, 1.0, 1, 1);
  CHECK(ratio(a.gamma, a.delta) == doctest::Approx(1.0).epsilon(1e-12));
  // Unequal lengths: at a right angle the ratio is not 1.
  const Isometry g = lemma_gamma(1.0), h = lemma_delta(3.0, kHalfPi);
  CHECK(ratio(g, h) == doctest::Approx(1.9586986534143886).epsilon(1e-10));
  for (double t : {0.5, 1.0, 1.4}) {
    const Isometry g2 = lemma_gamma(1.5), h2 = lemma_delta(2.5, t);
    // With delta gamma in place of gamma delta.
    const MinkVec x = axis(h2 * g2);
    CHECK(form(x, axis(h2)) / form(x, axis(g2)) == doctest::Approx(ratio(g2, h2)).epsilon(1e-10));
    CHECK(ratio(h2, g2) * ratio(g2, h2) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("prop_solve") {
  SUBCASE("right angle, equal weights: no product curve") {
    const TorusConfig cfg = build_config(2, 2, kHalfPi, 1, 1);
    const PropSolution<double> s = prop_solve(cfg.gamma, cfg.delta, 1.0, 1.0);
    CHECK(std::abs(s.b) <= 1e-12);
    CHECK(s.a > 0);
    CHECK(s.residual <= 1e-9);
  }
  SUBCASE("regression value") {
    const TorusConfig cfg = build_config(2, 2, 1.0, 1, 1);
    const PropSolution<double> s = prop_solve(cfg.gamma, cfg.delta, 1.0, 1.0);
    CHECK(s.a == doctest::Approx(0.08918855849156497).epsilon(1e-10));
    CHECK(s.b == doctest::Approx(0.5731636862450782).epsilon(1e-10));
    CHECK(s.residual <= 1e-12);
  }
  SUBCASE("linearity") {
    const TorusConfig cfg = build_config(1.5, 2.5, 1.2, 1, 1);
    const double r = ratio(cfg.gamma, cfg.delta);
    const PropSolution<double> s1 = prop_solve(cfg.gamma, cfg.delta, r * 0.8, 0.8);
    const PropSolution<double> s2 = prop_solve(cfg.gamma, cfg.delta, r * 1.6, 1.6);
    CHECK(s2.a == doctest::Approx(2 * s1.a).epsilon(1e-12));
    CHECK(s2.b == doctest::Approx(2 * s1.b).epsilon(1e-12));
    CHECK(s2.residual == doctest::Approx(s1.residual).epsilon(1e-6).scale(1e-15));
  }
  SUBCASE("ratio mismatch") {
    const TorusConfig cfg = build_config(1.5, 2.5, 1.2, 1, 1);
    try {
      prop_solve(cfg.gamma, cfg.delta, 1.0, 1.0);
      FAIL("expected RatioMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::RatioMismatch);
    }
  }
  SUBCASE("the system really is solved") {
    const TorusConfig cfg = build_config(3, 1.6, 0.8, 1, 1);
    const double r = ratio(cfg.gamma, cfg.delta);
    const PropSolution<double> s = prop_solve(cfg.gamma, cfg.delta, r, 1.0);
    const GeneratorPair<double> pair = pair_of(cfg);
    const GeneratorCocycle lhs =
        r * curve_cocycle_table(pair, CurveKind::C) + 1.0 * curve_cocycle_table(pair, CurveKind::D);
    const GeneratorCocycle rhs =
        s.a * curve_cocycle_table(pair, CurveKind::Alpha) + s.b * curve_cocycle_table(pair, CurveKind::DeltaGamma);
    CHECK((lhs - rhs).max_abs() <= 1e-10);
  }
}

TEST_CASE("first step at a right angle") {
  SUBCASE("c > d keeps the first curve") {
    const TorusConfig cfg = build_config(2, 2, kHalfPi, 2, 1);
    const EngineState s0 = initial_state(cfg);
    const StepResult st = recursion_step(s0, HighReal(1e-12 * 3));
    CHECK(st.record.branch == Branch::DropDelta);
    CHECK(st.terminal);
    CHECK(to_double(st.next.d) == 0);
    CHECK(to_double(st.next.c) == doctest::Approx(1.0).epsilon(1e-12));
    const SumDecomposition dec = run_sum(cfg);
    CHECK(dec.stop.kind == StopKind::TerminatedExact);
    CHECK(dec.stop.step == 1);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].word.str() == "DGdg");
    CHECK(dec.components[0].weight > 0);
    CHECK(dec.components[1].word.str() == "g");
    CHECK(dec.components[1].weight == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("c = d leaves only the boundary") {
    const TorusConfig cfg = build_config(2, 2, kHalfPi, 1, 1);
    const SumDecomposition dec = run_sum(cfg);
    CHECK(dec.stop.kind == StopKind::TerminatedExact);
    CHECK(dec.stop.step == 1);
    REQUIRE(dec.components.size() == 1);
    CHECK(dec.components[0].word.str() == "DGdg");
    CHECK(dec.components[0].weight > 0);
  }
  SUBCASE("direct cocycle comparison") {
    const TorusConfig cfg = build_config(2, 2, kHalfPi, 2, 1);
    const SumDecomposition dec = run_sum(cfg);
    const GeneratorCocycle lhs =
        2.0 * curve_cocycle_table(cfg, CurveKind::C) + 1.0 * curve_cocycle_table(cfg, CurveKind::D);
    const GeneratorCocycle rhs = dec.components[0].weight * curve_cocycle_table(cfg, CurveKind::Alpha) +
                                 dec.components[1].weight * curve_cocycle_table(cfg, CurveKind::C);
    CHECK((lhs - rhs).max_abs() <= 1e-9);
    CHECK(verify_decomposition(dec, cfg).total <= 1e-9);
  }
}

TEST_CASE("zero weight needs no steps") {
  const TorusConfig cfg = build_config(2, 2, 1.0, 1, 0);
  const SumDecomposition dec = run_sum(cfg);
  CHECK(dec.stop.kind == StopKind::TerminatedExact);
  CHECK(dec.stop.step == 0);
  REQUIRE(dec.components.size() == 1);
  CHECK(dec.components[0].word.str() == "g");
  const Verification v = verify_decomposition(dec, cfg);
  CHECK(v.total == 0);
  CHECK(v.per_step.empty());
}

TEST_CASE("frozen regression trace") {
  const TorusConfig cfg = build_config(2, 2, 1.0, 1, 0.3);
  const SumDecomposition dec = run_sum(cfg);
  CHECK(dec.stop.kind == StopKind::Overflow);
  CHECK(dec.stop.step == 17);
  REQUIRE(dec.trace.size() == kRegressionBranches.size());
  for (std::size_t k = 0; k < kRegressionTheta.size(); ++k) {
    CHECK(dec.trace[k].theta_k == doctest::Approx(kRegressionTheta[k]).epsilon(1e-12));
  }
  for (std::size_t k = 0; k < kRegressionBranches.size(); ++k) {
    CHECK(dec.trace[k].branch == kRegressionBranches[k]);
  }
  REQUIRE(dec.tail.has_value());
  CHECK(dec.tail->a == doctest::Approx(kRegressionAlphaWeight).epsilon(1e-12));
  for (std::size_t k = 1; k < dec.trace.size(); ++k) {
    CHECK(dec.trace[k].theta_k < dec.trace[k - 1].theta_k);
    CHECK(dec.trace[k].a_k >= dec.trace[k - 1].a_k);
  }
  for (const InvariantCheck& c : invariant_summary(dec, cfg)) {
    INFO(c.name << " worst " << c.worst);
    CHECK(c.pass);
  }
}

TEST_CASE("verify_decomposition") {
  const TorusConfig cfg = build_config(2, 2, 1.0, 1, 0.3);
  const SumDecomposition dec = run_sum(cfg);
  const Verification v10 = verify_decomposition(dec, cfg, 10);
  CHECK(v10.replay_matches);
  CHECK(v10.per_step.size() == 10);
  CHECK(v10.total <= 1e-7);
  const Verification v0 = verify_decomposition(dec, cfg, 0);
  CHECK(v0.total == 0);

  // A tampered trace is detected.
  SumDecomposition bad = dec;
  bad.trace[3].branch = Branch::SwapIn;
  CHECK_FALSE(verify_decomposition(bad, cfg, 10).replay_matches);

  EngineOptions none;
  none.max_iter = 0;
  const SumDecomposition empty = run_sum(cfg, none);
  CHECK(empty.stop.kind == StopKind::MaxIterations);
  CHECK(empty.trace.empty());
  CHECK(verify_decomposition(empty, cfg).total == 0);
}

TEST_CASE("intermediate decompositions agree with the crossing oracle") {
  // (C, c) + (D, d) = (boundary, a_k) + (C_k, c_k) + (D_k, d_k) as laminations,
  // so their crossing cocycles coincide for any base point.
  for (const auto& p : std::vector<std::array<double, 5>>{{2, 2, 1.0, 1, 0.3}, {2, 2, 1.0, 0.3, 1}, {1.5, 2.5, 1.2, 1, 1}}) {
    const TorusConfig cfg = build_config(p[0], p[1], p[2], p[3], p[4]);
    const SumDecomposition dec = run_sum(cfg);
    const MinkVec p0 = base_point(cfg);
    bool unstable = false;
    const GeneratorCocycle lhs =
        oracle_cocycle({{Word("g"), cfg.weight_gamma}, {Word("d"), cfg.weight_delta}}, cfg, 6, p0, &unstable);
    CHECK_FALSE(unstable);
    for (std::size_t k = 0; k < std::min<std::size_t>(5, dec.trace.size()); ++k) {
      const StepState& s = dec.trace[k];
      const std::vector<WeightedCurve> rhs_curves{
          {dec.alpha_word, s.a_k}, {s.gamma_word, s.c_k}, {s.delta_word, s.d_k}};
      const GeneratorCocycle rhs = oracle_cocycle(rhs_curves, cfg, 6, p0, &unstable);
      INFO("l=" << p[0] << " c=" << p[3] << " step " << k);
      CHECK_FALSE(unstable);
      CHECK((lhs - rhs).max_abs() <= 1e-9);
    }
  }
}

TEST_CASE("generic runs keep every invariant") {
  const std::vector<std::array<double, 5>> runs = {
      {1.5, 2.5, 1.2, 1, 1}, {3, 1.6, 0.8, 0.4, 1.3}, {2.5, 1.8, 0.9, 2, 0.2}, {2, 2, 1.4, 1, 0.99}};
  for (const auto& p : runs) {
    const TorusConfig cfg = build_config(p[0], p[1], p[2], p[3], p[4]);
    const SumDecomposition dec = run_sum(cfg);
    INFO("l=" << p[0] << " m=" << p[1] << " theta=" << p[2] << " stop " << to_string(dec.stop.kind));
    CHECK(dec.stop.kind != StopKind::NumericalBreakdown);
    for (const InvariantCheck& c : invariant_summary(dec, cfg)) {
      INFO(c.name << " worst " << c.worst);
      CHECK(c.pass);
    }
    CHECK(verify_decomposition(dec, cfg).total <= 1e-7);
  }
}

TEST_CASE("every exact termination has a boundary component") {
  for (double c : {1.0, 1.5, 3.0}) {
    const TorusConfig cfg = build_config(2.2, 2.2, kHalfPi, c, 1);
    const SumDecomposition dec = run_sum(cfg);
    REQUIRE(dec.stop.kind == StopKind::TerminatedExact);
    REQUIRE_FALSE(dec.components.empty());
    CHECK(dec.components[0].word == dec.alpha_word);
    CHECK(dec.components[0].weight > 0);
  }
}
