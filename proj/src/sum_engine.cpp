#include "mlsum/sum_engine.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace mlsum {

using HighVec = BasicMinkVec<HighReal>;
using HighIso = BasicIsometry<HighReal>;

const char* to_string(Branch b) {
  switch (b) {
    case Branch::DropDelta: return "DropDelta";
    case Branch::Collapse: return "Collapse";
    case Branch::SwapIn: return "SwapIn";
    case Branch::KeepGamma: return "KeepGamma";
  }
  return "?";
}

const char* to_string(StopKind k) {
  switch (k) {
    case StopKind::TerminatedExact: return "TerminatedExact";
    case StopKind::MaxIterations: return "MaxIterations";
    case StopKind::Overflow: return "Overflow";
    case StopKind::NumericalBreakdown: return "NumericalBreakdown";
  }
  return "?";
}

GeneratorPair<HighReal> working_pair_high(const TorusConfig& cfg) {
  const HighReal first(cfg.swapped ? cfg.m : cfg.l);
  const HighReal second(cfg.swapped ? cfg.l : cfg.m);
  return {boost(first), conjugate(rotation(HighReal(cfg.theta)), boost(second))};
}

EngineState initial_state(const TorusConfig& cfg) {
  const GeneratorPair<HighReal> pair = working_pair_high(cfg);
  EngineState s;
  s.gamma = pair.gamma;
  s.delta = pair.delta;
  s.c = HighReal(cfg.weight_gamma);
  s.d = HighReal(cfg.weight_delta);
  return s;
}

namespace {

MinkVec lower(const HighVec& v) { return {to_double(v.x0), to_double(v.x1), to_double(v.x2)}; }

HighReal high_length(const HighIso& g) { return translation_length(g); }

}  // namespace

StepResult recursion_step(const EngineState& s, const HighReal& weight_tol) {
  if (!(s.d > weight_tol)) throw Error(ErrorCode::DegenerateWeights, "recursion step needs d_k > 0");
  const HighIso& g = s.gamma;
  const HighIso& h = s.delta;
  const HighReal r = ratio(g, h);
  const HighReal rest = s.c - r * s.d;
  const PropSolution<HighReal> sol = prop_solve(g, h, r * s.d, s.d);

  StepResult out;
  out.r = r;
  out.step_a = sol.a;
  out.step_b = sol.b;

  StepState& rec = out.record;
  rec.k = s.k;
  rec.gamma_word = s.gamma_word;
  rec.delta_word = s.delta_word;
  rec.a_k = to_double(s.a);
  rec.c_k = to_double(s.c);
  rec.d_k = to_double(s.d);
  rec.r_k = to_double(r);
  const HighReal theta = crossing_angle(g, h);
  rec.theta_k = to_double(theta);
  rec.log_theta_k = to_double(log(theta));
  rec.len_gamma = to_double(high_length(g));
  rec.len_delta = to_double(high_length(h));
  rec.residual_k = to_double(sol.residual);
  rec.step_a = to_double(sol.a);
  rec.log_step_a = to_double(log(sol.a));
  rec.step_b = to_double(sol.b);
  rec.axis_gamma = lower(axis(g));
  rec.axis_delta = lower(axis(h));

  EngineState& next = out.next;
  next.k = s.k + 1;
  next.a = s.a + sol.a;
  const HighIso gh = g * h;
  const Word gh_word = s.gamma_word * s.delta_word;
  const HighReal zero(0);

  if (sol.b <= weight_tol) {
    rec.branch = Branch::DropDelta;
    next.gamma_word = s.gamma_word;
    next.delta_word = s.delta_word;
    next.gamma = g;
    next.delta = h;
    next.c = rest > zero ? rest : zero;
    next.d = zero;
    out.terminal = true;
  } else if (rest <= weight_tol) {
    rec.branch = Branch::Collapse;
    next.gamma_word = gh_word;
    next.delta_word = s.gamma_word;
    next.gamma = gh;
    next.delta = g;
    next.c = sol.b;
    next.d = zero;
    out.terminal = true;
  } else if (sol.b / rest >= ratio(gh, g)) {
    rec.branch = Branch::SwapIn;
    next.gamma_word = gh_word;
    next.delta_word = s.gamma_word;
    next.gamma = gh;
    next.delta = g;
    next.c = sol.b;
    next.d = rest;
  } else {
    rec.branch = Branch::KeepGamma;
    next.gamma_word = s.gamma_word;
    next.delta_word = gh_word;
    next.gamma = g;
    next.delta = gh;
    next.c = rest;
    next.d = sol.b;
  }
  return out;
}

namespace {

Tail make_tail(const EngineState& s) {
  Tail t;
  t.a = to_double(s.a);
  t.c = to_double(s.c);
  t.d = to_double(s.d);
  t.gamma_word = s.gamma_word;
  t.delta_word = s.delta_word;
  t.len_gamma = to_double(high_length(s.gamma));
  t.len_delta = to_double(high_length(s.delta));
  return t;
}

}  // namespace

SumDecomposition run_sum(const TorusConfig& cfg, const EngineOptions& opt) {
  using boost::multiprecision::abs;
  SumDecomposition dec;
  EngineState state = initial_state(cfg);
  const HighReal tr_alpha = commutator(state.gamma, state.delta).trace();
  dec.alpha_trace = to_double(tr_alpha);
  const HighReal tw = HighReal(opt.weight_tolerance) * HighReal(cfg.c + cfg.d);
  std::optional<HighReal> prev_theta;

  auto breakdown = [&](int k, std::string detail) {
    dec.stop = {StopKind::NumericalBreakdown, k, std::move(detail)};
    dec.tail = make_tail(state);
  };

  for (int k = 0;; ++k) {
    if (!(state.d > tw)) {
      dec.stop = {StopKind::TerminatedExact, k, ""};
      if (state.a > 0) dec.components.push_back({dec.alpha_word, to_double(state.a)});
      if (state.c > tw) dec.components.push_back({state.gamma_word, to_double(state.c)});
      break;
    }
    if (k >= opt.max_iter) {
      dec.stop = {StopKind::MaxIterations, k, ""};
      dec.tail = make_tail(state);
      break;
    }

    const HighReal theta = crossing_angle(state.gamma, state.delta);
    const HighReal dev = abs(commutator(state.gamma, state.delta).trace() / tr_alpha - 1);
    StepResult step;
    try {
      step = recursion_step(state, tw);
    } catch (const Error& e) {
      breakdown(k, e.what());
      break;
    }
    step.record.trace_dev = to_double(dev);
    dec.trace.push_back(step.record);

    if (dev > HighReal(tolerance::commutator_trace)) {
      breakdown(k, "commutator trace drift " + std::to_string(step.record.trace_dev));
      break;
    }
    if (state.c - step.r * state.d < -tw) {
      breakdown(k, "ratio condition c_k >= r_k d_k violated");
      break;
    }
    if (prev_theta && !(theta < *prev_theta)) {
      breakdown(k, std::string(to_string(ErrorCode::AngleCollapse)) + ": crossing angle did not decrease");
      break;
    }
    prev_theta = theta;
    state = std::move(step.next);

    if (!step.terminal) {
      const double len = std::max(to_double(high_length(state.gamma)), to_double(high_length(state.delta)));
      if (len > opt.length_guard) {
        dec.stop = {StopKind::Overflow, k + 1, "translation length " + std::to_string(len) + " exceeds guard"};
        dec.tail = make_tail(state);
        break;
      }
    }
  }
  return dec;
}

namespace {

using Block = std::array<std::array<HighReal, 3>, 3>;

Block block_of(const HighIso& g) { return g.rows(); }

Block identity_block() { return HighIso().rows(); }

Block zero_block() {
  Block z;
  for (auto& row : z) row.fill(HighReal(0));
  return z;
}

Block mul(const Block& a, const Block& b) {
  Block r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  }
  return r;
}

Block add(const Block& a, const Block& b) {
  Block r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = a[i][j] + b[i][j];
  }
  return r;
}

Block neg(const Block& a) {
  Block r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r[i][j] = -a[i][j];
  }
  return r;
}

HighVec apply(const Block& a, const HighVec& v) {
  return {a[0][0] * v.x0 + a[0][1] * v.x1 + a[0][2] * v.x2, a[1][0] * v.x0 + a[1][1] * v.x1 + a[1][2] * v.x2,
          a[2][0] * v.x0 + a[2][1] * v.x1 + a[2][2] * v.x2};
}

// Maps generator values of a cocycle on the current pair to its values on the
// original pair: [t11 t12; t21 t22].
struct Transport {
  Block t11 = identity_block();
  Block t12 = zero_block();
  Block t21 = zero_block();
  Block t22 = identity_block();

  BasicGeneratorCocycle<HighReal> operator()(const BasicGeneratorCocycle<HighReal>& c) const {
    return {apply(t11, c.on_gamma) + apply(t12, c.on_delta), apply(t21, c.on_gamma) + apply(t22, c.on_delta)};
  }

  // this * [s11 s12; s21 s22]
  void compose(const Block& s11, const Block& s12, const Block& s21, const Block& s22) {
    Transport n;
    n.t11 = add(mul(t11, s11), mul(t12, s21));
    n.t12 = add(mul(t11, s12), mul(t12, s22));
    n.t21 = add(mul(t21, s11), mul(t22, s21));
    n.t22 = add(mul(t21, s12), mul(t22, s22));
    *this = std::move(n);
  }
};

}  // namespace

Verification verify_decomposition(const SumDecomposition& dec, const TorusConfig& cfg, int upto,
                                  const EngineOptions& opt) {
  Verification out;
  const int n = upto < 0 ? static_cast<int>(dec.trace.size()) : std::min(upto, static_cast<int>(dec.trace.size()));
  EngineState state = initial_state(cfg);
  const HighReal tw = HighReal(opt.weight_tolerance) * HighReal(cfg.c + cfg.d);
  Transport transport;
  const HighVec zero{HighReal(0), HighReal(0), HighReal(0)};
  BasicGeneratorCocycle<HighReal> total{zero, zero};

  for (int i = 0; i < n; ++i) {
    StepResult step;
    try {
      step = recursion_step(state, tw);
    } catch (const Error&) {
      out.replay_matches = false;
      break;
    }
    const StepState& rec = dec.trace[i];
    if (step.record.branch != rec.branch || step.record.gamma_word != rec.gamma_word ||
        step.record.delta_word != rec.delta_word) {
      out.replay_matches = false;
    }

    const GeneratorPair<HighReal> pair{state.gamma, state.delta};
    const BasicGeneratorCocycle<HighReal> lhs =
        (step.r * state.d) * curve_cocycle_table(pair, CurveKind::C) + state.d * curve_cocycle_table(pair, CurveKind::D);
    const BasicGeneratorCocycle<HighReal> rhs = step.step_a * curve_cocycle_table(pair, CurveKind::Alpha) +
                                                step.step_b * curve_cocycle_table(pair, CurveKind::DeltaGamma);
    const BasicGeneratorCocycle<HighReal> defect = transport(lhs - rhs);
    out.per_step.push_back(to_double(defect.max_abs()));
    total = total + defect;

    const Block x = block_of(state.gamma.inverse());
    if (step.record.branch == Branch::SwapIn) {
      transport.compose(zero_block(), identity_block(), x, neg(x));
    } else if (step.record.branch == Branch::KeepGamma) {
      transport.compose(identity_block(), zero_block(), neg(x), x);
    }
    state = std::move(step.next);
  }
  out.total = to_double(total.max_abs());
  return out;
}

std::vector<InvariantCheck> invariant_summary(const SumDecomposition& dec, const TorusConfig& cfg,
                                              const EngineOptions& opt) {
  std::vector<InvariantCheck> out;
  const auto& tr = dec.trace;
  const double tw = opt.weight_tolerance * (cfg.c + cfg.d);

  {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < tr.size(); ++i) worst = std::max(worst, tr[i].log_theta_k - tr[i - 1].log_theta_k);
    out.push_back({"angle_strictly_decreasing", tr.size() < 2 || worst < 0, tr.size() < 2 ? 0.0 : worst});
  }
  {
    double worst = std::numeric_limits<double>::infinity();
    for (const StepState& s : tr) worst = std::min(worst, s.log_step_a);
    out.push_back({"alpha_weight_increments_positive", tr.empty() || std::isfinite(worst), tr.empty() ? 0.0 : worst});
  }
  {
    double worst = 0;
    for (const StepState& s : tr) worst = std::max(worst, s.residual_k);
    out.push_back({"step_residual", worst <= 1e-9, worst});
  }
  {
    double worst = std::numeric_limits<double>::infinity();
    for (const StepState& s : tr) worst = std::min(worst, s.c_k - s.r_k * s.d_k);
    const bool ok = tr.empty() || worst >= -tw * (1 + 1e-6);
    out.push_back({"ratio_condition", ok, tr.empty() ? 0.0 : worst});
  }
  {
    double worst = 0;
    for (const StepState& s : tr) worst = std::max(worst, s.trace_dev);
    out.push_back({"commutator_trace", worst <= tolerance::commutator_trace, worst});
  }
  {
    const double bound = std::max(cfg.c, cfg.d);
    double worst = 0;
    for (const StepState& s : tr) worst = std::max({worst, s.c_k / bound, s.d_k / bound});
    out.push_back({"weight_bound", worst <= 1 + 1e-12, worst});
  }
  {
    double worst = std::numeric_limits<double>::infinity();
    for (const StepState& s : tr) worst = std::min({worst, s.c_k, s.d_k, s.step_b});
    out.push_back({"weights_nonnegative", tr.empty() || worst >= -tw, tr.empty() ? 0.0 : worst});
  }
  {
    bool ok = true;
    double last = 0;
    if (dec.stop.kind == StopKind::TerminatedExact) {
      last = 0;
    } else if (dec.tail) {
      last = dec.tail->d;
      ok = dec.stop.kind == StopKind::Overflow || last < 1e-6;
    }
    if (dec.stop.kind == StopKind::NumericalBreakdown) ok = false;
    out.push_back({"delta_weight_decay", ok, last});
  }
  return out;
}

}  // namespace mlsum
