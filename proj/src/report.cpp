#include "mlsum/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace mlsum {

using nlohmann::json;

RunReport make_report(const TorusConfig& cfg, const EngineOptions& opt, int oracle_bound) {
  RunReport r;
  r.l = cfg.l;
  r.m = cfg.m;
  r.theta = cfg.theta;
  r.c = cfg.c;
  r.d = cfg.d;
  r.tol = opt.weight_tolerance;
  r.max_iter = opt.max_iter;
  r.swapped = cfg.swapped;
  r.ratio = cfg.ratio;
  r.gamma_axis = axis(cfg.gamma);
  r.delta_axis = axis(cfg.delta);
  r.alpha_axis = axis(cfg.alpha);
  r.decomposition = run_sum(cfg, opt);
  const Verification v = verify_decomposition(r.decomposition, cfg, -1, opt);
  r.verification = v.total;
  r.verification_per_step = v.per_step;
  r.invariants = invariant_summary(r.decomposition, cfg, opt);
  r.invariants.push_back({"replay_matches", v.replay_matches, 0.0});

  if (oracle_bound > 0) {
    OracleCheck oc;
    oc.word_bound = oracle_bound;
    oc.p0 = base_point(cfg, oracle_bound);
    const std::vector<WeightedCurve> input{{Word("g"), cfg.weight_gamma}, {Word("d"), cfg.weight_delta}};
    bool unstable = false;
    oc.input = oracle_cocycle(input, cfg, oracle_bound, oc.p0, &unstable);
    oc.unstable = unstable;
    oc.input_table = cfg.weight_gamma * curve_cocycle_table(cfg, CurveKind::C) +
                     cfg.weight_delta * curve_cocycle_table(cfg, CurveKind::D);
    oc.table_defect = (oc.input - oc.input_table).max_abs();
    if (r.decomposition.stop.kind == StopKind::TerminatedExact) {
      oc.output = oracle_cocycle(r.decomposition.components, cfg, oracle_bound, oc.p0, &unstable);
      oc.unstable = oc.unstable || unstable;
      oc.sum_defect = (*oc.output - oc.input).max_abs();
    }
    r.oracle = oc;
  }
  return r;
}

namespace {

json vec_json(const MinkVec& v) { return json::array({v.x0, v.x1, v.x2}); }

MinkVec json_vec(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()}; }

json cocycle_json(const GeneratorCocycle& c) {
  return {{"on_gamma", vec_json(c.on_gamma)}, {"on_delta", vec_json(c.on_delta)}};
}

GeneratorCocycle json_cocycle(const json& j) { return {json_vec(j.at("on_gamma")), json_vec(j.at("on_delta"))}; }

template <class E>
E enum_from(const std::string& s, std::initializer_list<E> all) {
  for (E e : all) {
    if (s == to_string(e)) return e;
  }
  throw Error(ErrorCode::MalformedConfig, "unknown enumerator '" + s + "'");
}

}  // namespace

void to_json(json& j, const RunReport& r) {
  const SumDecomposition& dec = r.decomposition;
  j = json::object();
  j["version"] = r.version;
  j["params"] = {{"l", r.l}, {"m", r.m}, {"theta", r.theta}, {"c", r.c},
                 {"d", r.d}, {"tol", r.tol}, {"max_iter", r.max_iter}};
  j["config"] = {{"swapped", r.swapped},
                 {"ratio", r.ratio},
                 {"gamma_axis", vec_json(r.gamma_axis)},
                 {"delta_axis", vec_json(r.delta_axis)},
                 {"alpha_axis", vec_json(r.alpha_axis)},
                 {"alpha_trace", dec.alpha_trace},
                 {"alpha_word", dec.alpha_word.str()}};
  j["stop"] = {{"kind", to_string(dec.stop.kind)}, {"step", dec.stop.step}, {"detail", dec.stop.detail}};
  json comps = json::array();
  for (const WeightedCurve& c : dec.components) comps.push_back({{"word", c.word.str()}, {"weight", c.weight}});
  j["components"] = comps;
  if (dec.tail) {
    const Tail& t = *dec.tail;
    j["tail"] = {{"a", t.a},
                 {"c", t.c},
                 {"d", t.d},
                 {"gamma_word", t.gamma_word.str()},
                 {"delta_word", t.delta_word.str()},
                 {"len_gamma", t.len_gamma},
                 {"len_delta", t.len_delta}};
  } else {
    j["tail"] = nullptr;
  }
  json trace = json::array();
  for (const StepState& s : dec.trace) {
    trace.push_back({{"k", s.k},
                     {"gamma_word", s.gamma_word.str()},
                     {"delta_word", s.delta_word.str()},
                     {"a_k", s.a_k},
                     {"c_k", s.c_k},
                     {"d_k", s.d_k},
                     {"r_k", s.r_k},
                     {"theta_k", s.theta_k},
                     {"log_theta_k", s.log_theta_k},
                     {"len_gamma", s.len_gamma},
                     {"len_delta", s.len_delta},
                     {"residual_k", s.residual_k},
                     {"step_a", s.step_a},
                     {"log_step_a", s.log_step_a},
                     {"step_b", s.step_b},
                     {"branch", to_string(s.branch)},
                     {"trace_dev", s.trace_dev},
                     {"axis_gamma", vec_json(s.axis_gamma)},
                     {"axis_delta", vec_json(s.axis_delta)}});
  }
  j["trace"] = trace;
  j["verification"] = {{"total", r.verification}, {"per_step", r.verification_per_step}};
  json inv = json::array();
  for (const InvariantCheck& c : r.invariants) inv.push_back({{"name", c.name}, {"pass", c.pass}, {"worst", c.worst}});
  j["invariants"] = inv;
  if (r.oracle) {
    const OracleCheck& o = *r.oracle;
    json oj = {{"word_bound", o.word_bound},
               {"p0", vec_json(o.p0)},
               {"input", cocycle_json(o.input)},
               {"input_table", cocycle_json(o.input_table)},
               {"table_defect", o.table_defect},
               {"unstable", o.unstable}};
    oj["output"] = o.output ? cocycle_json(*o.output) : json(nullptr);
    oj["sum_defect"] = o.sum_defect ? json(*o.sum_defect) : json(nullptr);
    j["oracle"] = oj;
  } else {
    j["oracle"] = nullptr;
  }
}

void from_json(const json& j, RunReport& r) {
  r = RunReport{};
  r.version = j.at("version").get<std::string>();
  const json& p = j.at("params");
  r.l = p.at("l").get<double>();
  r.m = p.at("m").get<double>();
  r.theta = p.at("theta").get<double>();
  r.c = p.at("c").get<double>();
  r.d = p.at("d").get<double>();
  r.tol = p.at("tol").get<double>();
  r.max_iter = p.at("max_iter").get<int>();
  const json& cj = j.at("config");
  r.swapped = cj.at("swapped").get<bool>();
  r.ratio = cj.at("ratio").get<double>();
  r.gamma_axis = json_vec(cj.at("gamma_axis"));
  r.delta_axis = json_vec(cj.at("delta_axis"));
  r.alpha_axis = json_vec(cj.at("alpha_axis"));
  SumDecomposition& dec = r.decomposition;
  dec.alpha_trace = cj.at("alpha_trace").get<double>();
  dec.alpha_word = Word(cj.at("alpha_word").get<std::string>());
  const json& st = j.at("stop");
  dec.stop.kind = enum_from(st.at("kind").get<std::string>(),
                            {StopKind::TerminatedExact, StopKind::MaxIterations, StopKind::Overflow,
                             StopKind::NumericalBreakdown});
  dec.stop.step = st.at("step").get<int>();
  dec.stop.detail = st.at("detail").get<std::string>();
  for (const json& c : j.at("components")) {
    dec.components.push_back({Word(c.at("word").get<std::string>()), c.at("weight").get<double>()});
  }
  if (!j.at("tail").is_null()) {
    const json& t = j.at("tail");
    dec.tail = Tail{t.at("a").get<double>(),
                    t.at("c").get<double>(),
                    t.at("d").get<double>(),
                    Word(t.at("gamma_word").get<std::string>()),
                    Word(t.at("delta_word").get<std::string>()),
                    t.at("len_gamma").get<double>(),
                    t.at("len_delta").get<double>()};
  }
  for (const json& s : j.at("trace")) {
    StepState x;
    x.k = s.at("k").get<int>();
    x.gamma_word = Word(s.at("gamma_word").get<std::string>());
    x.delta_word = Word(s.at("delta_word").get<std::string>());
    x.a_k = s.at("a_k").get<double>();
    x.c_k = s.at("c_k").get<double>();
    x.d_k = s.at("d_k").get<double>();
    x.r_k = s.at("r_k").get<double>();
    x.theta_k = s.at("theta_k").get<double>();
    x.log_theta_k = s.at("log_theta_k").get<double>();
    x.len_gamma = s.at("len_gamma").get<double>();
    x.len_delta = s.at("len_delta").get<double>();
    x.residual_k = s.at("residual_k").get<double>();
    x.step_a = s.at("step_a").get<double>();
    x.log_step_a = s.at("log_step_a").get<double>();
    x.step_b = s.at("step_b").get<double>();
    x.branch = enum_from(s.at("branch").get<std::string>(),
                         {Branch::DropDelta, Branch::Collapse, Branch::SwapIn, Branch::KeepGamma});
    x.trace_dev = s.at("trace_dev").get<double>();
    x.axis_gamma = json_vec(s.at("axis_gamma"));
    x.axis_delta = json_vec(s.at("axis_delta"));
    dec.trace.push_back(x);
  }
  r.verification = j.at("verification").at("total").get<double>();
  r.verification_per_step = j.at("verification").at("per_step").get<std::vector<double>>();
  for (const json& c : j.at("invariants")) {
    r.invariants.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(), c.at("worst").get<double>()});
  }
  if (!j.at("oracle").is_null()) {
    const json& o = j.at("oracle");
    OracleCheck oc;
    oc.word_bound = o.at("word_bound").get<int>();
    oc.p0 = json_vec(o.at("p0"));
    oc.input = json_cocycle(o.at("input"));
    oc.input_table = json_cocycle(o.at("input_table"));
    oc.table_defect = o.at("table_defect").get<double>();
    oc.unstable = o.at("unstable").get<bool>();
    if (!o.at("output").is_null()) oc.output = json_cocycle(o.at("output"));
    if (!o.at("sum_defect").is_null()) oc.sum_defect = o.at("sum_defect").get<double>();
    r.oracle = oc;
  }
}

std::string report_json(const RunReport& r) {
  json j = r;
  return j.dump(2) + "\n";
}

namespace {

constexpr double kSize = 640;
constexpr double kRadius = 300;
constexpr double kCenter = kSize / 2;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct ScreenPoint {
  double x;
  double y;
};

ScreenPoint to_screen(double u, double v) { return {kCenter + kRadius * u, kCenter - kRadius * v}; }

// Geodesic {p : form(n, p) = 0} for a unit spacelike n, drawn in the disk.
std::string geodesic_path(const MinkVec& n, const std::string& colour, double width) {
  const double rho = std::hypot(n.x1, n.x2);
  const double phi = std::atan2(n.x2, n.x1);
  const double spread = std::acos(std::clamp(n.x0 / rho, -1.0, 1.0));
  const ScreenPoint p1 = to_screen(std::cos(phi - spread), std::sin(phi - spread));
  const ScreenPoint p2 = to_screen(std::cos(phi + spread), std::sin(phi + spread));
  std::ostringstream os;
  os << "<path d=\"M " << fmt(p1.x) << " " << fmt(p1.y) << " ";
  if (std::abs(n.x0) < tolerance::axis) {
    os << "L " << fmt(p2.x) << " " << fmt(p2.y);
  } else {
    const double r = 1.0 / std::abs(n.x0);
    // The arc inside the disk passes through the point of the circle closest
    // to the origin.
    const double cu = n.x1 / n.x0;
    const double cv = n.x2 / n.x0;
    const double dist = std::hypot(cu, cv);
    const ScreenPoint q = to_screen(cu - r * cu / dist, cv - r * cv / dist);
    const double cross = (p2.x - p1.x) * (q.y - p1.y) - (p2.y - p1.y) * (q.x - p1.x);
    os << "A " << fmt(kRadius * r) << " " << fmt(kRadius * r) << " 0 0 " << (cross < 0 ? 1 : 0) << " " << fmt(p2.x)
       << " " << fmt(p2.y);
  }
  os << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
  return os.str();
}

std::string step_colour(std::size_t k, std::size_t n) {
  const double t = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0;
  const int hue = static_cast<int>(std::lround(220.0 * (1.0 - t)));
  return "hsl(" + std::to_string(hue) + ",70%,45%)";
}

}  // namespace

std::string render_svg(const RunReport& r) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
     << "<circle cx=\"" << fmt(kCenter) << "\" cy=\"" << fmt(kCenter) << "\" r=\"" << fmt(kRadius)
     << "\" fill=\"#fafafa\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  const auto& trace = r.decomposition.trace;
  os << "<g id=\"steps\">\n";
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const std::string colour = step_colour(k, trace.size());
    os << geodesic_path(trace[k].axis_gamma, colour, 1.0) << geodesic_path(trace[k].axis_delta, colour, 1.0);
  }
  os << "</g>\n<g id=\"generators\">\n"
     << geodesic_path(r.gamma_axis, "#1f4e9c", 2.0) << geodesic_path(r.delta_axis, "#2e8b57", 2.0) << "</g>\n"
     << "<g id=\"boundary\">\n"
     << geodesic_path(r.alpha_axis, "#b22222", 2.5) << "</g>\n"
     << "</svg>\n";
  return os.str();
}

}  // namespace mlsum
