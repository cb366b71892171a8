#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>

#include "tvdlab/counterexamples.hpp"
#include "tvdlab/errors.hpp"
#include "tvdlab/field_expr.hpp"
#include "tvdlab/gas_model.hpp"
#include "tvdlab/glimm.hpp"
#include "tvdlab/interactions.hpp"
#include "tvdlab/riemann.hpp"
#include "tvdlab/tvd.hpp"
#include "tvdlab/wave_curves.hpp"

#ifndef TVDLAB_VERSION
#define TVDLAB_VERSION "dev"
#endif

namespace tvdlab {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Must match the derivative sampling of the counterexample searches.
constexpr int kDerivativeSamples = 257;

std::pair<double, double> parse_pair(const std::string& text, const char* what) {
  const std::size_t comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const std::string a = text.substr(0, comma);
    const std::string b = text.substr(comma + 1);
    const double lo = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    const double hi = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw DomainError(std::string(what) + " must be two comma-separated numbers");
  }
}

State parse_state(const std::string& text) {
  const auto [xi, u] = parse_pair(text, "a state");
  return State(xi, u);
}

json state_json(const GasModel& model, const State& st) {
  const Invariants inv = model.invariants(st);
  return {{"xi", st.xi()}, {"u", st.u()}, {"tau", model.tau(st)}, {"r", inv.r}, {"s", inv.s}};
}

json wave_json(const Wave& w) {
  return {{"family", std::string(to_string(w.family()))},
          {"ratio", w.ratio()},
          {"kind", std::string(to_string(w.kind()))}};
}

json realization_json(const InteractionRealization& rz) {
  const GasModel& m = rz.model;
  return {{"kind", std::string(to_string(rz.kind))},
          {"far_left", state_json(m, rz.far_left)},
          {"incoming", {wave_json(rz.incoming[0]), wave_json(rz.incoming[1])}},
          {"middle_in", state_json(m, rz.middle_in)},
          {"outgoing", {wave_json(rz.outgoing_backward), wave_json(rz.outgoing_forward)}},
          {"middle_out", state_json(m, rz.middle_out)},
          {"far_right", state_json(m, rz.far_right)},
          {"path_residual", rz.path_residual}};
}

json changes_json(const WaveChanges& c) {
  return {{"incoming_left", c.incoming_left},
          {"incoming_right", c.incoming_right},
          {"outgoing_backward", c.outgoing_backward},
          {"outgoing_forward", c.outgoing_forward}};
}

json meta_json(const std::string& command, const json& config, std::optional<Clock::time_point> start) {
  json meta = {{"version", TVDLAB_VERSION}, {"command", command}, {"config", config}};
  if (start) {
    meta["wall_time_s"] = std::chrono::duration<double>(Clock::now() - *start).count();
  }
  return meta;
}

struct Common {
  double gamma = 0.0;
  std::string output;
};

struct PhiArgs {
  std::string family = "b";
  double from = 0.5;
  double to = 2.0;
  int points = 101;
  bool log_spacing = false;
};

struct RiemannArgs {
  std::string left;
  std::string right;
};

struct InteractArgs {
  std::string kind;
  double q1 = 1.0;
  double q2 = 1.0;
  std::string far_left = "1,0";
  std::string field;
};

struct ExpandArgs {
  std::string field = "raw:r*s";
  std::string base = "1,0";
  double dr = 1e-2;
  double ds = 1e-2;
  std::string sign_case = "iii";
  int halvings = 6;
};

struct CounterArgs {
  int which = 0;
  std::string theta;
  std::string psi;
  double lo = -1.0;
  double hi = 1.0;
  std::optional<double> M;
  std::optional<double> delta;
  std::optional<double> M_U;
  std::optional<double> N_L;
  std::optional<double> N_U;
  double epsilon = 0.5;
  unsigned threads = 1;
  int max_halvings = 200;
};

struct GlimmArgs {
  std::string ic;
  std::size_t cells = 200;
  double tmax = 0.0;
  std::string field = "split:theta=v;psi=v";
  std::string seq = "vdc";
  std::uint64_t seed = 0;
  double cfl = 0.9;
  std::string domain;
  std::size_t every = 1;
  std::size_t max_steps = 1000000;
  bool final_grid = false;
};

int cmd_phi(const Common& c, const PhiArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  if (a.points < 2) throw DomainError("--points must be at least 2");
  if (!(a.from > 0.0 && a.to > a.from)) throw DomainError("need 0 < --from < --to");
  const GasModel model(c.gamma);
  const Family fam = a.family == "b" ? Family::Backward : Family::Forward;
  std::vector<double> xs(static_cast<std::size_t>(a.points));
  for (int i = 0; i < a.points; ++i) {
    const double t = static_cast<double>(i) / (a.points - 1);
    xs[i] = a.log_spacing ? std::exp(std::log(a.from) + t * (std::log(a.to) - std::log(a.from)))
                          : a.from + t * (a.to - a.from);
  }
  std::ostringstream body;
  body << std::setprecision(17) << "x,phi,dphi\n";
  for (double x : xs) {
    body << x << ',' << phi(model, fam, x) << ',' << phi_deriv(model, fam, x) << '\n';
  }
  const json config = {{"gamma", c.gamma}, {"family", a.family}, {"from", a.from},
                       {"to", a.to},       {"points", a.points}, {"log", a.log_spacing}};
  out << "# " << json{{"meta", meta_json("phi", config, start)}}.dump() << '\n' << body.str();
  return kExitOk;
}

int cmd_riemann(const Common& c, const RiemannArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const GasModel model(c.gamma);
  const State left = parse_state(a.left);
  const State right = parse_state(a.right);
  const RiemannOutcome res = solve_riemann(model, left, right);
  json j;
  if (const auto* fan = std::get_if<RiemannFan>(&res)) {
    j["b"] = fan->backward.ratio();
    j["f"] = fan->forward.ratio();
    j["middle"] = state_json(model, fan->middle);
    j["vacuum"] = false;
    j["backward"] = wave_json(fan->backward);
    j["forward"] = wave_json(fan->forward);
    const SpeedSpan sb = wave_span(model, *fan, Family::Backward);
    const SpeedSpan sf = wave_span(model, *fan, Family::Forward);
    j["backward"]["speeds"] = {sb.lo, sb.hi};
    j["forward"]["speeds"] = {sf.lo, sf.hi};
  } else {
    j["b"] = nullptr;
    j["f"] = nullptr;
    j["middle"] = nullptr;
    j["vacuum"] = true;
  }
  const json config = {{"gamma", c.gamma}, {"left", state_json(model, left)},
                       {"right", state_json(model, right)}};
  j["meta"] = meta_json("riemann", config, start);
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_interact(const Common& c, const InteractArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const GasModel model(c.gamma);
  const auto kind = parse_interaction_kind(a.kind);
  if (!kind) throw DomainError("unknown interaction kind '" + a.kind + "'");
  const State far_left = parse_state(a.far_left);
  const InteractionRealization rz = realize(model, *kind, a.q1, a.q2, far_left);
  const OutgoingPattern pattern = classify_outcome(model, *kind, a.q1, a.q2);

  json j;
  j["kind"] = a.kind;
  j["q1"] = a.q1;
  j["q2"] = a.q2;
  j["B"] = rz.outgoing_backward.ratio();
  j["F"] = rz.outgoing_forward.ratio();
  j["outgoing"] = pattern.label();
  j["realization"] = realization_json(rz);
  if (!a.field.empty()) {
    const ScalarField field = parse_field(a.field);
    const VariationPair var = variation(field, rz);
    j["field"] = a.field;
    j["changes"] = changes_json(wave_changes(field, rz));
    j["var_before"] = var.before;
    j["var_after"] = var.after;
    j["delta_var"] = var.after - var.before;
  }
  json config = {{"gamma", c.gamma}, {"kind", a.kind}, {"q1", a.q1}, {"q2", a.q2},
                 {"far_left", state_json(model, far_left)}};
  if (!a.field.empty()) config["field"] = a.field;
  j["meta"] = meta_json("interact", config, start);
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_expand(const Common& c, const ExpandArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const GasModel model(c.gamma);
  const ScalarField field = parse_field(a.field);
  const State base = parse_state(a.base);
  static const std::map<std::string, SignCase> cases = {
      {"i", SignCase::I}, {"ii", SignCase::II}, {"iii", SignCase::III}, {"iv", SignCase::IV}};
  const SignCase sc = cases.at(a.sign_case);
  if (a.halvings < 0) throw DomainError("--halvings must be non-negative");
  if (!(a.dr > 0.0 && a.ds > 0.0)) throw DomainError("--dr and --ds are magnitudes and must be positive");

  const ExpansionCoefficients coef = expansion_coefficients(field, base, model);
  json rows = json::array();
  double prev = 0.0;
  for (int k = 0; k <= a.halvings; ++k) {
    const double scale = std::ldexp(1.0, -k);
    const Increments inc = signed_increments(coef, a.dr * scale, a.ds * scale, sc);
    const WeakExpansion w = weak_expansion_check(field, base, inc.dr, inc.ds, model);
    const WeakExpansion flipped = weak_expansion_check(field, base, -inc.dr, -inc.ds, model);
    json row = {{"k", k},
                {"dr", w.dr},
                {"ds", w.ds},
                {"kind", std::string(to_string(w.realization.kind))},
                {"measured", w.measured},
                {"predicted", w.predicted},
                {"ratio", w.predicted != 0.0 ? json(w.measured / w.predicted) : json(nullptr)},
                {"flipped_measured", flipped.measured},
                {"flipped_predicted", flipped.predicted},
                {"order", k > 0 && w.measured != 0.0 && prev != 0.0
                              ? json(std::log2(std::abs(prev) / std::abs(w.measured)))
                              : json(nullptr)}};
    rows.push_back(row);
    prev = w.measured;
  }
  const json config = {{"gamma", c.gamma},  {"field", a.field},          {"base", state_json(model, base)},
                       {"dr", a.dr},        {"ds", a.ds},                {"case", a.sign_case},
                       {"halvings", a.halvings}};
  json j = {{"sign_case", a.sign_case},
            {"coefficients", {{"A", coef.A}, {"B", coef.B}, {"C", coef.C}, {"D", coef.D}, {"E", coef.E}}},
            {"rows", rows}};
  j["meta"] = meta_json("tvd-expand", config, start);
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_counterexample(const Common& c, CounterArgs a, std::ostream& out) {
  const auto start = Clock::now();
  const GasModel model(c.gamma);
  if (a.theta.empty()) a.theta = a.which == 1 ? "2*v" : "v";
  if (a.psi.empty()) a.psi = a.which == 2 ? "2*v" : "v";
  const Univariate theta = parse_univariate(a.theta);
  const Univariate psi = parse_univariate(a.psi);

  CounterexampleConfig cfg;
  cfg.lo = a.lo;
  cfg.hi = a.hi;
  cfg.M = a.M.value_or(1.95);
  cfg.delta = a.delta.value_or(0.9);
  cfg.epsilon = a.epsilon;
  if (a.which == 3) {
    // Unset bounds are taken from theta on the sampling grid used by the search.
    double lo_d1 = HUGE_VAL, hi_d1 = -HUGE_VAL, max_d2 = 0.0;
    for (int i = 1; i <= kDerivativeSamples; ++i) {
      const double v = a.lo + (a.hi - a.lo) * i / (kDerivativeSamples + 1);
      lo_d1 = std::min(lo_d1, theta.d1(v));
      hi_d1 = std::max(hi_d1, theta.d1(v));
      max_d2 = std::max(max_d2, std::abs(theta.d2(v)));
    }
    cfg.N_L = a.N_L.value_or(lo_d1);
    cfg.N_U = a.N_U.value_or(hi_d1);
    cfg.M_U = a.M_U.value_or(max_d2);
  }
  ScanOptions opt;
  opt.threads = a.threads;
  opt.max_halvings = a.max_halvings;

  CounterexampleWitness w = [&] {
    switch (a.which) {
      case 1:
        return find_case1(model, cfg, theta, psi, opt);
      case 2:
        return find_case2(model, cfg, theta, psi, opt);
      default:
        return find_case3(model, cfg, theta, opt);
    }
  }();

  json config = {{"gamma", c.gamma}, {"case", a.which}, {"theta", a.theta}, {"lo", cfg.lo},
                 {"hi", cfg.hi}};
  if (a.which == 3) {
    config["N_L"] = cfg.N_L;
    config["N_U"] = cfg.N_U;
    config["M_U"] = cfg.M_U;
    config["epsilon"] = cfg.epsilon;
  } else {
    config["psi"] = a.psi;
    config["M"] = cfg.M;
    config["delta"] = cfg.delta;
  }
  config["threads"] = a.threads;
  config["max_halvings"] = a.max_halvings;

  json j = {{"case", a.which},
            {"kind", std::string(to_string(w.realization.kind))},
            {"scan_ratio", w.scan_ratio},
            {"scan_value", w.scan_value},
            {"scan_threshold", w.scan_threshold},
            {"halvings", w.halvings},
            {"delta_var", w.delta_var},
            {"lower_bound", w.lower_bound},
            {"changes", changes_json(w.changes)},
            {"outgoing", OutgoingPattern{w.realization.outgoing_backward.kind(),
                                         w.realization.outgoing_forward.kind()}
                             .label()},
            {"realization", realization_json(w.realization)}};
  j["meta"] = meta_json("counterexample", config, start);
  out << j.dump() << '\n';
  return kExitOk;
}

int cmd_glimm(const Common& c, const GlimmArgs& a, std::ostream& out) {
  const auto start = Clock::now();
  const GasModel model(c.gamma);
  std::ifstream in(a.ic);
  if (!in) throw DomainError("cannot open initial condition '" + a.ic + "'");
  const std::vector<IcRow> ic = read_ic_csv(in);
  const ScalarField field = parse_field(a.field);
  if (a.every == 0) throw DomainError("--every must be positive");

  double x_lo = ic.front().X;
  double x_hi = 0.0;
  if (!a.domain.empty()) {
    std::tie(x_lo, x_hi) = parse_pair(a.domain, "--domain");
  } else if (ic.size() > 1) {
    // The last plateau gets the mean width of the others.
    x_hi = ic.back().X + (ic.back().X - ic.front().X) / static_cast<double>(ic.size() - 1);
  } else {
    throw DomainError("a single-row initial condition needs --domain");
  }

  GridSolution sol = init_simulation(model, ic, a.cells, x_lo, x_hi);
  RunOptions opt;
  opt.sequence = a.seq == "vdc" ? SequenceKind::VanDerCorput : SequenceKind::Prng;
  opt.seed = a.seed;
  opt.cfl = a.cfl;
  opt.max_steps = a.max_steps;

  const json config = {{"gamma", c.gamma}, {"ic", a.ic},       {"cells", a.cells},
                       {"tmax", a.tmax},   {"field", a.field}, {"seq", a.seq},
                       {"seed", a.seed},   {"cfl", a.cfl},     {"domain", {x_lo, x_hi}},
                       {"every", a.every}, {"max_steps", a.max_steps}};
  out << json{{"meta", meta_json("glimm", config, std::nullopt)}}.dump() << '\n';

  std::size_t step = 0;
  opt.observer = [&](const GridSolution& g, const Functionals& f) {
    if (step % a.every == 0 || g.time >= a.tmax) {
      out << json{{"step", step}, {"t", g.time}, {"var_phi", f.total_var_phi},
                  {"N", f.nishida_N}, {"L", f.liu_L}}
                 .dump()
          << '\n';
    }
    ++step;
  };
  run(sol, a.tmax, field, opt);

  if (a.final_grid) {
    json x = json::array(), xi = json::array(), u = json::array();
    for (std::size_t j = 0; j < sol.cells.size(); ++j) {
      x.push_back(sol.center(j));
      xi.push_back(sol.cells[j].xi());
      u.push_back(sol.cells[j].u());
    }
    out << json{{"final", {{"t", sol.time}, {"x", x}, {"xi", xi}, {"u", u}}}}.dump() << '\n';
  }
  json meta = meta_json("glimm", config, start);
  meta["steps"] = step - 1;
  out << json{{"meta", meta}}.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isentropic gas dynamics lab: wave curves, Riemann problems, interactions, "
               "TVD fields and the Glimm scheme"};
  app.set_version_flag("--version", TVDLAB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("-o,--output", common.output, "Write results to this file instead of stdout");

  auto add_gamma = [&](CLI::App* sub) {
    sub->add_option("--gamma", common.gamma, "Adiabatic exponent, > 1")->required();
  };

  PhiArgs phi_args;
  CLI::App* phi_cmd = app.add_subcommand("phi", "Tabulate the wave-curve function and its derivative (CSV)");
  add_gamma(phi_cmd);
  phi_cmd->add_option("--family", phi_args.family, "b (backward) or f (forward)")
      ->check(CLI::IsMember({"b", "f"}))
      ->capture_default_str();
  phi_cmd->add_option("--from", phi_args.from, "First ratio")->capture_default_str();
  phi_cmd->add_option("--to", phi_args.to, "Last ratio")->capture_default_str();
  phi_cmd->add_option("--points", phi_args.points, "Number of points")->capture_default_str();
  phi_cmd->add_flag("--log", phi_args.log_spacing, "Log-spaced ratios");

  RiemannArgs rp_args;
  CLI::App* rp_cmd = app.add_subcommand("riemann", "Solve a Riemann problem (JSON)");
  add_gamma(rp_cmd);
  rp_cmd->add_option("--left", rp_args.left, "Left state XI,U")->required();
  rp_cmd->add_option("--right", rp_args.right, "Right state XI,U")->required();

  InteractArgs ia_args;
  CLI::App* ia_cmd = app.add_subcommand("interact", "Resolve a pairwise wave interaction (JSON)");
  add_gamma(ia_cmd);
  ia_cmd->add_option("--kind", ia_args.kind, "Ia Ib Ib' Ic IIa IIb IIc IIa' IIb' IIc'")->required();
  ia_cmd->add_option("--q1", ia_args.q1, "Backward ratio b (head-on) or left ratio x (overtaking)")
      ->required();
  ia_cmd->add_option("--q2", ia_args.q2, "Forward ratio f (head-on) or right ratio y (overtaking)")
      ->required();
  ia_cmd->add_option("--far-left", ia_args.far_left, "Far-left state XI,U")->capture_default_str();
  ia_cmd->add_option("--field", ia_args.field, "Also report the variation of this field");

  ExpandArgs ex_args;
  CLI::App* ex_cmd =
      app.add_subcommand("tvd-expand", "Weak head-on interactions against the leading-order term (JSON)");
  add_gamma(ex_cmd);
  ex_cmd->add_option("--field", ex_args.field, "Field spec")->capture_default_str();
  ex_cmd->add_option("--base", ex_args.base, "Base state XI,U")->capture_default_str();
  ex_cmd->add_option("--dr", ex_args.dr, "Magnitude of the r increment")->capture_default_str();
  ex_cmd->add_option("--ds", ex_args.ds, "Magnitude of the s increment")->capture_default_str();
  ex_cmd->add_option("--case", ex_args.sign_case, "Sign case")
      ->check(CLI::IsMember({"i", "ii", "iii", "iv"}))
      ->capture_default_str();
  ex_cmd->add_option("--halvings", ex_args.halvings, "Number of strength halvings")
      ->capture_default_str();

  CounterArgs ce_args;
  CLI::App* ce_cmd =
      app.add_subcommand("counterexample", "Search for a variation-increasing interaction (JSON)");
  add_gamma(ce_cmd);
  ce_cmd->add_option("--case", ce_args.which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  ce_cmd->add_option("--theta", ce_args.theta, "theta(v); default 2*v (case 1) or v");
  ce_cmd->add_option("--psi", ce_args.psi, "psi(v); default 2*v (case 2) or v");
  ce_cmd->add_option("--lo", ce_args.lo, "Interval lower end")->capture_default_str();
  ce_cmd->add_option("--hi", ce_args.hi, "Interval upper end")->capture_default_str();
  ce_cmd->add_option("--M", ce_args.M, "Derivative gap level (cases 1, 2; default 1.95)");
  ce_cmd->add_option("--delta", ce_args.delta, "Derivative gap (cases 1, 2; default 0.9)");
  ce_cmd->add_option("--MU", ce_args.M_U, "Bound on |theta''| (case 3; default sampled)");
  ce_cmd->add_option("--NL", ce_args.N_L, "Lower bound on theta' (case 3; default sampled)");
  ce_cmd->add_option("--NU", ce_args.N_U, "Upper bound on theta' (case 3; default sampled)");
  ce_cmd->add_option("--epsilon", ce_args.epsilon, "Slack (case 3)")->capture_default_str();
  ce_cmd->add_option("--threads", ce_args.threads, "Scan threads")->capture_default_str();
  ce_cmd->add_option("--max-halvings", ce_args.max_halvings, "Budget of far-left halvings")
      ->capture_default_str();

  GlimmArgs gl_args;
  CLI::App* gl_cmd = app.add_subcommand("glimm", "Run the random-choice scheme (JSON lines)");
  add_gamma(gl_cmd);
  gl_cmd->add_option("--ic", gl_args.ic, "Initial condition CSV with header X,tau,u")->required();
  gl_cmd->add_option("--cells", gl_args.cells, "Number of cells")->capture_default_str();
  gl_cmd->add_option("--tmax", gl_args.tmax, "Final time")->required();
  gl_cmd->add_option("--field", gl_args.field, "Field spec for var phi")->capture_default_str();
  gl_cmd->add_option("--seq", gl_args.seq, "Sampling sequence")
      ->check(CLI::IsMember({"vdc", "prng"}))
      ->capture_default_str();
  gl_cmd->add_option("--seed", gl_args.seed, "Sequence seed (vdc: start offset)")->capture_default_str();
  gl_cmd->add_option("--cfl", gl_args.cfl, "CFL number in (0, 1]")->capture_default_str();
  gl_cmd->add_option("--domain", gl_args.domain,
                     "LO,HI; default from the first X to the last X plus the mean plateau width");
  gl_cmd->add_option("--every", gl_args.every, "Emit every n-th step")->capture_default_str();
  gl_cmd->add_option("--max-steps", gl_args.max_steps, "Step budget")->capture_default_str();
  gl_cmd->add_flag("--final", gl_args.final_grid, "Also emit the final grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? std::string(TVDLAB_VERSION) + "\n"
                                                           : app.help());
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* dst = &out;
  if (!common.output.empty()) {
    file.open(common.output);
    if (!file) {
      err << "error: cannot open " << common.output << '\n';
      return kExitUsage;
    }
    dst = &file;
  }

  try {
    if (*phi_cmd) return cmd_phi(common, phi_args, *dst);
    if (*rp_cmd) return cmd_riemann(common, rp_args, *dst);
    if (*ia_cmd) return cmd_interact(common, ia_args, *dst);
    if (*ex_cmd) return cmd_expand(common, ex_args, *dst);
    if (*ce_cmd) return cmd_counterexample(common, ce_args, *dst);
    if (*gl_cmd) return cmd_glimm(common, gl_args, *dst);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VacuumError& e) {
    err << "vacuum: " << e.what() << '\n';
    return kExitVacuum;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const SearchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const QuadratureError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitOther;
  }
  return kExitUsage;
}

}  // namespace tvdlab
