#include "acplus/presets.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "acplus/composition.hpp"
#include "acplus/descriptors.hpp"
#include "acplus/diophantine.hpp"
#include "acplus/errors.hpp"
#include "acplus/semigroup.hpp"
#include "acplus/symbol.hpp"

namespace acp::presets {

namespace {

using jsonio::json;
using jsonio::to_json;

struct Checks {
  json rows = json::array();
  bool all = true;

  void add(const std::string& name, bool pass, json observed,
           const std::string& target) {
    rows.push_back(json{{"name", name},
                        {"pass", pass},
                        {"observed", std::move(observed)},
                        {"target", target}});
    all = all && pass;
  }
};

json assemble(const std::string& name, const PresetOptions& opt, json params,
              json observed, json expected, const Checks* checks) {
  json out{{"name", name},
           {"smoke", opt.smoke},
           {"parameters", std::move(params)},
           {"observed", std::move(observed)}};
  if (checks) {
    out["expected"] = std::move(expected);
    out["checks"] = checks->rows;
    out["pass"] = checks->all;
  } else {
    out["expected"] = nullptr;
    out["checks"] = json::array();
    out["pass"] = nullptr;
  }
  return out;
}

const double kLn2 = std::log(2.0);
const double kLn3 = std::log(3.0);

// ---- pullback-closedform -------------------------------------------------

json run_pullback_closedform(const PresetOptions& opt) {
  const Symbol phi(1, Series({{1, 1.0}, {2, 1.0}}, 2));
  const index_t closure = index_t{1} << 12;
  PullbackResult res = monomial_pullback(2, phi, closure);

  json rows = json::array();
  double max_err = 0.0, factorial = 1.0;
  for (int j = 0; j <= 10; ++j) {
    if (j > 0) factorial *= j;
    const index_t idx = index_t{1} << (j + 1);
    const double expected = 0.5 * std::pow(-kLn2, j) / factorial;
    const cplx got = res.series.coefficient(idx);
    const double err = std::abs(got - expected);
    max_err = std::max(max_err, err);
    rows.push_back(json{{"index", idx},
                        {"coefficient", to_json(got)},
                        {"reference", expected},
                        {"error", err}});
  }

  Checks checks;
  checks.add("coefficient_error_max", max_err <= 1e-12, max_err, "<= 1e-12");
  json expected{{"target", "coefficient at 2^(j+1) = (1/2)(-ln 2)^j / j!"},
                {"tolerance", 1e-12}};
  json params{{"symbol", to_json(phi)}, {"closure", closure}};
  json observed{{"coefficients", std::move(rows)},
                {"discarded_tail_majorant", res.dropped_mass}};
  return assemble("pullback-closedform", opt, std::move(params),
                  std::move(observed), std::move(expected), &checks);
}

// ---- example1-not-ga -----------------------------------------------------

json run_example1(const PresetOptions& opt) {
  const Symbol phi = Symbol::builtin("example1_not_GA");
  RegionSpec region{3.0, 2.0, 3.0, opt.smoke ? 2e-3 : 5e-4};
  const std::vector<double> deltas{1e-2, 1e-3};
  ClassReport rep = classify(phi, region, deltas, 0.1);

  Checks checks;
  checks.add("in_g_infty", rep.g_infty.in_class, rep.g_infty.in_class, "true");
  checks.add("not_in_g", !rep.g.in_class, rep.g.in_class, "false");
  checks.add("band_continuity_violated", rep.ga.violated, rep.ga.violated,
             "true");
  if (!opt.smoke)
    checks.add("omega_at_1e-3", rep.ga.omega.back() >= 0.3,
               rep.ga.omega.back(), ">= 0.3");
  json expected{
      {"target", "member of G_infty but not of G_A: omega(1e-3) >= 0.3 on A_3"},
      {"tolerance", 0.3}};
  json params{{"symbol", to_json(phi)},
              {"region", to_json(region)},
              {"deltas", deltas}};
  return assemble("example1-not-ga", opt, std::move(params),
                  json{{"classification", to_json(rep)}}, std::move(expected),
                  &checks);
}

// ---- example2-ga-not-uc ----------------------------------------------------

json run_example2(const PresetOptions& opt) {
  const Symbol phi = Symbol::builtin("example2_GA_not_UC");
  RegionSpec region{3.0, 2.0, 10.0, opt.smoke ? 2e-2 : 1e-2};
  ClassReport rep = classify(phi, region, {1e-2, 1e-3}, 0.1);

  // Growth of Re Phi along the real axis: bounded on every band A_M but
  // unbounded overall, which is why uniform continuity survives only bandwise.
  json growth = json::array();
  for (double sigma : {1.0, 0.1, 0.01, 1e-3, 1e-4}) {
    const cplx v = phi.evaluate(cplx(sigma, 0.0));
    growth.push_back(json{{"sigma", sigma}, {"re_phi", v.real()}});
  }

  json observed{{"classification", to_json(rep)},
                {"real_axis_growth", std::move(growth)}};
  json params{{"symbol", to_json(phi)}, {"region", to_json(region)}};
  return assemble("example2-ga-not-uc", opt, std::move(params),
                  std::move(observed), nullptr, nullptr);
}

// ---- koebe-flow ------------------------------------------------------------

// Closed-form flow for the koebe spirallike semigroup (c = 1, base 2):
// K(2^{-Phi_t(s)}) = K(2^{-s}) 2^{-t}, inverted by the quadratic formula
// with the in-disc root; the -log_2 branch is fixed by staying nearest to
// the start height (the flow moves points by less than half a period here).
cplx koebe_closed_flow(cplx s, double t) {
  const cplx z0 = std::exp(-kLn2 * s);
  const cplx a = z0 / ((1.0 - z0) * (1.0 - z0)) * std::exp(-t * kLn2);
  cplx zt = 2.0 * a / (2.0 * a + 1.0 + std::sqrt(4.0 * a + 1.0));
  if (std::abs(zt) > 1.0) zt = 1.0 / zt;  // roots are reciprocal
  cplx phi = -std::log(zt) / kLn2;
  const double period = 2.0 * M_PI / kLn2;
  const double k = std::round((s.imag() - phi.imag()) / period);
  return phi + cplx(0.0, k * period);
}

json run_koebe_flow(const PresetOptions& opt) {
  RegionSpec region{3.0, 2.0, 2.5, 0.05};
  const std::vector<double> ts = opt.smoke ? std::vector<double>{0.5}
                                           : std::vector<double>{0.3, 0.5, 1.0};
  const std::size_t n_points = opt.smoke ? 6 : 20;

  const json desc{{"builtin", "koebe-spirallike"}};
  KoenigsSpec k = koenigs_from_descriptor(desc, region);
  GeneratorSpec gen = generator_from_koenigs(k, region);
  const auto pts = sample_points(region, n_points);

  double max_ode = 0.0, max_newton = 0.0, max_cross = 0.0, max_residual = 0.0;
  for (double t : ts) {
    for (cplx s : pts) {
      const FlowResult ode = flow_ode(gen, s, t, 1e-10, &k);
      const FlowResult newton = flow_koenigs(k, s, t, 1e-10);
      const cplx oracle = koebe_closed_flow(s, t);
      max_ode = std::max(max_ode, std::abs(ode.value - oracle));
      max_newton = std::max(max_newton, std::abs(newton.value - oracle));
      max_cross = std::max(max_cross, std::abs(ode.value - newton.value));
      if (ode.residual) max_residual = std::max(max_residual, *ode.residual);
    }
  }

  Checks checks;
  checks.add("ode_vs_closed_form", max_ode <= 1e-8, max_ode, "<= 1e-8");
  checks.add("newton_vs_closed_form", max_newton <= 1e-8, max_newton,
             "<= 1e-8");
  json expected{{"target", "both flow methods match the quadratic closed form"},
                {"tolerance", 1e-8}};
  json params{{"descriptor", desc},
              {"region", to_json(region)},
              {"ts", ts},
              {"points", pts.size()}};
  json observed{{"max_ode_error", max_ode},
                {"max_newton_error", max_newton},
                {"max_cross_error", max_cross},
                {"max_ode_residual", max_residual}};
  return assemble("koebe-flow", opt, std::move(params), std::move(observed),
                  std::move(expected), &checks);
}

// ---- hprime-1plus2s --------------------------------------------------------

json run_hprime_1plus2s(const PresetOptions& opt) {
  RegionSpec region{3.0, 2.0, 3.0, 0.05};
  const std::vector<double> ts = opt.smoke ? std::vector<double>{0.1, 1.0}
                                           : std::vector<double>{0.1, 1.0, 10.0};
  const std::size_t n_points = opt.smoke ? 6 : 20;

  const json desc{{"builtin", "hprime-1plus2s"}};
  GeneratorSpec gen = generator_from_descriptor(desc, region);
  KoenigsSpec k = koenigs_from_generator(gen);

  // h' = 1 + 2^{-s} integrates in closed form; h(1) = 0.
  auto h_cf = [](cplx s) {
    return s - 1.0 - (std::exp(-kLn2 * s) - 0.5) / kLn2;
  };
  KoenigsSpec oracle{h_cf, *gen.h_prime, gen.H};

  const auto pts = sample_points(region, n_points);
  double h_agreement = 0.0;
  for (cplx s : pts) h_agreement = std::max(h_agreement, std::abs(k.h(s) - h_cf(s)));

  double max_residual = 0.0, max_cross = 0.0;
  long max_steps = 0;
  for (double t : ts) {
    for (cplx s : pts) {
      const FlowResult ode = flow_ode(gen, s, t, 1e-10, &oracle);
      const FlowResult newton = flow_koenigs(k, s, t, 1e-10);
      if (ode.residual) max_residual = std::max(max_residual, *ode.residual);
      max_cross = std::max(max_cross, std::abs(ode.value - newton.value));
      max_steps = std::max(max_steps, ode.work);
    }
  }

  Checks checks;
  checks.add("koenigs_residual", max_residual <= 1e-8, max_residual,
             "<= 1e-8");
  checks.add("ode_vs_newton", max_cross <= 1e-8, max_cross, "<= 1e-8");
  json expected{{"target", "|h(Phi_t(s)) - h(s) - t| small along the flow"},
                {"tolerance", 1e-8}};
  json params{{"descriptor", desc},
              {"region", to_json(region)},
              {"ts", ts},
              {"points", pts.size()},
              {"ode_tol", 1e-10}};
  json observed{{"max_flow_residual", max_residual},
                {"max_cross_method_error", max_cross},
                {"integrated_vs_closed_form_h", h_agreement},
                {"max_ode_steps", max_steps}};
  return assemble("hprime-1plus2s", opt, std::move(params), std::move(observed),
                  std::move(expected), &checks);
}

// ---- hprime-1over-1minus2s -------------------------------------------------

json run_hprime_1over(const PresetOptions& opt) {
  RegionSpec region{3.0, 2.048, 3.0, 8e-3};
  const json desc{{"builtin", "hprime-1over-1minus2s"}};
  GeneratorSpec gen = generator_from_descriptor(desc, region);
  KoenigsSpec k = koenigs_from_generator(gen);

  // H = 1 - 2^{-s} gives h(s) = s - 1 + log_2(2 (1 - 2^{-s})): bounded
  // generator, Koenigs map blowing up logarithmically at the boundary.
  auto h_cf = [](cplx s) {
    return s - 1.0 +
           (std::log(1.0 - std::exp(-kLn2 * s)) - std::log(0.5)) / kLn2;
  };

  double agreement = 0.0;
  for (double sigma : {1.0, 0.5, 0.25, 0.1}) {
    for (double t : {0.0, 1.0, -1.0}) {
      const cplx s(sigma, t);
      agreement = std::max(agreement, std::abs(k.h(s) - h_cf(s)));
    }
  }

  // Walk the sigma ladder towards the boundary until |h| crosses 10.
  json ladder_rows = json::array();
  double sigma_star = 0.0;
  cplx h_star;
  for (double sigma : sigma_ladder(region)) {
    const cplx hv = k.h(cplx(sigma, 0.0));
    ladder_rows.push_back(
        json{{"sigma", sigma}, {"h", to_json(hv)}, {"abs_h", std::abs(hv)}});
    if (sigma_star == 0.0 && std::abs(hv) >= 10.0) {
      sigma_star = sigma;
      h_star = hv;
    }
  }

  json observed{{"integrated_vs_closed_form_h", agreement},
                {"ladder", std::move(ladder_rows)},
                {"sigma_star", sigma_star},
                {"h_at_sigma_star", to_json(h_star)}};
  json params{{"descriptor", desc},
              {"region", to_json(region)},
              {"threshold", 10.0}};
  return assemble("hprime-1over-1minus2s", opt, std::move(params),
                  std::move(observed), nullptr, nullptr);
}

// ---- compact-transition ----------------------------------------------------

json run_compact_transition(const PresetOptions& opt) {
  RegionSpec region{3.0, 2.0, 1.2, opt.smoke ? 0.02 : 0.01};
  const std::vector<double> ts =
      opt.smoke ? std::vector<double>{0.5, 2.0}
                : std::vector<double>{0.25, 0.5, 1.0, 1.5, 2.0};
  const json desc{{"builtin", "slit-spirallike"}};
  KoenigsSpec k = koenigs_from_descriptor(desc, region);
  auto rows = compact_transition_scan(k, region, ts, 1e-10, 8192);

  double inf_half = 0.0, inf_two = 0.0;
  for (const auto& row : rows) {
    if (row.t == 0.5) inf_half = row.inf_re;
    if (row.t == 2.0) inf_two = row.inf_re;
  }

  Checks checks;
  checks.add("inf_re_at_t_0.5", inf_half <= 0.05, inf_half, "<= 0.05");
  checks.add("inf_re_at_t_2", inf_two >= 0.1, inf_two, ">= 0.1");
  json expected{{"target", "compactness transition at t0 = 1/c"},
                {"t0", 1.0},
                {"tolerance", 0.05}};
  json params{{"descriptor", desc}, {"region", to_json(region)}, {"ts", ts}};
  return assemble("compact-transition", opt, std::move(params),
                  json{{"rows", jsonio::rows_to_json(rows)}},
                  std::move(expected), &checks);
}

// ---- kronecker-23 ----------------------------------------------------------

json run_kronecker_23(const PresetOptions& opt) {
  KroneckerQuery q;
  q.frequencies = {kLn2, kLn3};
  q.targets = {0.0, M_PI};
  q.epsilon = 1e-2;
  q.t_max = 1e7;
  auto hit = kronecker_search(q);

  const Series phi({{2, 0.5}, {3, -0.5}}, 3);
  Checks checks;
  json observed;
  if (hit) {
    const cplx val = phi.evaluate(cplx(0.0, hit->t)).value;
    const double err = std::abs(val - 1.0);
    checks.add("found", true, true, "a verified hit exists");
    checks.add("t_within_budget", std::abs(hit->t) <= 1e7, hit->t,
               "|t| <= 1e7");
    checks.add("value_error", err <= 1e-2, err, "<= 1e-2");
    observed = json{{"hit", to_json(*hit)},
                    {"value", to_json(val)},
                    {"value_error", err}};
  } else {
    checks.add("found", false, false, "a verified hit exists");
    observed = json{{"hit", nullptr}};
  }
  json expected{
      {"target", "|phi(it) - 1| <= 1e-2 for phi = (1/2)2^{-s} - (1/2)3^{-s}"},
      {"tolerance", 1e-2}};
  json params{{"frequencies", q.frequencies},
              {"targets", q.targets},
              {"epsilon", q.epsilon},
              {"t_max", q.t_max}};
  return assemble("kronecker-23", opt, std::move(params), std::move(observed),
                  std::move(expected), &checks);
}

// ---- identity-convergence ----------------------------------------------------

json run_identity_convergence(const PresetOptions& opt) {
  RegionSpec region{3.0, 2.048, 3.0, opt.smoke ? 3.2e-2 : 8e-3};
  const std::vector<double> ts = opt.smoke
                                     ? std::vector<double>{0.1, 1e-3}
                                     : std::vector<double>{1.0, 0.1, 0.01, 1e-3};
  const json desc{{"builtin", "hprime-1plus2s"}};
  GeneratorSpec gen = generator_from_descriptor(desc, region);
  Flow flow = make_ode_flow(gen, 1e-10);

  auto rows = identity_convergence_scan(flow, region, ts, 16384);
  auto recovery =
      generator_recovery_check(flow, gen.H, region, {1e-2, 1e-3}, 256);
  const double ratio = recovery[1].max_error > 0.0
                           ? recovery[0].max_error / recovery[1].max_error
                           : 0.0;

  bool nonincreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    nonincreasing = nonincreasing &&
                    rows[i].sup_deviation <= rows[i - 1].sup_deviation;
  const double last_sup = rows.back().sup_deviation;

  Checks checks;
  checks.add("sup_nonincreasing_in_t", nonincreasing, nonincreasing, "true");
  checks.add("sup_at_t_1e-3", last_sup <= 2e-3, last_sup, "<= 2e-3");
  if (!opt.smoke) {
    bool has_row = false;
    for (double sg : sigma_ladder(region))
      has_row = has_row || std::abs(sg - 1e-3) <= 1e-12;
    checks.add("grid_reaches_re_1e-3", has_row, has_row, "true");
  }
  json expected{{"target", "sup |Phi_t - id| nonincreasing, <= 2e-3 at t = 1e-3"},
                {"tolerance", 2e-3}};
  json params{{"descriptor", desc},
              {"region", to_json(region)},
              {"ts", ts},
              {"ode_tol", 1e-10}};
  json observed{{"rows", jsonio::rows_to_json(rows)},
                {"recovery", jsonio::rows_to_json(recovery)},
                {"recovery_error_ratio", ratio}};
  return assemble("identity-convergence", opt, std::move(params),
                  std::move(observed), std::move(expected), &checks);
}

// ---- prop-algebrab -----------------------------------------------------------

json run_prop_algebrab(const PresetOptions& opt) {
  std::vector<double> deltas;
  if (opt.delta)
    deltas = {*opt.delta};
  else if (opt.smoke)
    deltas = {1e-2};
  else
    deltas = {1e-2, 1e-3};
  const int count = opt.count ? *opt.count : (opt.smoke ? 1 : 2);
  const double floor_gap = 2.0 * std::exp(-M_PI / 2.0);

  Checks checks;
  json runs = json::array();
  for (double delta : deltas) {
    auto pairs = witness_pairs(delta, count);
    double min_value_gap = floor_gap + 1.0, max_arg_err = 0.0, max_gap = 0.0;
    for (const auto& p : pairs) {
      min_value_gap = std::min(min_value_gap, p.value_gap);
      max_arg_err = std::max(max_arg_err, std::abs(p.arg_gap - M_PI));
      max_gap = std::max(max_gap, p.gap);
    }
    char tag_buf[48];
    std::snprintf(tag_buf, sizeof tag_buf, "delta_%g", delta);
    const std::string tag = tag_buf;
    checks.add(tag + "_pair_count", static_cast<int>(pairs.size()) == count,
               pairs.size(), "requested count");
    checks.add(tag + "_value_gap", min_value_gap >= 0.41, min_value_gap,
               ">= 0.41");
    checks.add(tag + "_arg_gap", max_arg_err <= 1e-6, max_arg_err,
               "|arg gap - pi| <= 1e-6");
    checks.add(tag + "_distance", max_gap <= delta, max_gap, "<= delta");
    runs.push_back(json{{"delta", delta},
                        {"pairs", jsonio::rows_to_json(pairs)}});
  }

  json expected{{"target", "close points with F-values >= 2 e^{-pi/2} apart"},
                {"value_gap_min", 0.41},
                {"arg_gap_tolerance", 1e-6}};
  json params{{"deltas", deltas}, {"count", count}, {"t_max", 1e9}};
  return assemble("prop-algebrab", opt, std::move(params),
                  json{{"runs", std::move(runs)}}, std::move(expected),
                  &checks);
}

using Runner = json (*)(const PresetOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> reg{
      {"prop-algebrab", run_prop_algebrab},
      {"example1-not-ga", run_example1},
      {"example2-ga-not-uc", run_example2},
      {"pullback-closedform", run_pullback_closedform},
      {"koebe-flow", run_koebe_flow},
      {"hprime-1plus2s", run_hprime_1plus2s},
      {"hprime-1over-1minus2s", run_hprime_1over},
      {"compact-transition", run_compact_transition},
      {"kronecker-23", run_kronecker_23},
      {"identity-convergence", run_identity_convergence},
  };
  return reg;
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

jsonio::json run_preset(const std::string& name, const PresetOptions& opt) {
  for (const auto& [reg_name, fn] : registry())
    if (reg_name == name) return fn(opt);
  throw Error(ErrorCode::not_found, "unknown preset '" + name + "'");
}

jsonio::json run_all(const PresetOptions& opt) {
  json presets = json::array();
  bool all_pass = true;
  for (const auto& [name, fn] : registry()) {
    json rep = fn(opt);
    if (rep.at("pass").is_boolean())
      all_pass = all_pass && rep.at("pass").get<bool>();
    presets.push_back(std::move(rep));
  }
  return json{{"presets", std::move(presets)}, {"all_pass", all_pass}};
}

}  // namespace acp::presets
