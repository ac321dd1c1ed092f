/*
  acp — command-line front door for the acplus shared library.

  Talks to the library exclusively through the C API in acplus.h; the
  vendored CLI11 and json headers are used only for argument handling and
  CSV emission.  Every subcommand prints a JSON report to stdout; some also
  write CSV plot data via --out.

  Exit codes: 0 success, 1 unknown subcommand/flag (usage text on stderr),
  2 precondition violation (malformed inputs included), 3 not-found or
  budget-exhausted (failing preset expectations included).
*/
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acplus.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitNotFound = 3;

struct Str {
  char* p = nullptr;
  ~Str() { acp_string_free(p); }
  Str() = default;
  Str(const Str&) = delete;
  Str& operator=(const Str&) = delete;
};

template <class T>
struct Handle {
  T* p = nullptr;
  ~Handle();
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
};

template <>
Handle<acp_series>::~Handle() {
  acp_series_free(p);
}
template <>
Handle<acp_symbol>::~Handle() {
  acp_symbol_free(p);
}
template <>
Handle<acp_generator>::~Handle() {
  acp_generator_free(p);
}
template <>
Handle<acp_koenigs>::~Handle() {
  acp_koenigs_free(p);
}

// Ferries an exit code out of helper functions.
struct Exit {
  int code;
};

int exit_code_of(acp_status st) {
  switch (st) {
    case ACP_OK:
      return 0;
    case ACP_ERR_USAGE:
    case ACP_ERR_PRECONDITION:
      return kExitPrecondition;
    case ACP_ERR_NOT_FOUND:
    default:
      return kExitNotFound;
  }
}

void check(acp_status st) {
  if (st == ACP_OK) return;
  std::fprintf(stderr, "error: %s\n", acp_last_error());
  throw Exit{exit_code_of(st)};
}

[[noreturn]] void die(int code, const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  throw Exit{code};
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --series takes a path to a JSON file.
std::string series_text(const std::string& path) {
  auto text = read_file(path);
  if (!text) die(kExitPrecondition, "cannot read series file '" + path + "'");
  return *text;
}

// --symbol and --descriptor take either a path to a JSON file or the name
// of a builtin; a readable file wins.
std::string json_or_builtin(const std::string& arg) {
  if (auto text = read_file(arg)) return *text;
  return json{{"builtin", arg}}.dump();
}

void complex_arg(const std::string& text, double* re, double* im) {
  check(acp_parse_complex(text.c_str(), re, im));
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void print_report(const char* report) { std::fputs(report, stdout); }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) die(kExitPrecondition, "cannot open output file '" + path + "'");
  out << text;
  if (!out) die(kExitPrecondition, "cannot write output file '" + path + "'");
}

// Per-subcommand grid flags, forwarded as a region JSON object; keys left
// unset fall back to the library defaults.
struct GridFlags {
  double sigma_max = 0.0, t_window = 0.0, step = 0.0;
  CLI::Option *o_sigma = nullptr, *o_window = nullptr, *o_step = nullptr;

  void attach(CLI::App* cmd) {
    o_sigma = cmd->add_option("--grid-sigma-max", sigma_max,
                              "largest Re s on the scan grid");
    o_window = cmd->add_option("--grid-t-window", t_window,
                               "half-width of the Im s scan window");
    o_step = cmd->add_option("--grid-step", step, "grid spacing");
  }

  // nullptr when no flag was given (library defaults apply).
  std::optional<std::string> region_json() const {
    json j = json::object();
    if (o_sigma->count()) j["sigma_max"] = sigma_max;
    if (o_window->count()) j["t_window"] = t_window;
    if (o_step->count()) j["grid_step"] = step;
    if (j.empty()) return std::nullopt;
    return j.dump();
  }
};

const char* c_str_or_null(const std::optional<std::string>& s) {
  return s ? s->c_str() : nullptr;
}

/* ---- CSV emission ------------------------------------------------------- */

std::string flow_csv(const json& rows) {
  std::string out = "t,s_re,s_im,phi_re,phi_im,residual,method\n";
  for (const json& r : rows) {
    out += fmt(r.at("t").get<double>());
    out += ',' + fmt(r.at("start")[0].get<double>());
    out += ',' + fmt(r.at("start")[1].get<double>());
    out += ',' + fmt(r.at("value")[0].get<double>());
    out += ',' + fmt(r.at("value")[1].get<double>());
    out += ',';
    if (!r.at("residual").is_null()) out += fmt(r.at("residual").get<double>());
    out += ',' + r.at("method").get<std::string>();
    out += '\n';
  }
  return out;
}

std::string probe_csv(const json& probe) {
  std::string out = "delta,omega,s1_re,s1_im,s2_re,s2_im\n";
  const json& deltas = probe.at("deltas");
  const json& omega = probe.at("omega");
  const json& pairs = probe.at("worst_pairs");
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    out += fmt(deltas[i].get<double>());
    out += ',' + fmt(omega[i].get<double>());
    if (pairs[i].is_null()) {
      out += ",,,,";
    } else {
      out += ',' + fmt(pairs[i].at("s1")[0].get<double>());
      out += ',' + fmt(pairs[i].at("s1")[1].get<double>());
      out += ',' + fmt(pairs[i].at("s2")[0].get<double>());
      out += ',' + fmt(pairs[i].at("s2")[1].get<double>());
    }
    out += '\n';
  }
  return out;
}

std::string witness_csv(const json& pairs) {
  std::string out = "s1_re,s1_im,s2_re,s2_im,gap,value_gap\n";
  for (const json& p : pairs) {
    out += fmt(p.at("s1")[0].get<double>());
    out += ',' + fmt(p.at("s1")[1].get<double>());
    out += ',' + fmt(p.at("s2")[0].get<double>());
    out += ',' + fmt(p.at("s2")[1].get<double>());
    out += ',' + fmt(p.at("gap").get<double>());
    out += ',' + fmt(p.at("value_gap").get<double>());
    out += '\n';
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acp: Dirichlet series, composition-operator symbols, and "
               "holomorphic semigroups on the right half-plane"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every subcommand");

  int seed = 0;
  app.add_option("--seed", seed,
                 "reserved for compatibility; all sampling is deterministic");

  /* eval */
  auto* c_eval = app.add_subcommand("eval", "evaluate a series or symbol at s");
  std::string eval_series, eval_symbol, eval_s;
  auto* eval_series_opt =
      c_eval->add_option("--series", eval_series, "series JSON file");
  auto* eval_symbol_opt = c_eval->add_option(
      "--symbol", eval_symbol, "symbol JSON file or builtin name");
  eval_series_opt->excludes(eval_symbol_opt);
  c_eval->add_option("--s", eval_s, "evaluation point, a+bi")->required();

  /* abscissae */
  auto* c_abs = app.add_subcommand(
      "abscissae", "estimate convergence/absolute-convergence abscissae");
  std::string abs_series;
  c_abs->add_option("--series", abs_series, "series JSON file")->required();

  /* norm */
  auto* c_norm = app.add_subcommand(
      "norm", "sup-norm estimate on a vertical line Re s = sigma");
  std::string norm_series;
  double norm_sigma = 0.0, norm_window = 10.0, norm_step = 1e-2;
  c_norm->add_option("--series", norm_series, "series JSON file")->required();
  c_norm->add_option("--sigma", norm_sigma, "line Re s = sigma (default 0)");
  c_norm->add_option("--grid-t-window", norm_window,
                     "half-width of the Im s sampling window");
  c_norm->add_option("--grid-step", norm_step, "sampling step");

  /* classify */
  auto* c_classify = app.add_subcommand(
      "classify", "symbol class membership (G_infty, G, G_A) + compactness");
  std::string classify_symbol;
  std::vector<double> classify_deltas;
  double classify_threshold = 0.1;
  GridFlags classify_grid;
  c_classify
      ->add_option("--symbol", classify_symbol,
                   "symbol JSON file or builtin name")
      ->required();
  c_classify->add_option("--delta", classify_deltas,
                         "probe gaps (default 1e-2 1e-3)");
  c_classify->add_option("--ga-threshold", classify_threshold,
                         "oscillation threshold for the G_A verdict");
  classify_grid.attach(c_classify);

  /* probe-ga */
  auto* c_probe = app.add_subcommand(
      "probe-ga", "band uniform-continuity probe (oscillation vs gap)");
  std::string probe_symbol, probe_out;
  std::vector<double> probe_deltas;
  double probe_threshold = 0.1;
  GridFlags probe_grid;
  c_probe
      ->add_option("--symbol", probe_symbol,
                   "symbol JSON file or builtin name")
      ->required();
  c_probe->add_option("--delta", probe_deltas,
                      "probe gaps (default 1e-2 1e-3)");
  c_probe->add_option("--ga-threshold", probe_threshold,
                      "oscillation threshold for the verdict");
  c_probe->add_option("--out", probe_out, "CSV output path");
  probe_grid.attach(c_probe);

  /* compact */
  auto* c_compact = app.add_subcommand(
      "compact", "compactness diagnostic: inf Re over the region");
  std::string compact_symbol;
  GridFlags compact_grid;
  c_compact
      ->add_option("--symbol", compact_symbol,
                   "symbol JSON file or builtin name")
      ->required();
  compact_grid.attach(c_compact);

  /* pullback */
  auto* c_pull = app.add_subcommand(
      "pullback", "coefficients of n^{-Phi(s)} as a Dirichlet series");
  std::string pull_symbol;
  int64_t pull_n = 2, pull_closure = 0;
  c_pull->add_option("--n", pull_n, "monomial index n >= 2")->required();
  c_pull
      ->add_option("--symbol", pull_symbol, "symbol JSON file or builtin name")
      ->required();
  c_pull->add_option("--closure", pull_closure,
                     "index cap for products (default 65536)");

  /* compose */
  auto* c_compose =
      app.add_subcommand("compose", "coefficients of f(Phi(s)) term by term");
  std::string compose_series, compose_symbol;
  int64_t compose_closure = 0;
  c_compose->add_option("--series", compose_series, "series JSON file for f")
      ->required();
  c_compose
      ->add_option("--symbol", compose_symbol,
                   "symbol JSON file or builtin name")
      ->required();
  c_compose->add_option("--closure", compose_closure,
                        "index cap for products (default 65536)");

  /* flow */
  auto* c_flow = app.add_subcommand(
      "flow", "advance points along the semigroup flow of a generator");
  std::string flow_desc, flow_method = "ode", flow_out;
  std::vector<std::string> flow_points;
  std::vector<double> flow_ts;
  double flow_tol = 1e-10;
  GridFlags flow_grid;
  c_flow
      ->add_option("--descriptor", flow_desc,
                   "generator/Koenigs descriptor JSON file or builtin name")
      ->required();
  c_flow->add_option("--s", flow_points,
                     "start points, a+bi (default 2+0i; repeatable)");
  c_flow->add_option("--t", flow_ts, "flow times (default 1)");
  c_flow->add_option("--tol", flow_tol, "solver tolerance");
  c_flow
      ->add_option("--method", flow_method,
                   "solver: ode (with Koenigs residual) or koenigs")
      ->check(CLI::IsMember({"ode", "koenigs"}));
  c_flow->add_option("--out", flow_out, "CSV output path");
  flow_grid.attach(c_flow);

  /* koenigs */
  auto* c_koenigs = app.add_subcommand(
      "koenigs", "evaluate the Koenigs map h, h', and generator H at s");
  std::string koenigs_desc, koenigs_s = "2+0i";
  double koenigs_tol = 1e-12;
  GridFlags koenigs_grid;
  c_koenigs
      ->add_option("--descriptor", koenigs_desc,
                   "generator/Koenigs descriptor JSON file or builtin name")
      ->required();
  c_koenigs->add_option("--s", koenigs_s, "evaluation point, a+bi");
  c_koenigs->add_option("--tol", koenigs_tol, "path-integration tolerance");
  koenigs_grid.attach(c_koenigs);

  /* semigroup-check */
  auto* c_semi = app.add_subcommand(
      "semigroup-check",
      "semigroup law, identity convergence, and generator recovery");
  std::string semi_desc;
  double semi_t = 0.5, semi_u = 0.5;
  std::vector<double> semi_ts;
  GridFlags semi_grid;
  c_semi
      ->add_option("--descriptor", semi_desc,
                   "generator/Koenigs descriptor JSON file or builtin name")
      ->required();
  c_semi->add_option("--t", semi_t, "law check: first time");
  c_semi->add_option("--u", semi_u, "law check: second time");
  c_semi->add_option("--ts", semi_ts,
                     "scan times (default 1 0.1 0.01 0.001)");
  semi_grid.attach(c_semi);

  /* kronecker */
  auto* c_kron = app.add_subcommand(
      "kronecker", "find t with t*omega_j close to tau_j modulo 2*pi");
  std::vector<double> kron_freq, kron_target;
  double kron_eps = 1e-2, kron_tmax = 1e7;
  c_kron->add_option("--freq", kron_freq,
                     "frequencies omega_j (default ln2 ln3)");
  c_kron->add_option("--target", kron_target,
                     "target angles tau_j (default 0 pi)");
  c_kron->add_option("--epsilon", kron_eps, "angular tolerance");
  c_kron->add_option("--t-max", kron_tmax, "search budget for t");

  /* witnesses */
  auto* c_wit = app.add_subcommand(
      "witnesses",
      "boundary pairs separating a composed symbol from uniform continuity");
  double wit_delta = 1e-2, wit_tmax = 1e9;
  int wit_count = 2;
  std::string wit_out;
  c_wit->add_option("--delta", wit_delta, "pair gap bound");
  c_wit->add_option("--count", wit_count, "number of pairs");
  c_wit->add_option("--t-max", wit_tmax, "height budget");
  c_wit->add_option("--out", wit_out, "CSV output path");

  /* preset */
  auto* c_preset = app.add_subcommand(
      "preset", "run a named demonstration scenario (or --all, or --list)");
  std::string preset_name;
  bool preset_all = false, preset_list = false, preset_smoke = false;
  double preset_delta = 0.0;
  int preset_count = 0;
  c_preset->add_option("name", preset_name, "registered preset name");
  c_preset->add_flag("--all", preset_all, "run every registered preset");
  c_preset->add_flag("--list", preset_list, "print the registry and exit");
  c_preset->add_flag("--smoke", preset_smoke, "reduced grids and budgets");
  auto* preset_delta_opt = c_preset->add_option(
      "--delta", preset_delta, "witness preset: override the pair gap");
  auto* preset_count_opt = c_preset->add_option(
      "--count", preset_count, "witness preset: override the pair count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    std::fprintf(stderr, "%s", app.help().c_str());
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(c_eval)) {
      double re = 0.0, im = 0.0;
      complex_arg(eval_s, &re, &im);
      Str out;
      if (eval_series_opt->count()) {
        Handle<acp_series> f;
        check(acp_series_parse(series_text(eval_series).c_str(), &f.p));
        check(acp_series_eval(f.p, re, im, &out.p));
      } else if (eval_symbol_opt->count()) {
        Handle<acp_symbol> phi;
        check(acp_symbol_parse(json_or_builtin(eval_symbol).c_str(), &phi.p));
        check(acp_symbol_eval(phi.p, re, im, &out.p));
      } else {
        die(kExitPrecondition, "eval needs --series or --symbol");
      }
      print_report(out.p);
    } else if (app.got_subcommand(c_abs)) {
      Handle<acp_series> f;
      check(acp_series_parse(series_text(abs_series).c_str(), &f.p));
      Str out;
      check(acp_series_abscissae(f.p, &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_norm)) {
      Handle<acp_series> f;
      check(acp_series_parse(series_text(norm_series).c_str(), &f.p));
      double value = 0.0;
      check(acp_series_sup_norm(f.p, norm_sigma, norm_window, norm_step,
                                &value));
      json j{{"sigma", norm_sigma},
             {"t_window", norm_window},
             {"grid_step", norm_step},
             {"sup_norm", value}};
      std::fputs((j.dump(2) + "\n").c_str(), stdout);
    } else if (app.got_subcommand(c_classify)) {
      Handle<acp_symbol> phi;
      check(
          acp_symbol_parse(json_or_builtin(classify_symbol).c_str(), &phi.p));
      std::optional<std::string> region = classify_grid.region_json();
      std::optional<std::string> deltas;
      if (!classify_deltas.empty()) deltas = json(classify_deltas).dump();
      Str out;
      check(acp_symbol_classify(phi.p, c_str_or_null(region),
                                c_str_or_null(deltas), classify_threshold,
                                &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_probe)) {
      Handle<acp_symbol> phi;
      check(acp_symbol_parse(json_or_builtin(probe_symbol).c_str(), &phi.p));
      std::optional<std::string> region = probe_grid.region_json();
      std::optional<std::string> deltas;
      if (!probe_deltas.empty()) deltas = json(probe_deltas).dump();
      Str out;
      check(acp_symbol_probe_ga(phi.p, c_str_or_null(region),
                                c_str_or_null(deltas), probe_threshold,
                                &out.p));
      print_report(out.p);
      if (!probe_out.empty())
        write_text(probe_out, probe_csv(json::parse(out.p)));
    } else if (app.got_subcommand(c_compact)) {
      Handle<acp_symbol> phi;
      check(acp_symbol_parse(json_or_builtin(compact_symbol).c_str(), &phi.p));
      std::optional<std::string> region = compact_grid.region_json();
      Str out;
      check(acp_symbol_compactness(phi.p, c_str_or_null(region), &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_pull)) {
      Handle<acp_symbol> phi;
      check(acp_symbol_parse(json_or_builtin(pull_symbol).c_str(), &phi.p));
      Str out;
      check(acp_monomial_pullback(
          pull_n, phi.p, pull_closure > 0 ? pull_closure : 65536, &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_compose)) {
      Handle<acp_series> f;
      check(acp_series_parse(series_text(compose_series).c_str(), &f.p));
      Handle<acp_symbol> phi;
      check(acp_symbol_parse(json_or_builtin(compose_symbol).c_str(), &phi.p));
      Str out;
      check(acp_compose(f.p, phi.p,
                        compose_closure > 0 ? compose_closure : 65536,
                        &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_flow)) {
      std::optional<std::string> region = flow_grid.region_json();
      if (flow_points.empty()) flow_points.push_back("2+0i");
      if (flow_ts.empty()) flow_ts.push_back(1.0);
      std::string desc = json_or_builtin(flow_desc);
      Handle<acp_generator> gen;
      Handle<acp_koenigs> koe;
      if (flow_method == "ode") {
        check(acp_generator_parse(desc.c_str(), c_str_or_null(region),
                                  &gen.p));
      }
      check(acp_koenigs_parse(desc.c_str(), c_str_or_null(region), 1e-12,
                              &koe.p));
      json rows = json::array();
      for (const std::string& pt : flow_points) {
        double re = 0.0, im = 0.0;
        complex_arg(pt, &re, &im);
        for (double t : flow_ts) {
          Str out;
          if (flow_method == "ode")
            check(acp_flow_ode(gen.p, koe.p, re, im, t, flow_tol, &out.p));
          else
            check(acp_flow_koenigs(koe.p, re, im, t, flow_tol, &out.p));
          rows.push_back(json::parse(out.p));
        }
      }
      json report{{"rows", rows}};
      std::fputs((report.dump(2) + "\n").c_str(), stdout);
      if (!flow_out.empty()) write_text(flow_out, flow_csv(rows));
    } else if (app.got_subcommand(c_koenigs)) {
      std::optional<std::string> region = koenigs_grid.region_json();
      Handle<acp_koenigs> koe;
      check(acp_koenigs_parse(json_or_builtin(koenigs_desc).c_str(),
                              c_str_or_null(region), koenigs_tol, &koe.p));
      double re = 0.0, im = 0.0;
      complex_arg(koenigs_s, &re, &im);
      Str out;
      check(acp_koenigs_eval(koe.p, re, im, &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_semi)) {
      std::optional<std::string> region = semi_grid.region_json();
      Handle<acp_generator> gen;
      check(acp_generator_parse(json_or_builtin(semi_desc).c_str(),
                                c_str_or_null(region), &gen.p));
      std::optional<std::string> ts;
      if (!semi_ts.empty()) ts = json(semi_ts).dump();
      Str out;
      check(acp_semigroup_check(gen.p, c_str_or_null(region), semi_t, semi_u,
                                c_str_or_null(ts), &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_kron)) {
      json q = json::object();
      if (kron_freq.empty()) kron_freq = {std::log(2.0), std::log(3.0)};
      if (kron_target.empty()) kron_target = {0.0, M_PI};
      q["frequencies"] = kron_freq;
      q["targets"] = kron_target;
      q["epsilon"] = kron_eps;
      q["t_max"] = kron_tmax;
      Str out;
      check(acp_kronecker(q.dump().c_str(), &out.p));
      print_report(out.p);
    } else if (app.got_subcommand(c_wit)) {
      Str out;
      check(acp_witnesses(wit_delta, wit_count, wit_tmax, &out.p));
      print_report(out.p);
      if (!wit_out.empty())
        write_text(wit_out, witness_csv(json::parse(out.p).at("pairs")));
    } else if (app.got_subcommand(c_preset)) {
      if (preset_list) {
        Str out;
        check(acp_preset_list(&out.p));
        print_report(out.p);
        return 0;
      }
      json options{{"smoke", preset_smoke}};
      if (preset_delta_opt->count()) options["delta"] = preset_delta;
      if (preset_count_opt->count()) options["count"] = preset_count;
      Str out;
      if (preset_all) {
        check(acp_preset_run_all(options.dump().c_str(), &out.p));
        print_report(out.p);
        json report = json::parse(out.p);
        if (report.contains("all_pass") && report.at("all_pass").is_boolean() &&
            !report.at("all_pass").get<bool>())
          return kExitNotFound;
      } else if (!preset_name.empty()) {
        check(acp_preset_run(preset_name.c_str(), options.dump().c_str(),
                             &out.p));
        print_report(out.p);
        json report = json::parse(out.p);
        if (report.contains("pass") && report.at("pass").is_boolean() &&
            !report.at("pass").get<bool>())
          return kExitNotFound;
      } else {
        std::fprintf(stderr,
                     "error: preset needs a name, --all, or --list\n%s",
                     c_preset->help().c_str());
        return kExitUsage;
      }
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
