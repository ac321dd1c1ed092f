#include "acplus.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "acplus/abscissae.hpp"
#include "acplus/composition.hpp"
#include "acplus/descriptors.hpp"
#include "acplus/diophantine.hpp"
#include "acplus/errors.hpp"
#include "acplus/json_io.hpp"
#include "acplus/presets.hpp"
#include "acplus/semigroup.hpp"
#include "acplus/series.hpp"
#include "acplus/symbol.hpp"

using acp::jsonio::json;

struct acp_series {
  acp::Series v;
};
struct acp_symbol {
  acp::Symbol v;
};
struct acp_generator {
  acp::GeneratorSpec v;
};
struct acp_koenigs {
  acp::KoenigsSpec v;
};

namespace {

thread_local std::string g_last_error;

acp_status map_code(acp::ErrorCode c) {
  switch (c) {
    case acp::ErrorCode::usage:
      return ACP_ERR_USAGE;
    case acp::ErrorCode::precondition:
      return ACP_ERR_PRECONDITION;
    case acp::ErrorCode::not_found:
      return ACP_ERR_NOT_FOUND;
    case acp::ErrorCode::numeric:
      return ACP_ERR_INTERNAL;
  }
  return ACP_ERR_INTERNAL;
}

template <class Fn>
acp_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const acp::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ACP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ACP_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void check_out(const void* p) {
  acp::require(p != nullptr, acp::ErrorCode::usage,
               "output parameter must not be NULL");
}

acp_status emit(const json& j, char** json_out) {
  check_out(json_out);
  *json_out = dup_string(acp::jsonio::dump(j));
  return ACP_OK;
}

template <class T>
const T& deref(const T* p, const char* what) {
  acp::require(p != nullptr, acp::ErrorCode::usage,
               std::string(what) + " handle must not be NULL");
  return *p;
}

const char* nonnull(const char* p, const char* what) {
  acp::require(p != nullptr, acp::ErrorCode::usage,
               std::string(what) + " must not be NULL");
  return p;
}

acp::RegionSpec region_of(const char* region_json) {
  if (!region_json) return acp::RegionSpec{};
  return acp::jsonio::region_from_json(acp::jsonio::parse(region_json));
}

std::vector<double> doubles_of_json(const json& j) {
  acp::require(j.is_array(), acp::ErrorCode::usage,
               "expected a JSON array of numbers");
  std::vector<double> out;
  for (const json& e : j) {
    acp::require(e.is_number(), acp::ErrorCode::usage,
                 "expected a JSON array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<double> doubles_of(const char* text,
                               std::vector<double> fallback) {
  if (!text) return fallback;
  return doubles_of_json(acp::jsonio::parse(text));
}

}  // namespace

extern "C" {

const char* acp_version(void) { return "0.1.0"; }

const char* acp_last_error(void) { return g_last_error.c_str(); }

void acp_string_free(char* s) { std::free(s); }

acp_status acp_parse_complex(const char* text, double* re, double* im) {
  return guarded([&]() -> acp_status {
    nonnull(text, "text");
    check_out(re);
    check_out(im);
    auto z = acp::parse_complex(text);
    acp::require(z.has_value(), acp::ErrorCode::precondition,
                 std::string("malformed complex literal '") + text + "'");
    *re = z->real();
    *im = z->imag();
    return ACP_OK;
  });
}

/* ---- series ------------------------------------------------------------- */

acp_status acp_series_parse(const char* series_json, acp_series** out) {
  return guarded([&]() -> acp_status {
    check_out(out);
    json j = acp::jsonio::parse(nonnull(series_json, "series JSON"));
    *out = new acp_series{acp::jsonio::series_from_json(j)};
    return ACP_OK;
  });
}

void acp_series_free(acp_series* s) { delete s; }

acp_status acp_series_dump(const acp_series* s, char** json_out) {
  return guarded([&]() -> acp_status {
    return emit(acp::jsonio::to_json(deref(s, "series").v), json_out);
  });
}

acp_status acp_series_eval(const acp_series* s, double re, double im,
                           char** json_out) {
  return guarded([&]() -> acp_status {
    auto r = deref(s, "series").v.evaluate(acp::cplx(re, im));
    return emit(acp::jsonio::to_json(r), json_out);
  });
}

acp_status acp_series_abscissae(const acp_series* s, char** json_out) {
  return guarded([&]() -> acp_status {
    auto r = acp::estimate_abscissae(deref(s, "series").v);
    return emit(acp::jsonio::to_json(r), json_out);
  });
}

acp_status acp_series_sup_norm(const acp_series* s, double sigma,
                               double t_window, double grid_step,
                               double* out) {
  return guarded([&]() -> acp_status {
    check_out(out);
    *out = acp::sup_norm_estimate(deref(s, "series").v, sigma, t_window,
                                  grid_step);
    return ACP_OK;
  });
}

/* ---- symbols -------------------------------------------------------------- */

acp_status acp_symbol_parse(const char* symbol_json, acp_symbol** out) {
  return guarded([&]() -> acp_status {
    check_out(out);
    json j = acp::jsonio::parse(nonnull(symbol_json, "symbol JSON"));
    *out = new acp_symbol{acp::jsonio::symbol_from_json(j)};
    return ACP_OK;
  });
}

void acp_symbol_free(acp_symbol* s) { delete s; }

acp_status acp_symbol_dump(const acp_symbol* s, char** json_out) {
  return guarded([&]() -> acp_status {
    return emit(acp::jsonio::to_json(deref(s, "symbol").v), json_out);
  });
}

acp_status acp_symbol_eval(const acp_symbol* s, double re, double im,
                           char** json_out) {
  return guarded([&]() -> acp_status {
    acp::cplx v = deref(s, "symbol").v.evaluate(acp::cplx(re, im));
    return emit(json{{"value", acp::jsonio::to_json(v)}}, json_out);
  });
}

acp_status acp_symbol_classify(const acp_symbol* s, const char* region_json,
                               const char* deltas_json, double ga_threshold,
                               char** json_out) {
  return guarded([&]() -> acp_status {
    auto rep = acp::classify(deref(s, "symbol").v, region_of(region_json),
                             doubles_of(deltas_json, {1e-2, 1e-3}),
                             ga_threshold);
    return emit(acp::jsonio::to_json(rep), json_out);
  });
}

acp_status acp_symbol_probe_ga(const acp_symbol* s, const char* region_json,
                               const char* deltas_json, double ga_threshold,
                               char** json_out) {
  return guarded([&]() -> acp_status {
    auto rep = acp::probe_G_A(deref(s, "symbol").v, region_of(region_json),
                              doubles_of(deltas_json, {1e-2, 1e-3}),
                              ga_threshold);
    return emit(acp::jsonio::to_json(rep), json_out);
  });
}

acp_status acp_symbol_compactness(const acp_symbol* s, const char* region_json,
                                  char** json_out) {
  return guarded([&]() -> acp_status {
    auto rep = acp::compactness_diagnostic(deref(s, "symbol").v,
                                           region_of(region_json));
    return emit(acp::jsonio::to_json(rep), json_out);
  });
}

/* ---- composition ------------------------------------------------------------ */

acp_status acp_monomial_pullback(int64_t n, const acp_symbol* phi,
                                 int64_t closure, char** json_out) {
  return guarded([&]() -> acp_status {
    auto res = acp::monomial_pullback(n, deref(phi, "symbol").v, closure);
    return emit(acp::jsonio::to_json(res), json_out);
  });
}

acp_status acp_compose(const acp_series* f, const acp_symbol* phi,
                       int64_t closure, char** json_out) {
  return guarded([&]() -> acp_status {
    auto res =
        acp::compose(deref(f, "series").v, deref(phi, "symbol").v, closure);
    return emit(acp::jsonio::to_json(res), json_out);
  });
}

acp_status acp_verify_contraction(const acp_series* f, const acp_symbol* phi,
                                  const char* region_json, double tolerance,
                                  int64_t closure, char** json_out) {
  return guarded([&]() -> acp_status {
    auto rep = acp::verify_contraction(deref(f, "series").v,
                                       deref(phi, "symbol").v,
                                       region_of(region_json), tolerance,
                                       closure);
    return emit(acp::jsonio::to_json(rep), json_out);
  });
}

/* ---- semigroups --------------------------------------------------------------- */

acp_status acp_generator_parse(const char* descriptor_json,
                               const char* region_json, acp_generator** out) {
  return guarded([&]() -> acp_status {
    check_out(out);
    json j = acp::jsonio::parse(nonnull(descriptor_json, "descriptor JSON"));
    *out = new acp_generator{
        acp::generator_from_descriptor(j, region_of(region_json))};
    return ACP_OK;
  });
}

void acp_generator_free(acp_generator* g) { delete g; }

acp_status acp_koenigs_parse(const char* descriptor_json,
                             const char* region_json, double quad_tol,
                             acp_koenigs** out) {
  return guarded([&]() -> acp_status {
    check_out(out);
    json j = acp::jsonio::parse(nonnull(descriptor_json, "descriptor JSON"));
    *out = new acp_koenigs{
        acp::koenigs_from_descriptor(j, region_of(region_json), quad_tol)};
    return ACP_OK;
  });
}

void acp_koenigs_free(acp_koenigs* k) { delete k; }

acp_status acp_koenigs_eval(const acp_koenigs* k, double re, double im,
                            char** json_out) {
  return guarded([&]() -> acp_status {
    const acp::KoenigsSpec& spec = deref(k, "koenigs").v;
    acp::require(re > 0.0, acp::ErrorCode::precondition,
                 "Koenigs evaluation needs Re s > 0");
    const acp::cplx s(re, im);
    json j{{"s", acp::jsonio::to_json(s)},
           {"h", acp::jsonio::to_json(spec.h(s))},
           {"h_prime", acp::jsonio::to_json(spec.h_prime(s))},
           {"H", acp::jsonio::to_json(spec.H(s))}};
    return emit(j, json_out);
  });
}

acp_status acp_flow_ode(const acp_generator* g, const acp_koenigs* koenigs,
                        double re, double im, double t, double tol,
                        char** json_out) {
  return guarded([&]() -> acp_status {
    const acp::KoenigsSpec* residual = koenigs ? &koenigs->v : nullptr;
    auto res = acp::flow_ode(deref(g, "generator").v, acp::cplx(re, im), t,
                             tol, residual);
    return emit(acp::jsonio::to_json(res), json_out);
  });
}

acp_status acp_flow_koenigs(const acp_koenigs* k, double re, double im,
                            double t, double tol, char** json_out) {
  return guarded([&]() -> acp_status {
    auto res =
        acp::flow_koenigs(deref(k, "koenigs").v, acp::cplx(re, im), t, tol);
    return emit(acp::jsonio::to_json(res), json_out);
  });
}

acp_status acp_semigroup_check(const acp_generator* g, const char* region_json,
                               double t, double u, const char* ts_json,
                               char** json_out) {
  return guarded([&]() -> acp_status {
    const acp::GeneratorSpec& gen = deref(g, "generator").v;
    const acp::RegionSpec region = region_of(region_json);
    const std::vector<double> ts =
        doubles_of(ts_json, {1.0, 0.1, 0.01, 1e-3});
    acp::Flow flow = acp::make_ode_flow(gen, 1e-10);
    auto law = acp::semigroup_law_check(flow, region, t, u);
    auto identity = acp::identity_convergence_scan(flow, region, ts);
    auto recovery = acp::generator_recovery_check(flow, gen.H, region, ts);
    json j{{"law", acp::jsonio::to_json(law)},
           {"identity", acp::jsonio::rows_to_json(identity)},
           {"recovery", acp::jsonio::rows_to_json(recovery)}};
    return emit(j, json_out);
  });
}

acp_status acp_compact_transition(const acp_koenigs* k, const char* region_json,
                                  const char* ts_json, double tol,
                                  char** json_out) {
  return guarded([&]() -> acp_status {
    const std::vector<double> ts = doubles_of(ts_json, {});
    acp::require(!ts.empty(), acp::ErrorCode::usage,
                 "transition scan needs a nonempty ts array");
    auto rows = acp::compact_transition_scan(deref(k, "koenigs").v,
                                             region_of(region_json), ts, tol);
    return emit(json{{"rows", acp::jsonio::rows_to_json(rows)}}, json_out);
  });
}

/* ---- diophantine ------------------------------------------------------------------ */

acp_status acp_kronecker(const char* query_json, char** json_out) {
  return guarded([&]() -> acp_status {
    json j = acp::jsonio::parse(nonnull(query_json, "query JSON"));
    acp::require(j.is_object(), acp::ErrorCode::usage,
                 "query must be a JSON object");
    acp::KroneckerQuery q;
    if (j.contains("frequencies"))
      q.frequencies = doubles_of_json(j.at("frequencies"));
    if (j.contains("targets")) q.targets = doubles_of_json(j.at("targets"));
    if (j.contains("epsilon")) q.epsilon = j.at("epsilon").get<double>();
    if (j.contains("t_max")) q.t_max = j.at("t_max").get<double>();
    auto hit = acp::kronecker_search(q);
    acp::require(hit.has_value(), acp::ErrorCode::not_found,
                 "no t within budget satisfied the query");
    return emit(acp::jsonio::to_json(*hit), json_out);
  });
}

acp_status acp_witnesses(double delta, int count, double t_max,
                         char** json_out) {
  return guarded([&]() -> acp_status {
    auto pairs = acp::witness_pairs(delta, count, t_max);
    return emit(json{{"pairs", acp::jsonio::rows_to_json(pairs)}}, json_out);
  });
}

/* ---- presets ---------------------------------------------------------------------- */

namespace {

acp::presets::PresetOptions options_of(const char* options_json) {
  acp::presets::PresetOptions opt;
  if (!options_json) return opt;
  json j = acp::jsonio::parse(options_json);
  acp::require(j.is_object(), acp::ErrorCode::usage,
               "preset options must be a JSON object");
  if (j.contains("smoke")) opt.smoke = j.at("smoke").get<bool>();
  if (j.contains("delta") && !j.at("delta").is_null())
    opt.delta = j.at("delta").get<double>();
  if (j.contains("count") && !j.at("count").is_null())
    opt.count = j.at("count").get<int>();
  return opt;
}

}  // namespace

acp_status acp_preset_list(char** json_out) {
  return guarded([&]() -> acp_status {
    return emit(json{{"presets", acp::presets::preset_names()}}, json_out);
  });
}

acp_status acp_preset_run(const char* name, const char* options_json,
                          char** json_out) {
  return guarded([&]() -> acp_status {
    auto rep = acp::presets::run_preset(nonnull(name, "preset name"),
                                        options_of(options_json));
    return emit(rep, json_out);
  });
}

acp_status acp_preset_run_all(const char* options_json, char** json_out) {
  return guarded([&]() -> acp_status {
    return emit(acp::presets::run_all(options_of(options_json)), json_out);
  });
}

}  // extern "C"
