#ifndef ACPLUS_H
#define ACPLUS_H

/* C interface to the acplus library.
 *
 * Conventions:
 *   - All structured inputs and outputs are JSON strings (schemas documented
 *     with the library); output strings are heap-allocated, owned by the
 *     caller, and released with acp_string_free.
 *   - Every function returns an acp_status; on failure a thread-local
 *     message is readable through acp_last_error() until the next call on
 *     the same thread.
 *   - Handles are opaque and freed by their matching *_free function; NULL
 *     is always safe to free.  JSON-string parameters documented as optional
 *     accept NULL.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum acp_status {
  ACP_OK = 0,
  ACP_ERR_USAGE = 1,         /* malformed request (bad JSON, unknown name) */
  ACP_ERR_PRECONDITION = 2,  /* documented operation precondition violated */
  ACP_ERR_NOT_FOUND = 3,     /* search/iteration budget exhausted */
  ACP_ERR_INTERNAL = 4       /* numerical failure or unexpected exception */
} acp_status;

const char* acp_version(void);
const char* acp_last_error(void);
void acp_string_free(char* s);

/* "a+bi" literals (also plain reals, and "bi" imaginaries). */
acp_status acp_parse_complex(const char* text, double* re, double* im);

/* ---- truncated Dirichlet series ---------------------------------------- */

typedef struct acp_series acp_series;

acp_status acp_series_parse(const char* series_json, acp_series** out);
void acp_series_free(acp_series* s);
acp_status acp_series_dump(const acp_series* s, char** json_out);
/* {"value": [re, im], "tail_bound": x|null}; requires Re s above the tail's
 * validity line when a truncation bound is attached. */
acp_status acp_series_eval(const acp_series* s, double re, double im,
                           char** json_out);
acp_status acp_series_abscissae(const acp_series* s, char** json_out);
/* Sampled sup of |f| on the segment Re s = sigma, |Im s| <= t_window. */
acp_status acp_series_sup_norm(const acp_series* s, double sigma,
                               double t_window, double grid_step,
                               double* out);

/* ---- composition symbols ------------------------------------------------ */

typedef struct acp_symbol acp_symbol;

acp_status acp_symbol_parse(const char* symbol_json, acp_symbol** out);
void acp_symbol_free(acp_symbol* s);
acp_status acp_symbol_dump(const acp_symbol* s, char** json_out);
acp_status acp_symbol_eval(const acp_symbol* s, double re, double im,
                           char** json_out);
/* region_json optional; deltas_json an array like [1e-2, 1e-3] (optional). */
acp_status acp_symbol_classify(const acp_symbol* s, const char* region_json,
                               const char* deltas_json, double ga_threshold,
                               char** json_out);
acp_status acp_symbol_probe_ga(const acp_symbol* s, const char* region_json,
                               const char* deltas_json, double ga_threshold,
                               char** json_out);
acp_status acp_symbol_compactness(const acp_symbol* s, const char* region_json,
                                  char** json_out);

/* ---- composition --------------------------------------------------------- */

/* {"series": {...}, "discarded_tail_majorant": x} */
acp_status acp_monomial_pullback(int64_t n, const acp_symbol* phi,
                                 int64_t closure, char** json_out);
acp_status acp_compose(const acp_series* f, const acp_symbol* phi,
                       int64_t closure, char** json_out);
acp_status acp_verify_contraction(const acp_series* f, const acp_symbol* phi,
                                  const char* region_json, double tolerance,
                                  int64_t closure, char** json_out);

/* ---- semigroups ----------------------------------------------------------- */

typedef struct acp_generator acp_generator;
typedef struct acp_koenigs acp_koenigs;

/* descriptor_json: {"builtin": name} or {"type": ...} (see descriptors). */
acp_status acp_generator_parse(const char* descriptor_json,
                               const char* region_json, acp_generator** out);
void acp_generator_free(acp_generator* g);
acp_status acp_koenigs_parse(const char* descriptor_json,
                             const char* region_json, double quad_tol,
                             acp_koenigs** out);
void acp_koenigs_free(acp_koenigs* k);

/* {"s": .., "h": .., "h_prime": .., "H": ..} at one point. */
acp_status acp_koenigs_eval(const acp_koenigs* k, double re, double im,
                            char** json_out);

/* One FlowResult as JSON.  koenigs is optional (attaches a residual). */
acp_status acp_flow_ode(const acp_generator* g, const acp_koenigs* koenigs,
                        double re, double im, double t, double tol,
                        char** json_out);
acp_status acp_flow_koenigs(const acp_koenigs* k, double re, double im,
                            double t, double tol, char** json_out);

/* {"law": {...}, "identity": [...], "recovery": [...]}; ts_json optional
 * array of scan times. */
acp_status acp_semigroup_check(const acp_generator* g, const char* region_json,
                               double t, double u, const char* ts_json,
                               char** json_out);
/* {"rows": [...]} inf Re Phi_t rows; ts_json required array. */
acp_status acp_compact_transition(const acp_koenigs* k, const char* region_json,
                                  const char* ts_json, double tol,
                                  char** json_out);

/* ---- diophantine ----------------------------------------------------------- */

/* query: {"frequencies": [...], "targets": [...], "epsilon": x, "t_max": x}.
 * ACP_ERR_NOT_FOUND when no t within budget satisfies the query. */
acp_status acp_kronecker(const char* query_json, char** json_out);
/* {"pairs": [...]} boundary witness pairs. */
acp_status acp_witnesses(double delta, int count, double t_max,
                         char** json_out);

/* ---- presets --------------------------------------------------------------- */

acp_status acp_preset_list(char** json_out);
/* options_json optional: {"smoke": bool, "delta": x, "count": n}. */
acp_status acp_preset_run(const char* name, const char* options_json,
                          char** json_out);
acp_status acp_preset_run_all(const char* options_json, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* ACPLUS_H */
