#pragma once
// JSON (de)serialization for everything that crosses the C API boundary:
// series, symbols, sampling regions, and the report structs.  Output is
// deterministic (the underlying library stores objects with sorted keys and
// prints shortest round-trip doubles), so identical inputs give byte-identical
// dumps.  Complex numbers are encoded as two-element arrays [re, im].
//
// Input schemas:
//   series  {"coeffs": [[n, re, im], ...], "truncation": N,
//            "tail": {"kind": "exact_polynomial" | "truncated_with_bound",
//                     "majorant": x, "valid_from": y}}
//           ("tail" optional: default exact; "truncation" optional: defaults
//            to the largest index present)
//   symbol  {"builtin": "<registry name>"}
//        or {"characteristic": c, "part": {"type": "series", "series": {...}}}
//        or {"characteristic": c, "part": {"type": "periodic", "map": "<disc
//            map>", "base": k, "offset": [re, im]}}
//        or {"characteristic": c, "part": {"type": "composite", "map": "...",
//            "inner": {series}, "offset": [re, im]}}
//   region  {"m": .., "sigma_max": .., "t_window": .., "grid_step": ..}
//           (all fields optional; missing ones keep the supplied defaults)
//
// Malformed input throws Error(usage) for shape problems; semantic violations
// surface as Error(precondition) from the constructors themselves.

#include <string>
#include <vector>

#include <json.hpp>

#include "acplus/abscissae.hpp"
#include "acplus/composition.hpp"
#include "acplus/diophantine.hpp"
#include "acplus/gridscan.hpp"
#include "acplus/semigroup.hpp"
#include "acplus/series.hpp"
#include "acplus/symbol.hpp"

namespace acp::jsonio {

using json = nlohmann::json;

// Deterministic text form (2-space indent, trailing newline).
std::string dump(const json& j);
// Parse; throws Error(usage) on malformed JSON.
json parse(const std::string& text);

json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const Series& f);
Series series_from_json(const json& j);

json to_json(const Symbol& phi);
Symbol symbol_from_json(const json& j);

json to_json(const RegionSpec& r);
RegionSpec region_from_json(const json& j, RegionSpec defaults = {});

json to_json(const EvaluationResult& r);
json to_json(const AbscissaeReport& r);
json to_json(const PointWitness& w);
json to_json(const MembershipReport& r);
json to_json(const ProbePair& p);
json to_json(const ContinuityProbe& r);
json to_json(const CompactnessReport& r);
json to_json(const ClassReport& r);
json to_json(const PullbackResult& r);
json to_json(const ContractionReport& r);
json to_json(const FlowResult& r);
json to_json(const LawCheckReport& r);
json to_json(const IdentityScanRow& r);
json to_json(const RecoveryRow& r);
json to_json(const TransitionRow& r);
json to_json(const KroneckerHit& r);
json to_json(const RecurrencePoint& r);
json to_json(const WitnessPair& r);

template <class T>
json rows_to_json(const std::vector<T>& rows) {
  json arr = json::array();
  for (const T& r : rows) arr.push_back(to_json(r));
  return arr;
}

}  // namespace acp::jsonio
