#include "acplus/json_io.hpp"

#include <map>

#include "acplus/errors.hpp"

namespace acp::jsonio {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw Error(ErrorCode::usage, "json: " + msg);
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

double num(const json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

json opt_to_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("malformed JSON input");
  return j;
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    bad("complex values must be [re, im] arrays");
  return {num(j[0], "re"), num(j[1], "im")};
}

json to_json(const Series& f) {
  json coeffs = json::array();
  for (const auto& [n, a] : f.coeffs())
    coeffs.push_back(json::array({n, a.real(), a.imag()}));
  json tail{{"majorant", f.tail().majorant},
            {"valid_from", f.tail().valid_from},
            {"kind", f.exact() ? "exact_polynomial" : "truncated_with_bound"}};
  return json{{"coeffs", std::move(coeffs)},
              {"truncation", f.truncation()},
              {"tail", std::move(tail)}};
}

Series series_from_json(const json& j) {
  if (!j.is_object()) bad("series must be an object");
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) bad("'coeffs' must be an array");
  std::map<index_t, cplx> map;
  index_t max_n = 1;
  for (const json& row : coeffs) {
    if (!row.is_array() || row.size() != 3)
      bad("coefficient rows must be [n, re, im]");
    index_t n = integer(row[0], "coefficient index");
    map[n] += cplx(num(row[1], "re"), num(row[2], "im"));
    max_n = std::max(max_n, n);
  }
  index_t truncation =
      j.contains("truncation") ? integer(j.at("truncation"), "truncation")
                               : max_n;
  TailInfo tail;
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const json& t = j.at("tail");
    std::string kind = str(field(t, "kind"), "tail kind");
    if (kind == "exact_polynomial") {
      tail.kind = TailKind::exact_polynomial;
    } else if (kind == "truncated_with_bound") {
      tail.kind = TailKind::truncated_with_bound;
      tail.majorant = num(field(t, "majorant"), "tail majorant");
      tail.valid_from = num(field(t, "valid_from"), "tail valid_from");
    } else {
      bad("unknown tail kind '" + kind + "'");
    }
  }
  return Series(std::move(map), truncation, tail);
}

json to_json(const Symbol& phi) {
  json part;
  if (phi.series_backed()) {
    part = json{{"type", "series"}, {"series", to_json(phi.series_part())}};
  } else {
    const MapPart& mp = phi.map_part();
    part = json{{"type", "composite"},
                {"map", mp.map.name()},
                {"inner", to_json(mp.inner)},
                {"offset", to_json(mp.offset)}};
  }
  return json{{"characteristic", phi.characteristic()},
              {"part", std::move(part)}};
}

Symbol symbol_from_json(const json& j) {
  if (!j.is_object()) bad("symbol must be an object");
  if (j.contains("builtin")) return Symbol::builtin(str(j.at("builtin"), "builtin"));
  int c = static_cast<int>(integer(field(j, "characteristic"), "characteristic"));
  const json& part = field(j, "part");
  std::string type = str(field(part, "type"), "part type");
  if (type == "series") return Symbol(c, series_from_json(field(part, "series")));

  cplx offset = 0.0;
  if (part.contains("offset")) offset = complex_from_json(part.at("offset"));
  std::string map_name = str(field(part, "map"), "disc map name");
  auto map = DiscMap::by_name(map_name);
  if (!map) bad("unknown disc map '" + map_name + "'");
  if (type == "periodic") {
    index_t base = integer(field(part, "base"), "base");
    if (base < 2) bad("periodic base must be >= 2");
    return Symbol(c, MapPart{*map, Series::monomial(base, 1.0), offset});
  }
  if (type == "composite")
    return Symbol(c, MapPart{*map, series_from_json(field(part, "inner")), offset});
  bad("unknown part type '" + type + "'");
}

json to_json(const RegionSpec& r) {
  return json{{"m", r.m},
              {"sigma_max", r.sigma_max},
              {"t_window", r.t_window},
              {"grid_step", r.grid_step}};
}

RegionSpec region_from_json(const json& j, RegionSpec defaults) {
  if (j.is_null()) return defaults;
  if (!j.is_object()) bad("region must be an object");
  RegionSpec r = defaults;
  if (j.contains("m")) r.m = num(j.at("m"), "m");
  if (j.contains("sigma_max")) r.sigma_max = num(j.at("sigma_max"), "sigma_max");
  if (j.contains("t_window")) r.t_window = num(j.at("t_window"), "t_window");
  if (j.contains("grid_step")) r.grid_step = num(j.at("grid_step"), "grid_step");
  r.validate();
  return r;
}

json to_json(const EvaluationResult& r) {
  return json{{"value", to_json(r.value)},
              {"tail_bound", opt_to_json(r.tail_bound)}};
}

json to_json(const AbscissaeReport& r) {
  return json{{"sigma_c_est", opt_to_json(r.sigma_c_est)},
              {"sigma_a_est", opt_to_json(r.sigma_a_est)},
              {"sigma_u_lo", opt_to_json(r.sigma_u_lo)},
              {"sigma_u_hi", opt_to_json(r.sigma_u_hi)},
              {"samples_used", r.samples_used},
              {"polynomial_exact", r.polynomial_exact}};
}

json to_json(const PointWitness& w) {
  return json{{"s", to_json(w.s)}, {"re_phi", w.re_phi}};
}

json to_json(const MembershipReport& r) {
  return json{{"in_class", r.in_class},
              {"grid_min", r.grid_min},
              {"counterexample",
               r.counterexample ? to_json(*r.counterexample) : json(nullptr)}};
}

json to_json(const ProbePair& p) {
  return json{{"s1", to_json(p.s1)},
              {"s2", to_json(p.s2)},
              {"gap", p.gap},
              {"value_gap", p.value_gap}};
}

json to_json(const ContinuityProbe& r) {
  json pairs = json::array();
  for (const auto& p : r.worst_pairs)
    pairs.push_back(p ? to_json(*p) : json(nullptr));
  return json{{"region", to_json(r.region)},
              {"points_retained", r.points_retained},
              {"deltas", r.deltas},
              {"omega", r.omega},
              {"worst_pairs", std::move(pairs)},
              {"threshold", r.threshold},
              {"violated", r.violated}};
}

json to_json(const CompactnessReport& r) {
  return json{{"compact", r.compact},
              {"epsilon", r.epsilon},
              {"certified", r.certified},
              {"observed_inf", r.observed_inf},
              {"argmin", to_json(r.argmin)}};
}

json to_json(const ClassReport& r) {
  return json{{"g_infty", to_json(r.g_infty)},
              {"g", to_json(r.g)},
              {"ga", to_json(r.ga)},
              {"compactness", to_json(r.compactness)}};
}

json to_json(const PullbackResult& r) {
  return json{{"series", to_json(r.series)},
              {"discarded_tail_majorant", r.dropped_mass}};
}

json to_json(const ContractionReport& r) {
  return json{{"composed_sup", r.composed_sup},
              {"source_sup", r.source_sup},
              {"slack", r.slack},
              {"contractive", r.contractive}};
}

json to_json(const FlowResult& r) {
  return json{{"start", to_json(r.start)},
              {"t", r.t},
              {"value", to_json(r.value)},
              {"residual", opt_to_json(r.residual)},
              {"method", r.method},
              {"work", r.work}};
}

json to_json(const LawCheckReport& r) {
  return json{{"t", r.t},
              {"u", r.u},
              {"points", r.points},
              {"max_residual", r.max_residual},
              {"arg_worst", to_json(r.arg_worst)}};
}

json to_json(const IdentityScanRow& r) {
  return json{{"t", r.t},
              {"sup_deviation", r.sup_deviation},
              {"argmax", to_json(r.argmax)}};
}

json to_json(const RecoveryRow& r) {
  return json{{"t", r.t},
              {"max_error", r.max_error},
              {"argmax", to_json(r.argmax)}};
}

json to_json(const TransitionRow& r) {
  return json{{"t", r.t},
              {"inf_re", r.inf_re},
              {"argmin", to_json(r.argmin)},
              {"failures", r.failures}};
}

json to_json(const KroneckerHit& r) {
  return json{{"t", r.t}, {"worst_dist", r.worst_dist}, {"method", r.method}};
}

json to_json(const RecurrencePoint& r) {
  return json{{"t", r.t},
              {"value", to_json(r.value)},
              {"error", r.error},
              {"epsilon", r.epsilon}};
}

json to_json(const WitnessPair& r) {
  return json{{"s1", to_json(r.s1)},
              {"s2", to_json(r.s2)},
              {"gap", r.gap},
              {"value_gap", r.value_gap},
              {"arg_gap", r.arg_gap}};
}

}  // namespace acp::jsonio
