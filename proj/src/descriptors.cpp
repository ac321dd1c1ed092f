#include "acplus/descriptors.hpp"

#include <map>

#include "acplus/errors.hpp"

namespace acp {

namespace {

using jsonio::json;

json builtin_descriptor(const std::string& name) {
  if (name == "hprime-1plus2s")
    return json{{"type", "h_prime_series"},
                {"series",
                 {{"coeffs", json::array({json::array({1, 1.0, 0.0}),
                                          json::array({2, 1.0, 0.0})})}}}};
  if (name == "hprime-1over-1minus2s")
    return json{{"type", "generator_series"},
                {"series",
                 {{"coeffs", json::array({json::array({1, 1.0, 0.0}),
                                          json::array({2, -1.0, 0.0})})}}}};
  if (name == "koebe-spirallike")
    return json{{"type", "spirallike"},
                {"map", "koebe"},
                {"c", json::array({1.0, 0.0})},
                {"base", 2}};
  if (name == "slit-spirallike")
    return json{{"type", "spirallike"},
                {"map", "slit_disc"},
                {"c", json::array({1.0, 0.0})},
                {"base", 2}};
  throw Error(ErrorCode::usage, "unknown builtin descriptor '" + name + "'");
}

json resolve(const json& j) {
  if (!j.is_object())
    throw Error(ErrorCode::usage, "descriptor must be a JSON object");
  if (j.contains("builtin")) {
    require(j.at("builtin").is_string(), ErrorCode::usage,
            "'builtin' must be a string");
    return builtin_descriptor(j.at("builtin").get<std::string>());
  }
  return j;
}

std::string type_of(const json& d) {
  if (!d.contains("type") || !d.at("type").is_string())
    throw Error(ErrorCode::usage, "descriptor needs a 'type' string");
  return d.at("type").get<std::string>();
}

SpirallikeSpec spirallike_of(const json& d) {
  SpirallikeSpec spec;
  std::string map_name = "koebe";
  if (d.contains("map")) {
    require(d.at("map").is_string(), ErrorCode::usage,
            "'map' must be a string");
    map_name = d.at("map").get<std::string>();
  }
  auto map = DiscMap::by_name(map_name);
  require(map.has_value(), ErrorCode::usage,
          "unknown disc map '" + map_name + "'");
  spec.f = *map;
  spec.c = d.contains("c") ? jsonio::complex_from_json(d.at("c")) : cplx(1.0);
  if (d.contains("base")) {
    require(d.at("base").is_number_integer(), ErrorCode::usage,
            "'base' must be an integer");
    spec.base = d.at("base").get<int>();
  }
  return spec;
}

}  // namespace

bool descriptor_is_spirallike(const json& j) {
  json d = resolve(j);
  return type_of(d) == "spirallike";
}

GeneratorSpec generator_from_descriptor(const json& j,
                                        const RegionSpec& region) {
  json d = resolve(j);
  std::string type = type_of(d);
  if (type == "h_prime_series") {
    Series hp = jsonio::series_from_json(d.contains("series") ? d.at("series")
                                                              : json(nullptr));
    auto h_prime = [hp](cplx s) { return hp.evaluate(s).value; };
    auto H = [hp](cplx s) { return 1.0 / hp.evaluate(s).value; };
    return validate_generator(H, region, h_prime);
  }
  if (type == "generator_series") {
    Series gs = jsonio::series_from_json(d.contains("series") ? d.at("series")
                                                              : json(nullptr));
    auto H = [gs](cplx s) { return gs.evaluate(s).value; };
    auto h_prime = [gs](cplx s) { return 1.0 / gs.evaluate(s).value; };
    return validate_generator(H, region, h_prime);
  }
  if (type == "spirallike")
    return generator_from_koenigs(spirallike_koenigs(spirallike_of(d)), region);
  throw Error(ErrorCode::usage, "unknown descriptor type '" + type + "'");
}

KoenigsSpec koenigs_from_descriptor(const json& j, const RegionSpec& region,
                                    double quad_tol) {
  json d = resolve(j);
  if (type_of(d) == "spirallike")
    return spirallike_koenigs(spirallike_of(d));
  return koenigs_from_generator(generator_from_descriptor(d, region), quad_tol);
}

}  // namespace acp
