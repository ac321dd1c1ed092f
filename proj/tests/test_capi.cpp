#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>

#include <json.hpp>

#include "acplus.h"

namespace {

using nlohmann::json;

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

struct CStr {
  char* p = nullptr;
  CStr() = default;
  CStr(const CStr&) = delete;
  CStr& operator=(const CStr&) = delete;
  ~CStr() { acp_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
  json parsed() const { return json::parse(str()); }
};

struct SeriesH {
  acp_series* p = nullptr;
  SeriesH() = default;
  SeriesH(const SeriesH&) = delete;
  SeriesH& operator=(const SeriesH&) = delete;
  ~SeriesH() { acp_series_free(p); }
};

struct SymbolH {
  acp_symbol* p = nullptr;
  SymbolH() = default;
  SymbolH(const SymbolH&) = delete;
  SymbolH& operator=(const SymbolH&) = delete;
  ~SymbolH() { acp_symbol_free(p); }
};

struct GenH {
  acp_generator* p = nullptr;
  GenH() = default;
  GenH(const GenH&) = delete;
  GenH& operator=(const GenH&) = delete;
  ~GenH() { acp_generator_free(p); }
};

struct KoenigsH {
  acp_koenigs* p = nullptr;
  KoenigsH() = default;
  KoenigsH(const KoenigsH&) = delete;
  KoenigsH& operator=(const KoenigsH&) = delete;
  ~KoenigsH() { acp_koenigs_free(p); }
};

std::complex<double> coeff_at(const json& series, long long n) {
  for (const auto& row : series.at("coeffs")) {
    if (row.at(0).get<long long>() == n)
      return {row.at(1).get<double>(), row.at(2).get<double>()};
  }
  return {0.0, 0.0};
}

std::complex<double> complex_of(const json& pair) {
  return {pair.at(0).get<double>(), pair.at(1).get<double>()};
}

// Matches the h' = 1 + 2^{-s} primitive anchored at h(1) = 0.
std::complex<double> h_shift2(std::complex<double> s) {
  return s - 1.0 - (std::exp(-kLn2 * s) - 0.5) / kLn2;
}

const char* kRegionSmall =
    R"({"m": 3, "sigma_max": 2, "t_window": 2, "grid_step": 0.05})";
const char* kRegionCoarse =
    R"({"m": 3, "sigma_max": 2, "t_window": 1, "grid_step": 0.25})";
const char* kShiftSymbol =
    R"({"characteristic": 1,
        "part": {"type": "series", "series": {"coeffs": [[1, 1, 0]]}}})";
const char* kSmoothSymbol =
    R"({"characteristic": 1,
        "part": {"type": "series",
                 "series": {"coeffs": [[1, 1, 0], [2, 1, 0]]}}})";
const char* kZeta3 = R"({"coeffs": [[1, 1, 0], [2, 1, 0], [3, 1, 0]]})";

}  // namespace

TEST_CASE("version, error text lifecycle, and complex literals") {
  CHECK(std::string(acp_version()) == "0.1.0");

  double re = 0.0, im = 0.0;
  REQUIRE(acp_parse_complex("2+3i", &re, &im) == ACP_OK);
  CHECK(re == 2.0);
  CHECK(im == 3.0);
  CHECK(std::string(acp_last_error()).empty());

  CHECK(acp_parse_complex("-1.5", &re, &im) == ACP_OK);
  CHECK(re == -1.5);
  CHECK(im == 0.0);

  CHECK(acp_parse_complex("2.5i", &re, &im) == ACP_OK);
  CHECK(re == 0.0);
  CHECK(im == 2.5);

  CHECK(acp_parse_complex("-i", &re, &im) == ACP_OK);
  CHECK(re == 0.0);
  CHECK(im == -1.0);

  CHECK(acp_parse_complex("1-i", &re, &im) == ACP_OK);
  CHECK(re == 1.0);
  CHECK(im == -1.0);

  CHECK(acp_parse_complex("1e-3", &re, &im) == ACP_OK);
  CHECK(re == 1e-3);
  CHECK(im == 0.0);

  CHECK(acp_parse_complex("2++3i", &re, &im) == ACP_ERR_PRECONDITION);
  CHECK(!std::string(acp_last_error()).empty());
  CHECK(acp_parse_complex("", &re, &im) == ACP_ERR_PRECONDITION);
  CHECK(acp_parse_complex("2 + 3i", &re, &im) == ACP_ERR_PRECONDITION);
  CHECK(acp_parse_complex("abc", &re, &im) == ACP_ERR_PRECONDITION);

  CHECK(acp_parse_complex(nullptr, &re, &im) == ACP_ERR_USAGE);
  CHECK(acp_parse_complex("1", nullptr, &im) == ACP_ERR_USAGE);
  CHECK(acp_parse_complex("1", &re, nullptr) == ACP_ERR_USAGE);

  // A later success clears the sticky error text.
  CHECK(acp_parse_complex("1", &re, &im) == ACP_OK);
  CHECK(std::string(acp_last_error()).empty());
}

TEST_CASE("series parse, deterministic dump, evaluation, abscissae, sup") {
  SeriesH s;
  REQUIRE(acp_series_parse(kZeta3, &s.p) == ACP_OK);

  CStr d1;
  REQUIRE(acp_series_dump(s.p, &d1.p) == ACP_OK);
  CHECK(!d1.str().empty());
  CHECK(d1.str().back() == '\n');

  SeriesH reparsed;
  REQUIRE(acp_series_parse(d1.p, &reparsed.p) == ACP_OK);
  CStr d2;
  REQUIRE(acp_series_dump(reparsed.p, &d2.p) == ACP_OK);
  CHECK(d1.str() == d2.str());

  CStr ev;
  REQUIRE(acp_series_eval(s.p, 2.0, 0.0, &ev.p) == ACP_OK);
  json j = ev.parsed();
  const double want = 1.0 + 0.25 + 1.0 / 9.0;
  CHECK(j.at("value")[0].get<double>() == doctest::Approx(want).epsilon(1e-15));
  CHECK(std::abs(j.at("value")[1].get<double>()) <= 1e-15);
  CHECK(j.at("tail_bound").is_null());

  CStr ab;
  REQUIRE(acp_series_abscissae(s.p, &ab.p) == ACP_OK);
  json a = ab.parsed();
  CHECK(a.at("polynomial_exact").get<bool>());
  CHECK(a.contains("sigma_c_est"));
  CHECK(a.contains("sigma_a_est"));

  SeriesH c;
  REQUIRE(acp_series_parse(R"({"coeffs": [[1, 2, 0]]})", &c.p) == ACP_OK);
  double sup = 0.0;
  REQUIRE(acp_series_sup_norm(c.p, 1.0, 1.0, 0.5, &sup) == ACP_OK);
  CHECK(sup == 2.0);

  // A truncation bound is reported only where it is valid.
  const char* truncated = R"({
    "coeffs": [[1, 1, 0], [2, 1, 0]],
    "truncation": 2,
    "tail": {"kind": "truncated_with_bound",
             "majorant": 0.25, "valid_from": 1.0}})";
  SeriesH t;
  REQUIRE(acp_series_parse(truncated, &t.p) == ACP_OK);
  CStr above;
  REQUIRE(acp_series_eval(t.p, 2.0, 0.0, &above.p) == ACP_OK);
  CHECK(above.parsed().at("tail_bound").get<double>() == 0.25);
  CStr below;
  REQUIRE(acp_series_eval(t.p, 0.5, 0.0, &below.p) == ACP_OK);
  CHECK(below.parsed().at("tail_bound").is_null());
}

TEST_CASE("series input validation errors") {
  SeriesH s;
  CHECK(acp_series_parse("not json", &s.p) == ACP_ERR_USAGE);
  CHECK(acp_series_parse(R"({"coeffs": 3})", &s.p) == ACP_ERR_USAGE);
  CHECK(acp_series_parse(R"({"coeffs": [[1, 1]]})", &s.p) == ACP_ERR_USAGE);
  CHECK(acp_series_parse(
            R"({"coeffs": [[1, 1, 0]], "tail": {"kind": "mystery"}})",
            &s.p) == ACP_ERR_USAGE);
  CHECK(acp_series_parse(nullptr, &s.p) == ACP_ERR_USAGE);
  CHECK(acp_series_parse(kZeta3, nullptr) == ACP_ERR_USAGE);

  CStr out;
  CHECK(acp_series_dump(nullptr, &out.p) == ACP_ERR_USAGE);
  CHECK(acp_series_eval(nullptr, 2.0, 0.0, &out.p) == ACP_ERR_USAGE);

  SeriesH ok;
  REQUIRE(acp_series_parse(kZeta3, &ok.p) == ACP_OK);
  CHECK(acp_series_eval(ok.p, 2.0, 0.0, nullptr) == ACP_ERR_USAGE);
  double sup = 0.0;
  CHECK(acp_series_sup_norm(nullptr, 1.0, 1.0, 0.5, &sup) == ACP_ERR_USAGE);
  CHECK(acp_series_sup_norm(ok.p, 1.0, 1.0, 0.5, nullptr) == ACP_ERR_USAGE);
}

TEST_CASE("symbol parse, evaluation, and dump round trip") {
  SymbolH b;
  REQUIRE(acp_symbol_parse(R"({"builtin": "example1_not_GA"})", &b.p) ==
          ACP_OK);
  CStr ev;
  REQUIRE(acp_symbol_eval(b.p, 1.0, 0.0, &ev.p) == ACP_OK);
  json v = ev.parsed().at("value");
  CHECK(v[0].get<double>() ==
        doctest::Approx(1.0 + std::exp(-3.0)).epsilon(1e-13));
  CHECK(std::abs(v[1].get<double>()) <= 1e-15);

  CStr d1;
  REQUIRE(acp_symbol_dump(b.p, &d1.p) == ACP_OK);
  SymbolH again;
  REQUIRE(acp_symbol_parse(d1.p, &again.p) == ACP_OK);
  CStr d2;
  REQUIRE(acp_symbol_dump(again.p, &d2.p) == ACP_OK);
  CHECK(d1.str() == d2.str());

  SymbolH shift;
  REQUIRE(acp_symbol_parse(kShiftSymbol, &shift.p) == ACP_OK);
  CStr sv;
  REQUIRE(acp_symbol_eval(shift.p, 2.0, 3.0, &sv.p) == ACP_OK);
  json sval = sv.parsed().at("value");
  CHECK(sval[0].get<double>() == 3.0);
  CHECK(sval[1].get<double>() == 3.0);

  CStr bad;
  CHECK(acp_symbol_eval(shift.p, -1.0, 0.0, &bad.p) == ACP_ERR_PRECONDITION);

  SymbolH none;
  CHECK(acp_symbol_parse(R"({"builtin": "nope"})", &none.p) == ACP_ERR_USAGE);
  CHECK(acp_symbol_parse(R"({"characteristic": 0})", &none.p) ==
        ACP_ERR_USAGE);
  CHECK(acp_symbol_parse("[]", &none.p) == ACP_ERR_USAGE);
}

TEST_CASE("symbol classification and probes through the C interface") {
  SymbolH shift;
  REQUIRE(acp_symbol_parse(kShiftSymbol, &shift.p) == ACP_OK);

  CStr rep;
  REQUIRE(acp_symbol_classify(shift.p, kRegionSmall, "[0.01]", 0.05, &rep.p) ==
          ACP_OK);
  json j = rep.parsed();
  CHECK(j.at("g_infty").at("in_class").get<bool>());
  CHECK(j.at("g").at("in_class").get<bool>());
  CHECK(!j.at("ga").at("violated").get<bool>());
  CHECK(j.at("compactness").at("compact").get<bool>());
  CHECK(j.at("compactness").at("certified").get<bool>());
  CHECK(j.at("compactness").at("epsilon").get<double>() == 1.0);

  CStr comp;
  REQUIRE(acp_symbol_compactness(shift.p, kRegionSmall, &comp.p) == ACP_OK);
  json cj = comp.parsed();
  CHECK(cj.at("compact").get<bool>());
  CHECK(cj.at("observed_inf").get<double>() >= 1.0);

  SymbolH rough;
  REQUIRE(acp_symbol_parse(R"({"builtin": "example1_not_GA"})", &rough.p) ==
          ACP_OK);
  CStr probe;
  const char* probe_region =
      R"({"m": 3, "sigma_max": 2, "t_window": 3, "grid_step": 0.002})";
  REQUIRE(acp_symbol_probe_ga(rough.p, probe_region, "[0.001]", 0.3,
                              &probe.p) == ACP_OK);
  json pj = probe.parsed();
  CHECK(pj.at("violated").get<bool>());
  CHECK(pj.at("omega")[0].get<double>() >= 0.3);
  CHECK(pj.at("points_retained").get<long long>() > 0);

  CStr bad;
  CHECK(acp_symbol_classify(shift.p, "not json", nullptr, 0.05, &bad.p) ==
        ACP_ERR_USAGE);
  CHECK(acp_symbol_probe_ga(shift.p, kRegionSmall, R"({"a": 1})", 0.05,
                            &bad.p) == ACP_ERR_USAGE);
  CHECK(acp_symbol_probe_ga(shift.p, kRegionSmall, "[-0.01]", 0.05, &bad.p) ==
        ACP_ERR_PRECONDITION);
}

TEST_CASE("pullback and composition through the C interface") {
  SeriesH f;
  REQUIRE(acp_series_parse(kZeta3, &f.p) == ACP_OK);
  SymbolH shift;
  REQUIRE(acp_symbol_parse(kShiftSymbol, &shift.p) == ACP_OK);

  CStr comp;
  REQUIRE(acp_compose(f.p, shift.p, 64, &comp.p) == ACP_OK);
  json cj = comp.parsed();
  REQUIRE(cj.contains("discarded_tail_majorant"));
  CHECK(cj.at("discarded_tail_majorant").get<double>() == 0.0);
  const json& cs = cj.at("series");
  CHECK(std::abs(coeff_at(cs, 1) - std::complex<double>(1.0, 0.0)) <= 1e-15);
  CHECK(std::abs(coeff_at(cs, 2) - std::complex<double>(0.5, 0.0)) <= 1e-15);
  CHECK(std::abs(coeff_at(cs, 3) - std::complex<double>(1.0 / 3.0, 0.0)) <=
        1e-14);

  SymbolH smooth;
  REQUIRE(acp_symbol_parse(kSmoothSymbol, &smooth.p) == ACP_OK);
  CStr pb;
  REQUIRE(acp_monomial_pullback(2, smooth.p, 4096, &pb.p) == ACP_OK);
  json pj = pb.parsed();
  const double dropped = pj.at("discarded_tail_majorant").get<double>();
  CHECK(dropped > 0.0);
  CHECK(dropped < 1e-10);
  std::complex<double> c4 = coeff_at(pj.at("series"), 4);
  CHECK(std::abs(c4.real() - (-0.5 * kLn2)) <= 1e-13);
  CHECK(std::abs(c4.imag()) <= 1e-15);

  CStr contr;
  SeriesH mono;
  REQUIRE(acp_series_parse(R"({"coeffs": [[2, 1, 0]]})", &mono.p) == ACP_OK);
  const char* narrow =
      R"({"m": 3, "sigma_max": 1, "t_window": 5, "grid_step": 0.01})";
  REQUIRE(acp_verify_contraction(mono.p, shift.p, narrow, 1e-9, 64,
                                 &contr.p) == ACP_OK);
  json vj = contr.parsed();
  CHECK(vj.at("contractive").get<bool>());
  CHECK(vj.at("source_sup").get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(vj.at("slack").get<double>() > 0.4);

  // Guards: closure too small for the characteristic, and a symbol whose
  // range leaves the half-plane.
  SymbolH c2;
  REQUIRE(acp_symbol_parse(
              R"({"characteristic": 2,
                  "part": {"type": "series",
                           "series": {"coeffs": [[1, 0.5, 0]]}}})",
              &c2.p) == ACP_OK);
  CStr bad;
  CHECK(acp_monomial_pullback(3, c2.p, 8, &bad.p) == ACP_ERR_PRECONDITION);
  CHECK(acp_monomial_pullback(0, shift.p, 64, &bad.p) == ACP_ERR_USAGE);

  SymbolH notmap;
  REQUIRE(acp_symbol_parse(
              R"({"characteristic": 0,
                  "part": {"type": "series",
                           "series": {"coeffs": [[1, 0.1, 0], [2, -0.2, 0]]}}})",
              &notmap.p) == ACP_OK);
  CHECK(acp_compose(f.p, notmap.p, 64, &bad.p) == ACP_ERR_PRECONDITION);
  CHECK(acp_compose(nullptr, shift.p, 64, &bad.p) == ACP_ERR_USAGE);
}

TEST_CASE("generator and Koenigs handles, flows, and scans") {
  GenH g;
  REQUIRE(acp_generator_parse(R"({"builtin": "hprime-1plus2s"})", kRegionSmall,
                              &g.p) == ACP_OK);
  KoenigsH k;
  REQUIRE(acp_koenigs_parse(R"({"builtin": "hprime-1plus2s"})", kRegionSmall,
                            1e-10, &k.p) == ACP_OK);

  CStr ke;
  REQUIRE(acp_koenigs_eval(k.p, 2.0, 1.0, &ke.p) == ACP_OK);
  json kj = ke.parsed();
  std::complex<double> h = complex_of(kj.at("h"));
  CHECK(std::abs(h - std::complex<double>(1.44390323338031244,
                                          1.23045656616444090)) <= 1e-9);
  std::complex<double> hp = complex_of(kj.at("h_prime"));
  std::complex<double> want_hp =
      1.0 + std::exp(-kLn2 * std::complex<double>(2.0, 1.0));
  CHECK(std::abs(hp - want_hp) <= 1e-12);
  std::complex<double> H = complex_of(kj.at("H"));
  CHECK(std::abs(H - 1.0 / want_hp) <= 1e-12);

  CStr kbad;
  CHECK(acp_koenigs_eval(k.p, -1.0, 0.0, &kbad.p) == ACP_ERR_PRECONDITION);

  CStr fo;
  REQUIRE(acp_flow_ode(g.p, nullptr, 2.0, 1.0, 0.5, 1e-10, &fo.p) == ACP_OK);
  json fj = fo.parsed();
  CHECK(fj.at("method").get<std::string>() == "ode");
  CHECK(fj.at("t").get<double>() == 0.5);
  CHECK(fj.at("residual").is_null());
  std::complex<double> reached = complex_of(fj.at("value"));
  CHECK(std::abs(h_shift2(reached) -
                 (h_shift2(std::complex<double>(2.0, 1.0)) + 0.5)) <= 1e-8);

  CStr fo2;
  REQUIRE(acp_flow_ode(g.p, k.p, 2.0, 1.0, 0.5, 1e-10, &fo2.p) == ACP_OK);
  json fj2 = fo2.parsed();
  REQUIRE(fj2.at("residual").is_number());
  CHECK(fj2.at("residual").get<double>() <= 1e-7);

  CStr fk;
  REQUIRE(acp_flow_koenigs(k.p, 1.2, -0.7, 1.0, 1e-10, &fk.p) == ACP_OK);
  json fkj = fk.parsed();
  CHECK(fkj.at("method").get<std::string>() == "koenigs-newton");
  REQUIRE(fkj.at("residual").is_number());
  CHECK(fkj.at("residual").get<double>() <= 1e-10);
  std::complex<double> nk = complex_of(fkj.at("value"));
  CHECK(std::abs(h_shift2(nk) -
                 (h_shift2(std::complex<double>(1.2, -0.7)) + 1.0)) <= 1e-9);

  CStr sg;
  REQUIRE(acp_semigroup_check(g.p, kRegionCoarse, 0.5, 0.5, "[0.5, 0.05]",
                              &sg.p) == ACP_OK);
  json sj = sg.parsed();
  CHECK(sj.at("law").at("points").get<long long>() > 0);
  CHECK(sj.at("law").at("max_residual").get<double>() <= 1e-6);
  REQUIRE(sj.at("identity").size() == 2);
  CHECK(sj.at("identity")[0].at("sup_deviation").get<double>() >=
        sj.at("identity")[1].at("sup_deviation").get<double>());
  REQUIRE(sj.at("recovery").size() == 2);
  CHECK(sj.at("recovery")[1].at("max_error").get<double>() <=
        sj.at("recovery")[0].at("max_error").get<double>());

  KoenigsH koebe;
  REQUIRE(acp_koenigs_parse(R"({"builtin": "koebe-spirallike"})", kRegionSmall,
                            1e-10, &koebe.p) == ACP_OK);
  CStr tr;
  REQUIRE(acp_compact_transition(koebe.p, kRegionCoarse, "[0.5]", 1e-10,
                                 &tr.p) == ACP_OK);
  json tj = tr.parsed();
  REQUIRE(tj.at("rows").size() == 1);
  CHECK(tj.at("rows")[0].at("t").get<double>() == 0.5);
  CHECK(tj.at("rows")[0].at("failures").get<long long>() == 0);
  CHECK(tj.at("rows")[0].at("inf_re").get<double>() >= 0.0);

  CStr bad;
  CHECK(acp_compact_transition(koebe.p, kRegionCoarse, nullptr, 1e-10,
                               &bad.p) == ACP_ERR_USAGE);
  GenH gbad;
  CHECK(acp_generator_parse(R"({"builtin": "who"})", kRegionSmall, &gbad.p) ==
        ACP_ERR_USAGE);
  CHECK(acp_generator_parse(
            R"({"type": "generator_series",
                "series": {"coeffs": [[1, -1, 0]]}})",
            kRegionSmall, &gbad.p) == ACP_ERR_PRECONDITION);
}

TEST_CASE("kronecker queries and witness pairs") {
  CStr hit;
  REQUIRE(acp_kronecker(
              R"({"frequencies": [1.0], "targets": [3.141592653589793],
                  "epsilon": 0.001, "t_max": 10})",
              &hit.p) == ACP_OK);
  json hj = hit.parsed();
  CHECK(hj.at("method").get<std::string>() == "closed-form");
  CHECK(std::abs(std::abs(hj.at("t").get<double>()) - kPi) <= 1e-9);
  CHECK(hj.at("worst_dist").get<double>() <= 1e-12);

  CStr miss;
  CHECK(acp_kronecker(
            R"({"frequencies": [1, 2], "targets": [0, 3.141592653589793],
                "epsilon": 0.01, "t_max": 100})",
            &miss.p) == ACP_ERR_NOT_FOUND);
  CHECK(!std::string(acp_last_error()).empty());

  CStr bad;
  CHECK(acp_kronecker("[1, 2]", &bad.p) == ACP_ERR_USAGE);
  CHECK(acp_kronecker(R"({"frequencies": ["x"]})", &bad.p) == ACP_ERR_USAGE);
  CHECK(acp_kronecker("{}", &bad.p) == ACP_ERR_PRECONDITION);
  CHECK(acp_kronecker(nullptr, &bad.p) == ACP_ERR_USAGE);

  CStr wit;
  REQUIRE(acp_witnesses(0.05, 1, 1e7, &wit.p) == ACP_OK);
  json wj = wit.parsed();
  REQUIRE(wj.at("pairs").size() == 1);
  const json& pair = wj.at("pairs")[0];
  CHECK(complex_of(pair.at("s1")).real() > 0.0);
  CHECK(complex_of(pair.at("s2")).real() > 0.0);
  CHECK(pair.at("gap").get<double>() <= 0.05);
  CHECK(pair.at("value_gap").get<double>() >= 0.41);
  CHECK(std::abs(pair.at("arg_gap").get<double>() - kPi) <= 1e-6);

  CStr wbad;
  CHECK(acp_witnesses(0.2, 1, 1e7, &wbad.p) == ACP_ERR_PRECONDITION);
  CHECK(acp_witnesses(0.05, 0, 1e7, &wbad.p) == ACP_ERR_PRECONDITION);
  CHECK(acp_witnesses(0.05, 1, 1e7, nullptr) == ACP_ERR_USAGE);
}

TEST_CASE("preset registry behind the C interface") {
  CStr list1, list2;
  REQUIRE(acp_preset_list(&list1.p) == ACP_OK);
  REQUIRE(acp_preset_list(&list2.p) == ACP_OK);
  CHECK(list1.str() == list2.str());
  json lj = list1.parsed();
  REQUIRE(lj.at("presets").size() == 10);
  bool has_koebe = false, has_kronecker = false;
  for (const auto& name : lj.at("presets")) {
    if (name.get<std::string>() == "koebe-flow") has_koebe = true;
    if (name.get<std::string>() == "kronecker-23") has_kronecker = true;
  }
  CHECK(has_koebe);
  CHECK(has_kronecker);

  CStr one;
  REQUIRE(acp_preset_run("pullback-closedform", nullptr, &one.p) == ACP_OK);
  json oj = one.parsed();
  CHECK(oj.at("name").get<std::string>() == "pullback-closedform");
  REQUIRE(oj.at("pass").is_boolean());
  CHECK(oj.at("pass").get<bool>());
  CHECK(!oj.at("checks").empty());

  CStr all;
  REQUIRE(acp_preset_run_all(R"({"smoke": true})", &all.p) == ACP_OK);
  json aj = all.parsed();
  CHECK(aj.at("all_pass").get<bool>());
  CHECK(aj.at("presets").size() == 10);

  CStr bad;
  CHECK(acp_preset_run("no-such-preset", nullptr, &bad.p) ==
        ACP_ERR_NOT_FOUND);
  CHECK(acp_preset_run(nullptr, nullptr, &bad.p) == ACP_ERR_USAGE);
  CHECK(acp_preset_run("koebe-flow", "[]", &bad.p) == ACP_ERR_USAGE);
}

TEST_CASE("NULL handles and frees are safe") {
  acp_string_free(nullptr);
  acp_series_free(nullptr);
  acp_symbol_free(nullptr);
  acp_generator_free(nullptr);
  acp_koenigs_free(nullptr);

  CStr out;
  CHECK(acp_flow_ode(nullptr, nullptr, 2.0, 0.0, 0.5, 1e-9, &out.p) ==
        ACP_ERR_USAGE);
  CHECK(acp_flow_koenigs(nullptr, 2.0, 0.0, 0.5, 1e-9, &out.p) ==
        ACP_ERR_USAGE);
  CHECK(acp_koenigs_eval(nullptr, 2.0, 0.0, &out.p) == ACP_ERR_USAGE);
  CHECK(acp_semigroup_check(nullptr, nullptr, 0.5, 0.5, nullptr, &out.p) ==
        ACP_ERR_USAGE);
  CHECK(acp_preset_list(nullptr) == ACP_ERR_USAGE);
}
