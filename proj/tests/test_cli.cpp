// End-to-end tests for the `acp` binary.  The ctest harness points ACP_BIN
// at the built executable; every case spawns it as a real subprocess and
// inspects exit codes, stdout JSON, and CSV side outputs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult raw_run(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  if (st != -1 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
  return r;
}

struct Fixtures {
  std::string bin;
  std::string dir;
  std::string zeta3;
  std::string zeta50;
  std::string const2;
  std::string shift_symbol;
  std::string smooth_symbol;
  std::string bad_json;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
  REQUIRE(out.good());
}

const Fixtures& fx() {
  static const Fixtures f = [] {
    Fixtures x;
    const char* bin = std::getenv("ACP_BIN");
    REQUIRE_MESSAGE(bin != nullptr,
                    "ACP_BIN must point at the acp executable");
    x.bin = bin;

    std::string tmpl =
        (std::filesystem::temp_directory_path() / "acp-cli-XXXXXX").string();
    std::vector<char> buf(tmpl.begin(), tmpl.end());
    buf.push_back('\0');
    REQUIRE(mkdtemp(buf.data()) != nullptr);
    x.dir = buf.data();

    x.zeta3 = x.dir + "/zeta3.json";
    write_file(x.zeta3, R"({"coeffs": [[1,1,0],[2,1,0],[3,1,0]]})");

    json rows = json::array();
    for (int n = 1; n <= 50; ++n) rows.push_back(json::array({n, 1.0, 0.0}));
    x.zeta50 = x.dir + "/zeta50.json";
    write_file(x.zeta50, json{{"coeffs", rows}}.dump());

    x.const2 = x.dir + "/const2.json";
    write_file(x.const2, R"({"coeffs": [[1,2,0]]})");

    x.shift_symbol = x.dir + "/shift.json";
    write_file(x.shift_symbol,
               R"({"characteristic": 1,
                   "part": {"type": "series",
                            "series": {"coeffs": [[1,1,0]]}}})");

    x.smooth_symbol = x.dir + "/smooth.json";
    write_file(x.smooth_symbol,
               R"({"characteristic": 1,
                   "part": {"type": "series",
                            "series": {"coeffs": [[1,1,0],[2,1,0]]}}})");

    x.bad_json = x.dir + "/bad.json";
    write_file(x.bad_json, "{ this is not json");
    return x;
  }();
  return f;
}

RunResult run(const std::string& args) { return raw_run(fx().bin + " " + args); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("eval prints series and symbol values deterministically") {
  RunResult r1 = run("eval --series " + fx().zeta50 + " --s 2+0i");
  REQUIRE(r1.code == 0);
  json j = json::parse(r1.out);
  double want = 0.0;
  for (int n = 50; n >= 1; --n) want += 1.0 / (double(n) * double(n));
  CHECK(std::abs(j.at("value")[0].get<double>() - want) <= 1e-13);
  CHECK(std::abs(j.at("value")[0].get<double>() - 1.62513273362152931) <=
        1e-12);
  CHECK(std::abs(j.at("value")[1].get<double>()) <= 1e-15);
  CHECK(j.at("tail_bound").is_null());

  RunResult r2 = run("eval --series " + fx().zeta50 + " --s 2+0i");
  CHECK(r2.code == 0);
  CHECK(r1.out == r2.out);

  RunResult rs = run("eval --symbol example1_not_GA --s 1+0i");
  REQUIRE(rs.code == 0);
  json sj = json::parse(rs.out);
  CHECK(std::abs(sj.at("value")[0].get<double>() - (1.0 + std::exp(-3.0))) <=
        1e-12);
}

TEST_CASE("exit codes separate usage, precondition, and not-found") {
  // 1: the CLI itself rejects the invocation.
  CHECK(run("frobnicate").code == 1);
  CHECK(run("eval").code == 1);
  CHECK(run("eval --series " + fx().zeta3 + " --symbol " + fx().shift_symbol +
            " --s 1+0i")
            .code == 1);
  CHECK(run("preset").code == 1);

  // 2: malformed inputs and violated preconditions.
  CHECK(run("eval --s 2+0i").code == 2);
  CHECK(run("eval --series " + fx().zeta3 + " --s 2++3i").code == 2);
  CHECK(run("eval --series " + fx().dir + "/missing.json --s 2+0i").code == 2);
  CHECK(run("abscissae --series " + fx().bad_json).code == 2);
  CHECK(run("eval --symbol not_a_builtin --s 1+0i").code == 2);
  CHECK(run("witnesses --delta 0.5 --count 1").code == 2);

  // 3: honest search failure.
  CHECK(run("preset no-such-preset").code == 3);
  CHECK(run("kronecker --freq 1 2 --target 0 3.141592653589793 "
            "--epsilon 0.01 --t-max 100")
            .code == 3);
}

TEST_CASE("pullback reports coefficients and the discarded tail") {
  RunResult r =
      run("pullback --n 2 --symbol " + fx().smooth_symbol + " --closure 4096");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.contains("discarded_tail_majorant"));
  const double dropped = j.at("discarded_tail_majorant").get<double>();
  CHECK(dropped > 0.0);
  CHECK(dropped < 1e-10);
  bool saw4 = false;
  for (const auto& row : j.at("series").at("coeffs")) {
    if (row[0].get<long long>() == 4) {
      saw4 = true;
      CHECK(std::abs(row[1].get<double>() - (-0.34657359027997264)) <= 1e-13);
      CHECK(std::abs(row[2].get<double>()) <= 1e-15);
    }
  }
  CHECK(saw4);
}

TEST_CASE("compose through symbol files") {
  RunResult r = run("compose --series " + fx().zeta3 + " --symbol " +
                    fx().shift_symbol + " --closure 64");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("discarded_tail_majorant").get<double>() == 0.0);
  for (const auto& row : j.at("series").at("coeffs")) {
    const long long n = row[0].get<long long>();
    CHECK(std::abs(row[1].get<double>() - 1.0 / double(n)) <=
          1e-14 * (1.0 + 1.0 / double(n)));
    CHECK(std::abs(row[2].get<double>()) <= 1e-15);
  }
}

TEST_CASE("norm prints the sampled sup") {
  RunResult r = run("norm --series " + fx().const2 +
                    " --sigma 1 --grid-t-window 1 --grid-step 0.5");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("sup_norm").get<double>() == 2.0);
  CHECK(j.at("sigma").get<double>() == 1.0);
}

TEST_CASE("classify verdict for an affine shift") {
  RunResult r = run("classify --symbol " + fx().shift_symbol +
                    " --delta 0.01 --ga-threshold 0.05 --grid-sigma-max 2 "
                    "--grid-t-window 2 --grid-step 0.05");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("g_infty").at("in_class").get<bool>());
  CHECK(j.at("g").at("in_class").get<bool>());
  CHECK(!j.at("ga").at("violated").get<bool>());
  CHECK(j.at("compactness").at("compact").get<bool>());
  CHECK(j.at("compactness").at("epsilon").get<double>() == 1.0);
}

TEST_CASE("flow writes a CSV trace next to the JSON report") {
  const std::string csv = fx().dir + "/flow.csv";
  RunResult r = run("flow --descriptor hprime-1plus2s --s 2+1i --t 0.5 "
                    "--method ode --grid-sigma-max 2 --grid-t-window 2 "
                    "--grid-step 0.05 --out " +
                    csv);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.at("rows").size() == 1);
  const json& row = j.at("rows")[0];
  CHECK(row.at("method").get<std::string>() == "ode");
  CHECK(row.at("t").get<double>() == 0.5);
  REQUIRE(row.at("residual").is_number());
  CHECK(row.at("residual").get<double>() <= 1e-7);

  const std::string text = slurp(csv);
  CHECK(first_line(text) == "t,s_re,s_im,phi_re,phi_im,residual,method");
  CHECK(count_lines(text) == 2);
  CHECK(text.find("0.5,2,1,") != std::string::npos);
  CHECK(text.find(",ode\n") != std::string::npos);
}

TEST_CASE("koenigs evaluation matches the anchored primitive") {
  RunResult r = run("koenigs --descriptor hprime-1plus2s --s 2+1i "
                    "--grid-sigma-max 2 --grid-t-window 2 --grid-step 0.05");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(std::abs(j.at("h")[0].get<double>() - 1.44390323338031244) <= 1e-9);
  CHECK(std::abs(j.at("h")[1].get<double>() - 1.23045656616444090) <= 1e-9);
}

TEST_CASE("probe-ga writes oscillation rows as CSV") {
  const std::string csv = fx().dir + "/probe.csv";
  RunResult r = run("probe-ga --symbol " + fx().smooth_symbol +
                    " --delta 0.01 --ga-threshold 0.1 --grid-sigma-max 2 "
                    "--grid-t-window 1 --grid-step 0.05 --out " +
                    csv);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(!j.at("violated").get<bool>());
  CHECK(j.at("points_retained").get<long long>() > 0);

  const std::string text = slurp(csv);
  CHECK(first_line(text) == "delta,omega,s1_re,s1_im,s2_re,s2_im");
  CHECK(count_lines(text) == 2);
  CHECK(text.substr(text.find('\n') + 1, 5) == "0.01,");
}

TEST_CASE("witnesses writes pair rows as CSV and honors the budget cap") {
  const std::string csv = fx().dir + "/witnesses.csv";
  RunResult r =
      run("witnesses --delta 0.05 --count 1 --t-max 1e7 --out " + csv);
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  REQUIRE(j.at("pairs").size() == 1);
  CHECK(j.at("pairs")[0].at("gap").get<double>() <= 0.05);
  CHECK(j.at("pairs")[0].at("value_gap").get<double>() >= 0.41);

  const std::string text = slurp(csv);
  CHECK(first_line(text) == "s1_re,s1_im,s2_re,s2_im,gap,value_gap");
  CHECK(count_lines(text) == 2);

  RunResult capped = raw_run("DSL_BUDGET_SECONDS=1e-9 " + fx().bin +
                             " witnesses --delta 0.01 --count 2");
  CHECK(capped.code == 3);
}

TEST_CASE("kronecker default demo is reproducible") {
  RunResult r = run("kronecker");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("method").get<std::string>() == "ostrowski");
  CHECK(std::abs(j.at("t").get<double>() - 1386.9064206793616) <= 1e-9);
  CHECK(j.at("worst_dist").get<double>() <= 0.01 * (1.0 + 1e-9) + 1e-15);

  RunResult again = run("kronecker");
  CHECK(again.out == r.out);
}

TEST_CASE("semigroup-check summarizes law, identity, and recovery") {
  RunResult r = run("semigroup-check --descriptor hprime-1plus2s --t 0.5 "
                    "--u 0.5 --ts 0.5 0.05 --grid-sigma-max 2 "
                    "--grid-t-window 1 --grid-step 0.25");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("law").at("points").get<long long>() > 0);
  CHECK(j.at("law").at("max_residual").get<double>() <= 1e-6);
  REQUIRE(j.at("identity").size() == 2);
  CHECK(j.at("identity")[0].at("sup_deviation").get<double>() >=
        j.at("identity")[1].at("sup_deviation").get<double>());
  REQUIRE(j.at("recovery").size() == 2);
}

TEST_CASE("preset registry listing and a smoke run") {
  RunResult r1 = run("preset --list");
  REQUIRE(r1.code == 0);
  json j = json::parse(r1.out);
  CHECK(j.at("presets").size() == 10);

  RunResult r2 = run("preset --list");
  CHECK(r1.out == r2.out);

  RunResult smoke = run("preset identity-convergence --smoke");
  REQUIRE(smoke.code == 0);
  json sj = json::parse(smoke.out);
  CHECK(sj.at("pass").get<bool>());
  CHECK(sj.at("name").get<std::string>() == "identity-convergence");
}
