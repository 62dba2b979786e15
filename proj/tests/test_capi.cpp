// Exercises the C API through the public header only, then checks that the
// command-line tool prints exactly what the API returns.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>
#include <vector>

#include "sdio/sdio.h"

using Json = nlohmann::json;

namespace {

struct Owned {
  char* s = nullptr;
  ~Owned() { sdio_string_free(s); }
  std::string str() const { return s ? s : ""; }
  Json json() const { return Json::parse(str()); }
};

struct Primes {
  sdio_primeset* p = nullptr;
  explicit Primes(const char* text) { REQUIRE(sdio_primeset_parse(text, &p) == SDIO_OK); }
  ~Primes() { sdio_primeset_free(p); }
};

struct Poly {
  sdio_poly* p = nullptr;
  explicit Poly(const char* text) { REQUIRE(sdio_poly_parse(text, &p) == SDIO_OK); }
  ~Poly() { sdio_poly_free(p); }
};

void collect(const char* json, void* user) { static_cast<std::vector<std::string>*>(user)->push_back(json); }

struct Run {
  int exit_code;
  std::vector<std::string> lines;
};

std::string quote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

Run cli(const std::vector<std::string>& args) {
  std::string cmd = quote(SDIO_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, {}};
  std::size_t start = 0;
  while (start < out.size()) {
    std::size_t end = out.find('\n', start);
    if (end == std::string::npos) end = out.size();
    r.lines.push_back(out.substr(start, end - start));
    start = end + 1;
  }
  return r;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sdio_version()) == "1.0.0");
  CHECK(std::string(sdio_status_name(SDIO_OK)) == "OK");
  CHECK(std::string(sdio_status_name(SDIO_ERR_NON_DISTINCT_NODES)) == "NonDistinctNodes");
  sdio_string_free(nullptr);
}

TEST_CASE("handles reject bad input") {
  sdio_primeset* p = nullptr;
  CHECK(sdio_primeset_parse("2,4", &p) == SDIO_ERR_INVALID_INPUT);
  CHECK(p == nullptr);
  CHECK(std::string(sdio_last_error()).find("not prime") != std::string::npos);
  CHECK(sdio_primeset_parse("2,z", &p) == SDIO_ERR_PARSE);
  CHECK(sdio_primeset_parse(nullptr, &p) == SDIO_ERR_INVALID_INPUT);
  CHECK(sdio_primeset_load("/no/such/file", &p) == SDIO_ERR_INVALID_INPUT);
  Primes ok("3,2");
  CHECK(sdio_primeset_size(ok.p) == 2);

  sdio_poly* f = nullptr;
  CHECK(sdio_poly_parse("1/2,1", &f) == SDIO_ERR_PARSE);
  Poly g("-1,-1,1");
  CHECK(sdio_poly_degree(g.p) == 2);
  CHECK(sdio_poly_degree(nullptr) == -1);
}

TEST_CASE("smooth") {
  Primes S("3,193");
  Owned out;
  REQUIRE(sdio_smooth(S.p, "3017169", &out.s) == SDIO_OK);
  Json j = out.json();
  CHECK(j["cmd"] == "smooth");
  CHECK(j["ok"] == true);
  CHECK(j["exponents"] == Json::array({4, 2}));

  Primes S23("2,3");
  Owned neg;
  CHECK(sdio_smooth(S23.p, "10", &neg.s) == SDIO_NEGATIVE);
  CHECK(neg.json()["ok"] == false);
  Owned bad;
  CHECK(sdio_smooth(S23.p, "0", &bad.s) == SDIO_ERR_INVALID_INPUT);
  CHECK(bad.json()["error"] == "InvalidInput");
  CHECK(sdio_smooth(nullptr, "4", nullptr) == SDIO_ERR_INVALID_INPUT);
}

TEST_CASE("enumerate streams ascending values") {
  std::vector<std::string> lines;
  Primes S("2,3");
  REQUIRE(sdio_enumerate(S.p, "10", collect, &lines) == SDIO_OK);
  std::vector<long> values;
  for (const auto& l : lines) values.push_back(Json::parse(l)["value"].get<long>());
  CHECK(values == std::vector<long>{1, 2, 3, 4, 6, 8, 9});
  lines.clear();
  REQUIRE(sdio_enumerate(S.p, "100", collect, &lines) == SDIO_OK);
  CHECK(lines.size() == 20);
  lines.clear();
  CHECK(sdio_enumerate(S.p, "0", collect, &lines) == SDIO_ERR_INVALID_INPUT);
  REQUIRE(lines.size() == 1);
  CHECK(Json::parse(lines[0])["ok"] == false);
}

TEST_CASE("search, verify and pairs") {
  Primes S("2,3");
  Poly f("-1,1");
  std::vector<std::string> lines;
  sdio_search_options opts{"10", 3, 1, 0, 1, nullptr, nullptr};
  REQUIRE(sdio_search(S.p, f.p, &opts, collect, &lines) == SDIO_OK);
  REQUIRE(lines.size() == 2);
  CHECK(Json::parse(lines[0])["values"] == Json::array({1, 3, 5}));
  CHECK(Json::parse(lines[1])["values"] == Json::array({1, 5, 7}));
  CHECK(Json::parse(lines[0])["witnesses"][0] == Json::parse(R"({"i":1,"j":2,"s":4,"exponents":[2,0]})"));

  Poly c("5");
  lines.clear();
  CHECK(sdio_search(S.p, c.p, &opts, collect, &lines) == SDIO_ERR_CONSTANT_POLYNOMIAL);
  CHECK(Json::parse(lines.at(0))["error"] == "ConstantPolynomial");

  Owned ok, bad;
  Poly q("-1,-1,1");
  REQUIRE(sdio_verify(S.p, q.p, "1,5,11", &ok.s) == SDIO_OK);
  std::vector<long> ws;
  const Json verified = ok.json();
  for (const auto& w : verified["witnesses"]) ws.push_back(w["s"].get<long>());
  CHECK(ws == std::vector<long>{3, 4, 8});
  REQUIRE(sdio_verify(S.p, f.p, "1,2,4", &bad.s) == SDIO_NEGATIVE);
  Json failure = bad.json()["failure"];
  CHECK(failure["a"] == 1);
  CHECK(failure["b"] == 4);
  CHECK(failure["reason"] == "NoSUnitPreimage");

  lines.clear();
  REQUIRE(sdio_pairs(S.p, f.p, "3", collect, &lines) == SDIO_OK);
  CHECK(lines.size() == 3);
}

TEST_CASE("big values print as strings, small as numbers") {
  Primes S("2");
  Owned out;
  REQUIRE(sdio_smooth(S.p, "1267650600228229401496703205376", &out.s) == SDIO_OK);
  CHECK(out.json()["n"] == "1267650600228229401496703205376");
  CHECK(out.json()["exponents"] == Json::array({100}));
}

TEST_CASE("construct") {
  Owned a;
  REQUIRE(sdio_construct("1,2,3", "2,3,4", nullptr, &a.s) == SDIO_OK);
  CHECK(a.json()["g"] == "6,-4,1");
  CHECK(a.json()["d"] == 1);
  CHECK(a.json()["scaled_tuple"] == Json::array({1, 2, 3}));
  Owned b;
  REQUIRE(sdio_construct("1,1,1", "1,2,4", nullptr, &b.s) == SDIO_OK);
  CHECK(b.json()["g"] == "1");
  Owned c;
  CHECK(sdio_construct("1,2,3", "2,2,4", nullptr, &c.s) == SDIO_ERR_NON_DISTINCT_NODES);
  CHECK(c.json()["error"] == "NonDistinctNodes");
  Primes S("2,3");
  Owned d;
  REQUIRE(sdio_construct("1,2,5", "2,3,8", S.p, &d.s) == SDIO_OK);
  CHECK(d.json()["verified"] == true);
  Owned e;
  CHECK(sdio_construct("1,2,5", "2,3,10", S.p, &e.s) == SDIO_ERR_INVALID_INPUT);
}

TEST_CASE("polynomial commands") {
  Owned h1, h2, sq, sc, co, ev, in;
  Poly f("-1,1"), x("0,1");
  REQUIRE(sdio_check_poly(f.p, &h1.s) == SDIO_OK);
  CHECK(h1.json()["satisfies_theorem"] == true);
  REQUIRE(sdio_check_poly(x.p, &h2.s) == SDIO_OK);
  CHECK(h2.json()["nonzero_at_origin"] == false);
  Poly cube("1,3,3,1");
  REQUIRE(sdio_squarefree(cube.p, &sq.s) == SDIO_OK);
  CHECK(sq.json()["parts"][0]["multiplicity"] == 3);
  CHECK(sq.json()["parts"][0]["factor"] == "1,1");
  REQUIRE(sdio_scaling(cube.p, "2", &sc.s) == SDIO_OK);
  CHECK(sc.json()["holds"] == false);
  REQUIRE(sdio_compose(f.p, "2", 3, &co.s) == SDIO_OK);
  CHECK(co.json()["result"] == "-1,0,0,2");
  REQUIRE(sdio_eval("-2985984,1", "3017169", &ev.s) == SDIO_OK);
  CHECK(ev.json()["value"] == "31185");
  REQUIRE(sdio_interpolate("2:2,3:3,4:6", &in.s) == SDIO_OK);
  CHECK(in.json()["g"] == "6,-4,1");
  Owned bad;
  CHECK(sdio_scaling(cube.p, "-1", &bad.s) == SDIO_ERR_INVALID_INPUT);
}

TEST_CASE("dependence, rho, family and audit") {
  Primes S2("2");
  Owned dep;
  REQUIRE(sdio_dependence(S2.p, "2:4,8:32,32:256", &dep.s) == SDIO_OK);
  CHECK(dep.json()["k"] == 3);
  CHECK(dep.json()["l"] == -2);
  CHECK(dep.json()["g"] == "1/2");
  Owned one;
  CHECK(sdio_dependence(S2.p, "2:4", &one.s) == SDIO_ERR_INSUFFICIENT_DATA);

  Owned rho;
  REQUIRE(sdio_rho(S2.p, dep.str().c_str(), "2:4", "8:32", &rho.s) == SDIO_OK);
  CHECK(rho.json()["rho"] == "2");

  Primes S23("2,3");
  Owned fam;
  REQUIRE(sdio_family(S23.p, "1,-1", "1,-1", "1,2,6", "6,12,36", &fam.s) == SDIO_OK);
  Json fj = fam.json();
  CHECK(fj["eta"] == Json::array({"6", "12", "36"}));
  CHECK(fj["d"] == Json::array({3, 3, 3}));
  CHECK(fj["psi"] == Json::array({1, 1}));

  Poly f("-1,1");
  Owned aud;
  REQUIRE(sdio_audit(f.p, fam.str().c_str(), &aud.s) == SDIO_OK);
  CHECK(aud.json()["t_F"] == 9);
  CHECK(aud.json()["verdict"] == "FinitenessForced");
  Owned aud2;
  REQUIRE(sdio_audit(f.p, R"({"eta":[6,12,36],"d":[3,3,3]})", &aud2.s) == SDIO_OK);
  CHECK(aud2.json()["t_F"] == 9);
  Owned bad;
  CHECK(sdio_audit(f.p, "{not json", &bad.s) == SDIO_ERR_PARSE);

  Owned probe;
  REQUIRE(sdio_gcd_probe(S23.p, f.p, "6:16", 0.25, &probe.s) == SDIO_OK);
  CHECK(probe.json()["samples"][0]["gcd"] == 5);
  CHECK(probe.json()["samples"][0]["flagged"] == true);
}

TEST_CASE("identity and gcd") {
  Owned id, pre, g;
  REQUIRE(sdio_identity("1", "1", "3", "2", 1, 2, 2, &id.s) == SDIO_OK);
  CHECK(id.json()["holds"] == true);
  CHECK(sdio_identity("1", "2", "3", "2", 1, 2, 2, &pre.s) == SDIO_ERR_PRECONDITION);
  REQUIRE(sdio_gcd("11", "55", &g.s) == SDIO_OK);
  CHECK(g.json()["gcd"] == 11);
}

TEST_CASE("the CLI prints exactly the API payloads") {
  Primes S23("2,3"), S2("2");
  Poly f("-1,1"), q("-1,-1,1");

  // Takes the address so the string is read after the call has filled it.
  auto single = [](sdio_status st, char** s) {
    std::string out = *s ? *s : "";
    sdio_string_free(*s);
    return std::make_pair(st, out);
  };
  auto expect_same = [](const Run& run, sdio_status st, const std::vector<std::string>& lines) {
    const int want_code = st == SDIO_OK ? 0 : st == SDIO_NEGATIVE ? 1 : 2;
    CHECK(run.exit_code == want_code);
    CHECK(run.lines == lines);
  };

  {
    char* s = nullptr;
    auto [st, out] = single(sdio_smooth(S23.p, "12", &s), &s);
    expect_same(cli({"smooth", "--primes", "2,3", "--n", "12"}), st, {out});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_smooth(S23.p, "10", &s), &s);
    expect_same(cli({"smooth", "--primes", "2,3", "--n", "10"}), st, {out});
  }
  {
    std::vector<std::string> lines;
    sdio_status st = sdio_enumerate(S23.p, "100", collect, &lines);
    expect_same(cli({"enumerate", "--primes", "2,3", "--bound", "100"}), st, lines);
  }
  {
    std::vector<std::string> lines;
    sdio_search_options opts{"50", 3, 0, 1, 1, nullptr, nullptr};
    sdio_status st = sdio_search(S23.p, f.p, &opts, collect, &lines);
    expect_same(cli({"search", "--primes", "2,3", "--poly", "-1,1", "--size", "3", "--bound", "50", "--exclude-trivial"}),
                st, lines);
    expect_same(cli({"search", "--primes", "2,3", "--poly=-1,1", "--bound", "50", "--exclude-trivial", "--threads", "3",
                     "--progress"}),
                st, lines);
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_verify(S23.p, q.p, "1,5,11", &s), &s);
    expect_same(cli({"verify", "--primes", "2,3", "--poly", "-1,-1,1", "--tuple", "1,5,11"}), st, {out});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_verify(S23.p, f.p, "1,2,4", &s), &s);
    expect_same(cli({"verify", "--primes", "2,3", "--poly", "-1,1", "--tuple", "1,2,4"}), st, {out});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_construct("1,2,3", "2,2,4", nullptr, &s), &s);
    expect_same(cli({"construct", "--tuple", "1,2,3", "--units", "2,2,4"}), st, {out});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_check_poly(q.p, &s), &s);
    expect_same(cli({"check-poly", "--poly", "-1,-1,1"}), st, {out});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_dependence(S2.p, "2:4,8:32,32:256", &s), &s);
    expect_same(cli({"dependence", "--primes", "2", "--pairs", "2:4,8:32,32:256"}), st, {out});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_family(S23.p, "1,-1", "1,-1", "1,2,6", "6,12,36", &s), &s);
    expect_same(cli({"family", "--primes", "2,3", "--rel-vw", "1,-1", "--rel-uw", "1,-1", "--base", "1,2,6", "--sample",
                     "6,12,36"}),
                st, {out});
    char* a = nullptr;
    auto [ast, aout] = single(sdio_audit(f.p, out.c_str(), &a), &a);
    expect_same(cli({"audit", "--poly", "-1,1", "--family-json", out}), ast, {aout});
  }
  {
    char* s = nullptr;
    auto [st, out] = single(sdio_gcd_probe(S23.p, f.p, "6:16,2:4", 0.25, &s), &s);
    expect_same(cli({"gcd-probe", "--primes", "2,3", "--poly", "-1,1", "--pairs", "6:16,2:4"}), st, {out});
  }
}

TEST_CASE("CLI exit codes and stability") {
  CHECK(cli({"smooth", "--primes", "2,3", "--n", "1"}).exit_code == 0);
  CHECK(cli({"smooth", "--primes", "2,3", "--n", "7"}).exit_code == 1);
  CHECK(cli({"smooth", "--primes", "2,4", "--n", "7"}).exit_code == 2);
  CHECK(cli({"smooth", "--n", "7"}).exit_code == 2);
  CHECK(cli({"smooth", "--primes", "2", "--n", "7", "--bogus"}).exit_code == 2);
  CHECK(cli({}).exit_code == 2);
  CHECK(cli({"--help"}).exit_code == 0);
  CHECK(cli({"dependence", "--primes", "2,3", "--pairs", "2:3,4:9"}).exit_code == 1);

  auto r = cli({"search", "--primes", "5", "--poly", "-1,1", "--size", "3", "--bound", "100", "--strict"});
  CHECK(r.exit_code == 0);
  CHECK(r.lines.empty());

  auto a = cli({"search", "--primes", "2,3,5", "--poly", "-1,-1,1", "--bound", "80", "--threads", "4"});
  auto b = cli({"search", "--primes", "2,3,5", "--poly", "-1,-1,1", "--bound", "80"});
  CHECK(a.lines == b.lines);
  for (const auto& line : a.lines) CHECK(Json::accept(line));
}
