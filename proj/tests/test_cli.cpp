// Copyright 2026 The pstlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <unistd.h>

#include "pstlab/cli.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/graph_json.hpp"

using namespace pstlab;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "pstlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("pstlab-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("numeric argument expressions") {
  CHECK(cli::parseNumber("1.5") == 1.5);
  CHECK(cli::parseNumber("pi/2") == std::numbers::pi / 2);
  CHECK(cli::parseNumber("pi / sqrt(2)") == std::numbers::pi / std::sqrt(2.0));
  CHECK(cli::parseNumber("sqrt(15)*pi/2") == std::sqrt(15.0) * std::numbers::pi / 2);
  CHECK(cli::parseNumber("-(1+2)*3") == -9.0);
  CHECK(cli::parseNumber("1e-3") == 1e-3);
  CHECK_THROWS_AS(cli::parseNumber("pi pi"), InputError);
  CHECK_THROWS_AS(cli::parseNumber("sqrt(-1)"), InputError);
  CHECK_THROWS_AS(cli::parseNumber(""), InputError);
}

TEST_CASE("build then verify PST on Q4") {
  TempDir dir;
  const auto q4 = dir / "q4.json";
  CHECK(runCli({"build", "--family", "hypercube", "--param", "d=4", "--out", q4}).code == 0);
  const auto r = runCli({"pst-verify", "--graph", q4, "--from", "0", "--to", "15", "--time",
                      "1.5707963267948966"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");
  const auto no = runCli({"pst-verify", "--graph", q4, "--from", "0", "--to", "14", "--time", "pi/2"});
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");
}

TEST_CASE("outputs are never overwritten without --force") {
  TempDir dir;
  const auto path = dir / "g.json";
  CHECK(runCli({"build", "-f", "path", "-p", "n=3", "-o", path}).code == 0);
  const auto again = runCli({"build", "-f", "path", "-p", "n=4", "-o", path});
  CHECK(again.code == 2);
  CHECK(again.err.find("--force") != std::string::npos);
  CHECK(io::graphFromJson(slurp(path)).order() == 3);
  CHECK(runCli({"build", "-f", "path", "-p", "n=4", "-o", path, "--force"}).code == 0);
  CHECK(io::graphFromJson(slurp(path)).order() == 4);
}

TEST_CASE("build output round-trips byte for byte") {
  for (std::vector<std::string> params :
       {std::vector<std::string>{"-f", "christandl", "-p", "n=6"},
        std::vector<std::string>{"-f", "p5", "-p", "a=sqrt(2)", "-p", "b=sqrt(15)"},
        std::vector<std::string>{"-f", "godsil", "-p", "m=2"},
        std::vector<std::string>{"-f", "circulant", "-p", "n=15", "-p", "s=1,2,3"},
        std::vector<std::string>{"-f", "cubelike", "-p", "s=100,010,001,011"}}) {
    params.insert(params.begin(), "build");
    const auto r = runCli(params);
    REQUIRE(r.code == 0);
    CHECK(io::toJson(io::graphFromJson(r.out)) == r.out);
  }
}

TEST_CASE("input errors map to exit code 2") {
  CHECK(runCli({}).code == 2);
  CHECK(runCli({"frobnicate"}).code == 2);
  CHECK(runCli({"build", "--family", "path"}).code == 2);
  CHECK(runCli({"build", "--family", "path", "-p", "n=3", "--bogus"}).code == 2);
  CHECK(runCli({"build", "--family", "path", "-p", "n=3", "-p", "m=1"}).code == 2);
  CHECK(runCli({"build", "--family", "nope", "-p", "n=3"}).code == 2);
  CHECK(runCli({"fidelity", "--graph", "/nonexistent.json", "--from", "0", "--to", "1", "-t", "1"})
            .code == 2);
  CHECK(runCli({"verify", "--suite", "nope"}).code == 2);
  CHECK(runCli({"--help"}).code == 0);
}

TEST_CASE("graph operations through the CLI") {
  TempDir dir;
  const auto k2 = dir / "k2.json", c4 = dir / "c4.json", q3 = dir / "q3.json";
  REQUIRE(runCli({"build", "-f", "complete", "-p", "n=2", "-o", k2}).code == 0);
  REQUIRE(runCli({"build", "-f", "cycle", "-p", "n=4", "-o", c4}).code == 0);
  REQUIRE(runCli({"product", "-g", k2, "--power", "3", "-o", q3}).code == 0);
  CHECK(io::graphFromJson(slurp(q3)) == build(family::Hypercube{3}));
  const auto square = dir / "square.json";
  REQUIRE(runCli({"product", "-g", k2, "-g", k2, "-o", square}).code == 0);
  CHECK(runCli({"iso", "-g", square, "-g", c4}).code == 0);
  CHECK(runCli({"iso", "-g", k2, "-g", c4}).code == 1);
  CHECK(io::graphFromJson(runCli({"join", "-g", k2, "-g", c4}).out).order() == 6);
  CHECK(io::graphFromJson(runCli({"complement", "-g", c4}).out).edgeCount() == 2);
  const auto scaled = io::graphFromJson(runCli({"scale", "-g", k2, "-c", "1/sqrt(2)"}).out);
  CHECK(scaled.weight(0, 1) == doctest::Approx(1 / std::sqrt(2.0)));
  const auto tri = runCli({"triangles", "-g", c4});
  CHECK(tri.out == "{\"census\":[0,0,0,0],\"total\":0}\n");
}

TEST_CASE("quotient and refine through the CLI") {
  TempDir dir;
  const auto q3 = dir / "q3.json", part = dir / "p.json", map = dir / "map.json";
  REQUIRE(runCli({"build", "-f", "hypercube", "-p", "d=3", "-o", q3}).code == 0);
  const auto r = runCli({"refine", "-g", q3, "--seed", "0", "7", "-o", part});
  REQUIRE(r.code == 0);
  CHECK(slurp(part) == "{\"m\": 4, \"cells\": [[0], [1, 2, 4], [3, 5, 6], [7]]}\n");
  const auto q = runCli({"quotient", "-g", q3, "--partition", part, "--cell-map", map});
  REQUIRE(q.code == 0);
  CHECK(io::graphFromJson(q.out).order() == 4);
  CHECK(slurp(map).find("\"cell_of\"") != std::string::npos);
  CHECK(runCli({"refine", "-g", q3}).out == "{\"m\": 1, \"cells\": [[0, 1, 2, 3, 4, 5, 6, 7]]}\n");

  const auto bad = dir / "bad.json";
  std::ofstream(bad) << "{\"m\": 2, \"cells\": [[0, 1], [2, 3, 4, 5, 6, 7]]}";
  const auto e = runCli({"quotient", "-g", q3, "--partition", bad});
  CHECK(e.code == 2);
  CHECK(e.err.find("precondition") != std::string::npos);
}

TEST_CASE("walk commands") {
  TempDir dir;
  const auto k2 = dir / "k2.json", csv = dir / "scan.csv";
  REQUIRE(runCli({"build", "-f", "complete", "-p", "n=2", "-o", k2}).code == 0);
  const auto f = runCli({"fidelity", "-g", k2, "--from", "0", "--to", "1", "-t", "pi/2"});
  CHECK(f.code == 0);
  CHECK(std::stod(f.out) == doctest::Approx(1.0));
  const auto s = runCli({"scan", "-g", k2, "--from", "0", "--to", "1", "--tmax", "4", "--steps", "100",
                      "--csv", csv});
  CHECK(s.code == 0);
  CHECK(s.out.find("\"t\": 1.5707963267") != std::string::npos);
  CHECK(slurp(csv).rfind("t,fidelity\n", 0) == 0);
  const auto none = runCli({"scan", "-g", k2, "--from", "0", "--to", "1", "--tmax", "1", "--steps", "10"});
  CHECK(none.code == 1);
}

TEST_CASE("feder and orbit commands") {
  TempDir dir;
  const auto p3 = dir / "p3.json", f = dir / "f.json", map = dir / "occ.json";
  REQUIRE(runCli({"build", "-f", "path", "-p", "n=3", "-o", p3}).code == 0);
  REQUIRE(runCli({"feder", "-g", p3, "-k", "2", "-o", f, "--map", map}).code == 0);
  CHECK(io::graphFromJson(slurp(f)).order() == 6);
  const std::string occ = slurp(map);
  CHECK(occ.find("\"occupation\"") != std::string::npos);
  CHECK(occ.find("\"vertex\": 5") != std::string::npos);
  const auto orbit = runCli({"orbit-quotient", "-g", p3, "-k", "2"});
  REQUIRE(orbit.code == 0);
  CHECK(io::graphFromJson(orbit.out).order() == 6);
  const auto k2 = dir / "k2.json";
  REQUIRE(runCli({"build", "-f", "complete", "-p", "n=2", "-o", k2}).code == 0);
  const auto c = runCli({"compose", "-g", k2, "--m1", "2", "--pi1", "orbit", "--m2", "2", "--pi2",
                      "orbit"});
  CHECK(c.code == 0);
  CHECK(c.out.find("cells 6") != std::string::npos);
  const auto w = dir / "w.json";
  REQUIRE(runCli({"build", "-f", "p4", "-p", "a=1", "-p", "b=2", "-o", w}).code == 0);
  CHECK(runCli({"feder", "-g", w, "-k", "2"}).code == 2);
  CHECK(runCli({"orbit-quotient", "-g", p3, "-k", "9"}).code == 3);
}

TEST_CASE("cubelike command") {
  const auto yes = runCli({"cubelike", "-s", "100,010,001,011"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("\"target\": \"100\"") != std::string::npos);
  const auto no = runCli({"cubelike", "-s", "100,010,001,111"});
  CHECK(no.code == 1);
  CHECK(no.out.find("\"certified\": true") != std::string::npos);
  CHECK(runCli({"cubelike", "-s", "110,011"}).code == 2);
}

TEST_CASE("automorphism commands") {
  TempDir dir;
  const auto g = dir / "godsil_m2.json", q3 = dir / "q3.json";
  REQUIRE(runCli({"build", "-f", "godsil", "-p", "m=2", "-o", g}).code == 0);
  const auto swap = runCli({"aut", "--graph", g, "--swap", "0", "31"});
  CHECK(swap.code == 1);
  CHECK(swap.out == "false\n");
  REQUIRE(runCli({"build", "-f", "hypercube", "-p", "d=3", "-o", q3}).code == 0);
  const auto yes = runCli({"aut", "-g", q3, "--swap", "0", "7"});
  CHECK(yes.code == 0);
  CHECK(yes.out.rfind("true\n[7", 0) == 0);
  CHECK(runCli({"aut", "-g", q3}).out == "order 48\n");
}

TEST_CASE("verify suites are deterministic") {
  const auto a = runCli({"verify", "--suite", "feder"});
  const auto b = runCli({"verify", "--suite", "feder"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("verifyFederIso(K2, k=6)") != std::string::npos);
  const auto j1 = runCli({"verify", "--suite", "thm32", "--json", "--seed", "7"});
  const auto j2 = runCli({"verify", "--suite", "thm32", "--json", "--seed", "7"});
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);
  CHECK(j1.out.find("\"seed\": 7") != std::string::npos);
  CHECK(j1.out.find("\"pass\": true") != std::string::npos);
}
