/*
Copyright 2026 The expsig Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Runs the expsig executable end to end.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("expsig_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Result run(const std::vector<std::string>& args, const std::string& env = "") {
  const fs::path out = workdir() / "stdout.txt", err = workdir() / "stderr.txt";
  std::string cmd = env.empty() ? "" : env + " ";
  cmd += quote(EXPSIG_CLI_PATH);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  const int rc = std::system(cmd.c_str());
  Result r;
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string path(const std::string& name) { return (workdir() / name).string(); }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double rat_value(const std::string& q) {
  const auto slash = q.find('/');
  return std::stod(q.substr(0, slash)) / std::stod(q.substr(slash + 1));
}

}  // namespace

TEST_CASE("help lists every subcommand") {
  const Result r = run({"--help"});
  CHECK(r.status == 0);
  for (const char* sub : {"hierarchy", "develop", "bessel", "pole", "compare", "radius", "mc"})
    CHECK(r.out.find(sub) != std::string::npos);
  const Result h = run({"mc", "--help"});
  CHECK(h.status == 0);
  CHECK(h.out.find("--seed") != std::string::npos);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
}

TEST_CASE("hierarchy writes coefficients and a manifest") {
  const std::string f = path("h2.json");
  const Result r = run({"hierarchy", "--levels", "2", "--mode", "developed", "--out", f});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(slurp(f));
  CHECK(j["schema"] == "expsig.hierarchy/1");
  CHECK(j["per_level"][2]["a_n"] == "1/2");
  CHECK(j["per_level"][1]["a_n"] == "0/1");
  const Json m = Json::parse(slurp(f + ".manifest.json"));
  CHECK(m["schema"] == "expsig.manifest/1");
  CHECK(m["subcommand"] == "hierarchy");
  CHECK(m["parameters"]["levels"] == "2");
  CHECK(m["outputs"][0] == f);
  CHECK(m.contains("timestamp"));
  CHECK(m.contains("tool_version"));
}

TEST_CASE("level 1 default mode") {
  const Result r = run({"hierarchy", "--levels", "1"});
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["per_level"][1]["a_n"] == "0/1");
}

TEST_CASE("tensor hierarchy to level 12 passes every exact check") {
  const Result r = run({"hierarchy", "--levels", "12", "--mode", "tensor"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["all_checks_passed"] == true);
  for (const auto& level : j["per_level"])
    for (const auto& [name, verdict] : level["checks"].items()) CHECK(verdict == "exact-pass");
}

TEST_CASE("level caps are usage errors") {
  const Result r = run({"hierarchy", "--levels", "17", "--mode", "tensor"});
  CHECK(r.status == 2);
  CHECK(r.err.find("cap") != std::string::npos);
  CHECK(run({"hierarchy", "--levels", "201"}).status == 2);
  CHECK(run({"hierarchy", "--levels", "3", "--mode", "matrix"}).status == 2);
}

TEST_CASE("exact outputs are bit-reproducible from the manifest") {
  const std::string a = path("repro_a.json"), b = path("repro_b.json");
  REQUIRE(run({"hierarchy", "--levels", "8", "--mode", "tensor", "--dump-polys", "--out", a}).status == 0);
  REQUIRE(run({"hierarchy", "--levels", "8", "--mode", "tensor", "--dump-polys", "--out", b}).status == 0);
  CHECK(slurp(a) == slurp(b));
  const Json m = Json::parse(slurp(a + ".manifest.json"));
  std::vector<std::string> argv = m["argv"].get<std::vector<std::string>>();
  REQUIRE(argv.size() > 2);
  const std::string c = path("repro_c.json");
  argv.back() = c;
  REQUIRE(run(std::vector<std::string>(argv.begin() + 1, argv.end())).status == 0);
  CHECK(slurp(a) == slurp(c));
  CHECK_FALSE(fs::exists(a + ".tmp." + std::to_string(::getpid())));
}

TEST_CASE("develop") {
  const Result r = run({"develop", "--lambda", "1", "--levels", "2"});
  REQUIRE(r.status == 0);
  CHECK(Json::parse(r.out)["partial_sums"][2]["F"][2] == "3/2");
}

TEST_CASE("bessel") {
  const Result r = run({"bessel", "--nu", "1", "--re", "1"});
  REQUIRE(r.status == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["value"]["re"]["mid"].get<std::string>().rfind("4.400505857449335159", 0) == 0);
  CHECK(run({"bessel", "--nu", "2"}).status == 2);
}

TEST_CASE("precision comes from the environment unless given") {
  const Result env = run({"bessel", "--re", "1"}, "EXPSIG_PRECISION=256");
  REQUIRE(env.status == 0);
  CHECK(Json::parse(env.out)["precision_bits"] == 256);
  const Result flag = run({"bessel", "--re", "1", "--precision", "64"}, "EXPSIG_PRECISION=256");
  CHECK(Json::parse(flag.out)["precision_bits"] == 64);
  CHECK(run({"bessel"}, "EXPSIG_PRECISION=lots").status == 2);
}

TEST_CASE("pole certificate with defaults lies in [2.82, 2.83] and re-verifies") {
  const std::string f = path("pole.json");
  REQUIRE(run({"pole", "--out", f}).status == 0);
  const Json c = Json::parse(slurp(f));
  CHECK(c["schema"] == "expsig.pole-certificate/1");
  CHECK(rat_value(c["bracket"]["lo"]) >= 2.82);
  CHECK(rat_value(c["bracket"]["hi"]) <= 2.83);
  const Result v = run({"pole", "--verify", f});
  CHECK(v.status == 0);
  CHECK(Json::parse(v.out)["verified"] == true);
}

TEST_CASE("narrow pole bracket") {
  const std::string f = path("pole6.json");
  REQUIRE(run({"pole", "--width", "1e-6", "--out", f}).status == 0);
  const Json c = Json::parse(slurp(f));
  CHECK(rat_value(c["bracket"]["hi"]) - rat_value(c["bracket"]["lo"]) <= 1e-6);
  CHECK(run({"pole", "--verify", f}).status == 0);

  Json bad = c;
  bad["numerator_bound"]["mid"] = "0.5";
  const std::string g = path("pole_bad.json");
  std::ofstream(g) << bad.dump();
  const Result v = run({"pole", "--verify", g});
  CHECK(v.status == 3);
  CHECK(v.err.find("numerator") != std::string::npos);
}

TEST_CASE("zero width is a usage error") {
  const Result r = run({"pole", "--width", "0"});
  CHECK(r.status == 2);
}

TEST_CASE("compare") {
  const Result one = run({"compare", "--lambda", "1", "--levels", "40"});
  REQUIRE(one.status == 0);
  auto rows = csv_rows(one.out);
  REQUIRE(rows.size() == 42);
  CHECK(rows[0] == std::vector<std::string>{"k", "partial_sum", "closed_form_mid", "closed_form_rad", "gap_upper"});
  CHECK(std::stod(rows.back()[4]) <= 1e-8);

  const Result two = run({"compare", "--lambda", "2", "--levels", "60"});
  REQUIRE(two.status == 0);
  CHECK(std::stod(csv_rows(two.out).back()[4]) <= 1e-6);

  const Result zero = run({"compare", "--lambda", "0", "--levels", "3"});
  REQUIRE(zero.status == 0);
  rows = csv_rows(zero.out);
  CHECK(std::stod(rows[1][1]) == 1.0);
  CHECK(std::stod(rows[1][2]) == 1.0);

  const Result past = run({"compare", "--lambda", "2.9", "--levels", "10"});
  CHECK(past.status != 0);
  CHECK(past.err.find("pole") != std::string::npos);
}

TEST_CASE("radius") {
  const Result r = run({"radius", "--levels", "60"});
  REQUIRE(r.status == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 31);
  const double last = std::stod(rows.back()[1]);
  CHECK(last > 2.5);
  CHECK(last < 3.0);
  const Result few = run({"radius", "--levels", "2"});
  CHECK(few.status != 0);
  CHECK(few.err.find("insufficient data") != std::string::npos);
  CHECK(few.out.empty());
}

TEST_CASE("monte carlo output is deterministic and echoes its config") {
  const std::vector<std::string> args{"mc", "--paths", "3000", "--step", "1e-3", "--level", "3", "--threads", "2"};
  const Result a = run(args), b = run(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  const std::string header = a.out.substr(2, a.out.find('\n') - 2);
  const Json cfg = Json::parse(header);
  CHECK(cfg["schema"] == "expsig.mc/1");
  CHECK(cfg["paths"] == 3000);
  CHECK(cfg["bridge_correction"] == true);
  CHECK(csv_rows(a.out).size() == 1 + 2 + 4 + 8 + 1);
  const std::string f = path("mc_off.csv");
  REQUIRE(run({"mc", "--paths", "100", "--step", "1e-2", "--no-bridge-correction", "--out", f}).status == 0);
  CHECK(slurp(f).find("\"bridge_correction\":false") != std::string::npos);
  std::vector<std::string> argv =
      Json::parse(slurp(f + ".manifest.json"))["argv"].get<std::vector<std::string>>();
  argv.pop_back();
  argv.pop_back();
  const Result replay = run(std::vector<std::string>(argv.begin() + 1, argv.end()));
  CHECK(replay.out == slurp(f));
  CHECK(run({"mc", "--x0", "1.5"}).status == 2);
}

TEST_CASE("unwritable output is an I/O error") {
  const Result r = run({"hierarchy", "--levels", "2", "--out", "/nonexistent-dir/x.json"});
  CHECK(r.status == 1);
  CHECK_FALSE(r.err.empty());
}
