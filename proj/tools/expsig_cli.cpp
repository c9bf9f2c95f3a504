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

// expsig command-line front end. Every subcommand goes through the C API.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "expsig/expsig.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCheckFailed = 3;

struct Failure {
  int exit_code;
  std::string message;
};

// Owns a string returned by the library.
class LibString {
 public:
  LibString() = default;
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  ~LibString() { expsig_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

int exit_code_for(expsig_status s) {
  switch (s) {
    case EXPSIG_ERR_INVALID_ARGUMENT:
    case EXPSIG_ERR_CAP_EXCEEDED:
      return kExitUsage;
    case EXPSIG_ERR_CHECK_FAILED:
      return kExitCheckFailed;
    default:
      return kExitError;
  }
}

void check(expsig_status s) {
  if (s != EXPSIG_OK)
    throw Failure{exit_code_for(s), std::string(expsig_status_name(s)) + ": " + expsig_last_error()};
}

long default_precision() {
  if (const char* env = std::getenv("EXPSIG_PRECISION"); env && *env) {
    char* end = nullptr;
    const long p = std::strtol(env, &end, 10);
    if (*end != '\0' || p < 53) throw Failure{kExitUsage, "EXPSIG_PRECISION must be an integer >= 53"};
    return p;
  }
  return 128;
}

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Failure{kExitError, "cannot open " + tmp.string() + " for writing"};
    f << content;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Failure{kExitError, "write to " + tmp.string() + " failed"};
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Failure{kExitError, "cannot rename onto " + path + ": " + ec.message()};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Failure{kExitError, "cannot read " + path};
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// Collects the resolved parameters of a subcommand and writes its output
// together with a sidecar manifest.
class Run {
 public:
  Run(CLI::App* sub, const std::string* out) : sub_(sub), out_(out) {}

  Json parameters() const {
    Json p = Json::object();
    for (const CLI::Option* opt : sub_->get_options()) {
      const std::string name = opt->get_lnames().empty() ? "" : opt->get_lnames().front();
      if (name.empty() || name == "help" || name == "out") continue;
      if (opt->get_expected_max() == 0) {
        const std::string v = opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
        p[name] = v == "true" || v == "1";
      } else if (opt->count() > 0)
        p[name] = opt->as<std::string>();
      else
        p[name] = opt->get_default_str();
    }
    return p;
  }

  std::vector<std::string> replay_argv(const Json& params) const {
    std::vector<std::string> argv{"expsig", sub_->get_name()};
    for (const auto& [k, v] : params.items()) {
      if (v.is_boolean()) {
        argv.push_back("--" + k + (v.get<bool>() ? "=true" : "=false"));
      } else if (!v.get<std::string>().empty()) {
        argv.push_back("--" + k);
        argv.push_back(v.get<std::string>());
      }
    }
    if (!out_->empty()) {
      argv.push_back("--out");
      argv.push_back(*out_);
    }
    return argv;
  }

  void emit(const std::string& content, const Json& extra = Json::object()) const {
    if (out_->empty()) {
      std::cout << content;
      if (!content.empty() && content.back() != '\n') std::cout << '\n';
      return;
    }
    write_atomic(*out_, content.back() == '\n' ? content : content + "\n");
    const Json params = parameters();
    Json manifest{{"schema", "expsig.manifest/1"},
                  {"subcommand", sub_->get_name()},
                  {"parameters", params},
                  {"argv", replay_argv(params)},
                  {"tool_version", expsig_version()},
                  {"timestamp", utc_timestamp()},
                  {"inputs", extra.value("inputs", Json::array())},
                  {"outputs", Json::array({*out_})}};
    write_atomic(*out_ + ".manifest.json", manifest.dump(2) + "\n");
  }

 private:
  CLI::App* sub_;
  const std::string* out_;
};

class Hierarchy {
 public:
  Hierarchy() { check(expsig_hierarchy_create(&h_)); }
  Hierarchy(const Hierarchy&) = delete;
  Hierarchy& operator=(const Hierarchy&) = delete;
  ~Hierarchy() { expsig_hierarchy_destroy(h_); }
  expsig_hierarchy* get() const { return h_; }

 private:
  expsig_hierarchy* h_ = nullptr;
};

struct Options {
  std::string out;
  long precision = 128;

  int levels = 0;
  std::string mode = "developed";
  bool dump_polys = false;

  std::string lambda = "1";
  std::string x = "0";
  std::string y = "0";

  int nu = 0;
  std::string re = "0";
  std::string im = "0";

  std::string r;

  std::string width = "1/1000";
  std::string verify;

  expsig_mc_config mc{};
  bool bridge = true;
};

void add_out(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out, "Output file (written atomically with a FILE.manifest.json sidecar); stdout if omitted");
}

void add_precision(CLI::App* sub, Options& o) {
  sub->add_option("--precision", o.precision, "Working precision in bits (default from EXPSIG_PRECISION, else 128)")
      ->capture_default_str()
      ->check(CLI::Range(53L, 1L << 20));
}

int cmd_hierarchy(CLI::App* sub, const Options& o) {
  Hierarchy h;
  const expsig_mode mode = o.mode == "tensor" ? EXPSIG_MODE_TENSOR : EXPSIG_MODE_DEVELOPED;
  LibString json;
  const expsig_status s = expsig_hierarchy_report(h.get(), mode, o.levels, o.dump_polys ? 1 : 0, json.out());
  if (s == EXPSIG_ERR_CHECK_FAILED) {
    Run(sub, &o.out).emit(json.str());
    std::cerr << "expsig: " << expsig_last_error() << "\n";
    return kExitCheckFailed;
  }
  check(s);
  Run(sub, &o.out).emit(json.str());
  return 0;
}

int cmd_develop(CLI::App* sub, const Options& o) {
  Hierarchy h;
  LibString json;
  const expsig_status s =
      expsig_develop(h.get(), o.lambda.c_str(), o.x.c_str(), o.y.c_str(), o.levels, json.out());
  if (s == EXPSIG_ERR_CHECK_FAILED) {
    Run(sub, &o.out).emit(json.str());
    std::cerr << "expsig: " << expsig_last_error() << "\n";
    return kExitCheckFailed;
  }
  check(s);
  Run(sub, &o.out).emit(json.str());
  return 0;
}

int cmd_bessel(CLI::App* sub, const Options& o) {
  LibString json;
  check(expsig_bessel_j(o.nu, o.re.c_str(), o.im.c_str(), o.precision, json.out()));
  Run(sub, &o.out).emit(json.str());
  return 0;
}

int cmd_closed_form(CLI::App* sub, const Options& o) {
  LibString json;
  check(expsig_closed_form(o.lambda.c_str(), o.r.empty() ? nullptr : o.r.c_str(), o.precision, json.out()));
  Run(sub, &o.out).emit(json.str());
  return 0;
}

int cmd_pole(CLI::App* sub, const Options& o) {
  if (!o.verify.empty()) {
    const std::string cert = read_file(o.verify);
    const expsig_status s = expsig_pole_verify(cert.c_str());
    Json doc{{"schema", "expsig.pole-verification/1"}, {"certificate", o.verify}, {"verified", s == EXPSIG_OK}};
    if (s != EXPSIG_OK) doc["reason"] = expsig_last_error();
    Run(sub, &o.out).emit(doc.dump(2), Json{{"inputs", Json::array({o.verify})}});
    if (s == EXPSIG_ERR_CHECK_FAILED) {
      std::cerr << "expsig: certificate rejected: " << expsig_last_error() << "\n";
      return kExitCheckFailed;
    }
    check(s);
    return 0;
  }
  LibString json;
  check(expsig_pole_locate(o.width.c_str(), o.precision, json.out()));
  check(expsig_pole_verify(json.str().c_str()));
  Run(sub, &o.out).emit(json.str());
  return 0;
}

int cmd_compare(CLI::App* sub, const Options& o) {
  Hierarchy h;
  LibString csv;
  check(expsig_compare(h.get(), o.lambda.c_str(), o.levels, o.precision, csv.out()));
  Run(sub, &o.out).emit(csv.str());
  return 0;
}

int cmd_radius(CLI::App* sub, const Options& o) {
  Hierarchy h;
  LibString csv;
  const expsig_status s = expsig_radius(h.get(), o.levels, csv.out());
  if (s == EXPSIG_ERR_INSUFFICIENT_DATA) {
    std::cerr << "expsig: insufficient data: " << expsig_last_error() << "\n";
    return kExitError;
  }
  check(s);
  Run(sub, &o.out).emit(csv.str());
  return 0;
}

int cmd_mc(CLI::App* sub, const Options& o) {
  expsig_mc_config cfg = o.mc;
  cfg.bridge_correction = o.bridge ? 1 : 0;
  LibString csv;
  check(expsig_mc_run(&cfg, csv.out()));
  Run(sub, &o.out).emit(csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact, ball-arithmetic and Monte Carlo computations for the expected signature of "
               "Brownian motion stopped on exiting the unit disk."};
  app.set_version_flag("--version", std::string(expsig_version()));
  app.require_subcommand(1);

  Options o;
  try {
    o.precision = default_precision();
  } catch (const Failure& f) {
    std::cerr << "expsig: " << f.message << "\n";
    return f.exit_code;
  }
  expsig_mc_config_init(&o.mc);
  o.bridge = o.mc.bridge_correction != 0;

  auto* hier = app.add_subcommand("hierarchy", "Solve the PDE hierarchy exactly and verify every level");
  hier->add_option("--levels", o.levels, "Highest level n")->required()->check(CLI::NonNegativeNumber);
  hier->add_option("--mode", o.mode, "tensor (<= 16 levels) or developed (<= 200 levels)")
      ->capture_default_str()
      ->check(CLI::IsMember({"tensor", "developed"}));
  hier->add_flag("--dump-polys", o.dump_polys, "Include every solved polynomial in the output")
      ->default_str("false");
  add_out(hier, o);

  auto* dev = app.add_subcommand("develop", "Exact partial sums of the developed series at a point z");
  dev->add_option("--lambda", o.lambda, "Rational lambda (n, n/d or exact decimal)")->capture_default_str();
  dev->add_option("--x", o.x, "Rational x coordinate of z")->capture_default_str();
  dev->add_option("--y", o.y, "Rational y coordinate of z")->capture_default_str();
  dev->add_option("--levels", o.levels, "Highest level N")->required()->check(CLI::NonNegativeNumber);
  add_out(dev, o);

  auto* bes = app.add_subcommand("bessel", "Rigorous ball enclosure of J_0 or J_1 at a complex point");
  bes->add_option("--nu", o.nu, "Order (0 or 1)")->capture_default_str()->check(CLI::IsMember({0, 1}));
  bes->add_option("--re", o.re, "Real part (rational)")->capture_default_str();
  bes->add_option("--im", o.im, "Imaginary part (rational)")->capture_default_str();
  add_precision(bes, o);
  add_out(bes, o);

  auto* cf = app.add_subcommand("closed-form", "Ball evaluation of d(lambda) and the closed-form solution");
  cf->add_option("--lambda", o.lambda, "Rational lambda >= 0")->capture_default_str();
  cf->add_option("--r", o.r, "Radius r in [0, 1] (default 0)");
  add_precision(cf, o);
  add_out(cf, o);

  auto* pole = app.add_subcommand("pole", "Locate and certify the first zero of d, or re-verify a certificate");
  pole->add_option("--width", o.width, "Target bracket width (rational, > 0)")->capture_default_str();
  pole->add_option("--verify", o.verify, "Re-check a stored certificate file instead of locating");
  add_precision(pole, o);
  add_out(pole, o);

  auto* cmp = app.add_subcommand("compare", "Partial sums at r = 0 against the closed form");
  cmp->add_option("--lambda", o.lambda, "Rational lambda below the certified pole bracket")->capture_default_str();
  cmp->add_option("--levels", o.levels, "Highest level N")->required()->check(CLI::NonNegativeNumber);
  add_precision(cmp, o);
  add_out(cmp, o);

  auto* rad = app.add_subcommand("radius", "Ratio estimates sqrt(a_2k / a_2k+2) of the radius of convergence");
  rad->add_option("--levels", o.levels, "Highest level N (>= 4)")->required()->check(CLI::NonNegativeNumber);
  add_out(rad, o);

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of the expected signature");
  mc->add_option("--x0", o.mc.x0, "Start x")->capture_default_str();
  mc->add_option("--y0", o.mc.y0, "Start y")->capture_default_str();
  mc->add_option("--step", o.mc.h, "Time step h")->capture_default_str();
  mc->add_option("--level", o.mc.level, "Truncation level")->capture_default_str();
  mc->add_option("--paths", o.mc.paths, "Number of paths")->capture_default_str();
  mc->add_option("--seed", o.mc.seed, "64-bit seed")->capture_default_str();
  mc->add_flag("--bridge-correction,!--no-bridge-correction", o.bridge,
               "Also stop with the Brownian-bridge crossing probability (default on)")
      ->default_str(o.bridge ? "true" : "false");
  mc->add_option("--threads", o.mc.threads, "Worker threads (0 = hardware concurrency)")->capture_default_str();
  add_out(mc, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*hier) return cmd_hierarchy(hier, o);
    if (*dev) return cmd_develop(dev, o);
    if (*bes) return cmd_bessel(bes, o);
    if (*cf) return cmd_closed_form(cf, o);
    if (*pole) return cmd_pole(pole, o);
    if (*cmp) return cmd_compare(cmp, o);
    if (*rad) return cmd_radius(rad, o);
    if (*mc) return cmd_mc(mc, o);
  } catch (const Failure& f) {
    std::cerr << "expsig: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
