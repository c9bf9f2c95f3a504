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

#include "expsig/expsig.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "development.hpp"
#include "error.hpp"
#include "montecarlo.hpp"
#include "serialize.hpp"

struct expsig_hierarchy {
  expsig::Hierarchy impl;
};

namespace {

using namespace expsig;

thread_local std::string g_last_error;

template <class F>
expsig_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<expsig_status>(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = std::string("malformed JSON: ") + e.what();
    return EXPSIG_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return EXPSIG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EXPSIG_ERR_INTERNAL;
  }
}

void emit(const std::string& s, char** out) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  *out = p;
}

void require_out(char** out) {
  if (!out) fail(ErrorCode::kInvalidArgument, "output pointer is null");
}

Rat rat_arg(const char* s, const char* name) {
  if (!s) fail(ErrorCode::kInvalidArgument, std::string(name) + " is null");
  return parse_rat(s);
}

void check_precision(long precision) {
  if (precision < 53 || precision > (1L << 20)) fail(ErrorCode::kInvalidArgument, "precision must be in [53, 2^20] bits");
}

void check_levels(expsig_mode mode, int n) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "levels must be >= 0");
  if (mode == EXPSIG_MODE_TENSOR && n > EXPSIG_TENSOR_LEVEL_CAP)
    fail(ErrorCode::kCapExceeded, "tensor mode is capped at " + std::to_string(EXPSIG_TENSOR_LEVEL_CAP) + " levels");
  if (mode == EXPSIG_MODE_DEVELOPED && n > EXPSIG_DEVELOPED_LEVEL_CAP)
    fail(ErrorCode::kCapExceeded,
         "developed mode is capped at " + std::to_string(EXPSIG_DEVELOPED_LEVEL_CAP) + " levels");
  if (mode != EXPSIG_MODE_TENSOR && mode != EXPSIG_MODE_DEVELOPED) fail(ErrorCode::kInvalidArgument, "unknown mode");
}

const char* verdict(bool ok) { return ok ? "exact-pass" : "fail"; }

// Tracks named checks across levels; a check fails if it fails at any level.
class CheckLog {
 public:
  void record(const std::string& name, bool ok, int level) {
    auto& e = summary_[name];
    if (e.is_null()) e = Json{{"status", "exact-pass"}, {"failed_levels", Json::array()}};
    if (!ok) {
      e["status"] = "fail";
      e["failed_levels"].push_back(level);
      all_ok_ = false;
    }
  }
  bool all_ok() const { return all_ok_; }
  const Json& summary() const { return summary_; }

 private:
  Json summary_ = Json::object();
  bool all_ok_ = true;
};

bool boundary_zero(const Poly2& p) { return boundary_trace(p).is_zero(); }

Json tensor_report(Hierarchy& h, int levels, bool dump, CheckLog& log) {
  Json out = Json::array();
  const Vec3<Rat> e3{0, 0, 1};
  for (int n = 0; n <= levels; ++n) {
    const TensorPoly& t = h.tensor_level(n);
    const LevelNorms norms = h.level_norms(n);
    const Rat an = h.a(n);
    Json checks = Json::object();
    if (n >= 2) {
      bool ok = true;
      for (std::size_t w = 0; w < t.entries.size() && ok; ++w)
        ok = (laplacian(t.entries[w]) - tensor_rhs(h.tensor_level(n - 1), h.tensor_level(n - 2), n, w)).is_zero();
      checks["pde_residual"] = verdict(ok);
      log.record("pde_residual", ok, n);
    }
    if (n >= 1) {
      bool ok = true, deg = true;
      for (const Poly2& p : t.entries) {
        ok = ok && boundary_zero(p);
        deg = deg && p.degree() <= n;
      }
      checks["boundary_trace"] = verdict(ok);
      checks["degree_bound"] = verdict(deg);
      log.record("boundary_trace", ok, n);
      log.record("degree_bound", deg, n);
    }
    const bool fold_ok = fold_apply(t, e3) == h.developed_level(n);
    checks["fold_matches_developed"] = verdict(fold_ok);
    log.record("fold_matches_developed", fold_ok, n);
    if (n % 2) {
      bool ok = an == 0 && norms.l1 == 0;
      checks["odd_level_vanishes"] = verdict(ok);
      log.record("odd_level_vanishes", ok, n);
    }
    Json lv{{"n", n}, {"a_n", to_string(an)}, {"l1", to_string(norms.l1)}, {"l2sq", to_string(norms.l2sq)},
            {"checks", checks}};
    if (dump) lv["tensor"] = tensor_to_json(t);
    out.push_back(std::move(lv));
  }
  return out;
}

Json developed_report(Hierarchy& h, int levels, bool dump, CheckLog& log) {
  Json out = Json::array();
  for (int n = 0; n <= levels; ++n) {
    const Vec3Poly& v = h.developed_level(n);
    const Rat an = h.a(n);
    Json checks = Json::object();
    if (n >= 2) {
      Vec3Poly rhs = developed_rhs(h.developed_level(n - 1), h.developed_level(n - 2));
      bool ok = true;
      for (int k = 0; k < 3; ++k) ok = ok && (laplacian(v[k]) - rhs[k]).is_zero();
      checks["pde_residual"] = verdict(ok);
      log.record("pde_residual", ok, n);
    }
    if (n >= 1) {
      bool ok = true, deg = true;
      for (int k = 0; k < 3; ++k) {
        ok = ok && boundary_zero(v[k]);
        deg = deg && v[k].degree() <= n;
      }
      checks["boundary_trace"] = verdict(ok);
      checks["degree_bound"] = verdict(deg);
      log.record("boundary_trace", ok, n);
      log.record("degree_bound", deg, n);
    }
    const bool refl = v[1].at_y_zero().is_zero();
    checks["second_component_zero_on_x_axis"] = verdict(refl);
    log.record("second_component_zero_on_x_axis", refl, n);
    const bool rot = v[0].rotated_quarter() == -v[1] && v[1].rotated_quarter() == v[0] && v[2].rotated_quarter() == v[2];
    checks["quarter_turn_equivariance"] = verdict(rot);
    log.record("quarter_turn_equivariance", rot, n);
    if (n % 2) {
      checks["odd_level_vanishes"] = verdict(an == 0);
      log.record("odd_level_vanishes", an == 0, n);
    }
    Json lv{{"n", n}, {"a_n", to_string(an)}, {"l1", nullptr}, {"l2sq", nullptr}, {"checks", checks}};
    if (dump) lv["developed"] = vec3_to_json(v);
    out.push_back(std::move(lv));
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

extern "C" {

const char* expsig_version(void) { return EXPSIG_VERSION_STRING; }

const char* expsig_status_name(expsig_status s) {
  switch (s) {
    case EXPSIG_OK: return "ok";
    case EXPSIG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EXPSIG_ERR_CAP_EXCEEDED: return "level cap exceeded";
    case EXPSIG_ERR_DOMAIN: return "domain error";
    case EXPSIG_ERR_POLE_PROXIMITY: return "pole proximity";
    case EXPSIG_ERR_INCONCLUSIVE: return "inconclusive at current precision";
    case EXPSIG_ERR_PRECISION_CEILING: return "precision ceiling reached";
    case EXPSIG_ERR_CANNOT_CERTIFY: return "cannot certify";
    case EXPSIG_ERR_INSUFFICIENT_DATA: return "insufficient data";
    case EXPSIG_ERR_CHECK_FAILED: return "verification check failed";
    case EXPSIG_ERR_IO: return "I/O error";
    case EXPSIG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* expsig_last_error(void) { return g_last_error.c_str(); }

void expsig_free(char* p) { std::free(p); }

expsig_status expsig_hierarchy_create(expsig_hierarchy** out) {
  return guarded([&] {
    if (!out) fail(ErrorCode::kInvalidArgument, "output pointer is null");
    *out = new expsig_hierarchy{};
    return EXPSIG_OK;
  });
}

void expsig_hierarchy_destroy(expsig_hierarchy* h) { delete h; }

expsig_status expsig_hierarchy_extend(expsig_hierarchy* h, expsig_mode mode, int n) {
  return guarded([&] {
    if (!h) fail(ErrorCode::kInvalidArgument, "hierarchy handle is null");
    check_levels(mode, n);
    if (mode == EXPSIG_MODE_TENSOR)
      h->impl.tensor_level(n);
    else
      h->impl.developed_level(n);
    return EXPSIG_OK;
  });
}

expsig_status expsig_hierarchy_coefficient(expsig_hierarchy* h, int n, char** out) {
  return guarded([&] {
    if (!h) fail(ErrorCode::kInvalidArgument, "hierarchy handle is null");
    require_out(out);
    check_levels(EXPSIG_MODE_DEVELOPED, n);
    emit(to_string(h->impl.a(n)), out);
    return EXPSIG_OK;
  });
}

expsig_status expsig_hierarchy_report(expsig_hierarchy* h, expsig_mode mode, int levels, int dump_polys,
                                      char** out_json) {
  return guarded([&] {
    if (!h) fail(ErrorCode::kInvalidArgument, "hierarchy handle is null");
    require_out(out_json);
    check_levels(mode, levels);
    CheckLog log;
    Json per_level = mode == EXPSIG_MODE_TENSOR ? tensor_report(h->impl, levels, dump_polys != 0, log)
                                                : developed_report(h->impl, levels, dump_polys != 0, log);
    Json doc{{"schema", "expsig.hierarchy/1"},
             {"mode", mode == EXPSIG_MODE_TENSOR ? "tensor" : "developed"},
             {"levels", levels},
             {"exact", true},
             {"per_level", std::move(per_level)},
             {"checks", log.summary()},
             {"all_checks_passed", log.all_ok()}};
    emit(doc.dump(2), out_json);
    if (!log.all_ok()) {
      g_last_error = "exactness checks failed:";
      for (const auto& [name, e] : log.summary().items())
        if (e["status"] == "fail") g_last_error += " " + name;
      return EXPSIG_ERR_CHECK_FAILED;
    }
    return EXPSIG_OK;
  });
}

expsig_status expsig_develop(expsig_hierarchy* h, const char* lambda, const char* x, const char* y, int levels,
                             char** out_json) {
  return guarded([&] {
    if (!h) fail(ErrorCode::kInvalidArgument, "hierarchy handle is null");
    require_out(out_json);
    check_levels(EXPSIG_MODE_DEVELOPED, levels);
    const Rat lam = rat_arg(lambda, "lambda"), zx = rat_arg(x, "x"), zy = rat_arg(y, "y");
    if (zx * zx + zy * zy > 1) fail(ErrorCode::kInvalidArgument, "z must lie in the closed unit disk");
    Json sums = Json::array();
    Vec3<Rat> acc{0, 0, 0};
    Rat lam_pow = 1;
    bool axis_ok = true, boundary_ok = true;
    const bool on_axis = zy == 0, on_circle = zx * zx + zy * zy == 1;
    for (int n = 0; n <= levels; ++n) {
      auto v = h->impl.dev_coefficient(n, zx, zy);
      for (std::size_t k = 0; k < 3; ++k) acc[k] += lam_pow * v[k];
      lam_pow *= lam;
      if (on_axis) axis_ok = axis_ok && acc[1] == 0;
      if (on_circle) boundary_ok = boundary_ok && acc[0] == 0 && acc[1] == 0 && acc[2] == 1;
      sums.push_back(Json{{"N", n}, {"F", {to_string(acc[0]), to_string(acc[1]), to_string(acc[2])}}});
    }
    Json checks = Json::object();
    if (on_axis) checks["second_component_zero_on_x_axis"] = verdict(axis_ok);
    if (on_circle) checks["boundary_value_is_e3"] = verdict(boundary_ok);
    Json doc{{"schema", "expsig.develop/1"},
             {"lambda", to_string(lam)},
             {"z", {to_string(zx), to_string(zy)}},
             {"levels", levels},
             {"exact", true},
             {"partial_sums", std::move(sums)},
             {"checks", checks}};
    emit(doc.dump(2), out_json);
    if (!axis_ok || !boundary_ok) {
      g_last_error = "development checks failed";
      return EXPSIG_ERR_CHECK_FAILED;
    }
    return EXPSIG_OK;
  });
}

expsig_status expsig_radius(expsig_hierarchy* h, int levels, char** out_csv) {
  return guarded([&] {
    if (!h) fail(ErrorCode::kInvalidArgument, "hierarchy handle is null");
    require_out(out_csv);
    check_levels(EXPSIG_MODE_DEVELOPED, levels);
    if (levels < 4) fail(ErrorCode::kInsufficientData, "radius estimates need at least 4 levels (a_0, a_2, a_4)");
    std::vector<Rat> coeffs;
    for (int n = 0; n <= levels; ++n) coeffs.push_back(h->impl.a(n));
    RadiusEstimate r = radius_estimate(coeffs);
    std::ostringstream os;
    os << "# schema=expsig.radius/1 levels=" << levels << "\n";
    os << "k,lambda_hat\n";
    for (std::size_t k = 0; k < r.estimates.size(); ++k) os << k << "," << fmt_double(r.estimates[k]) << "\n";
    emit(os.str(), out_csv);
    return EXPSIG_OK;
  });
}

expsig_status expsig_bessel_j(int nu, const char* re, const char* im, long precision, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    check_precision(precision);
    const ComplexBall x(RealBall::from_rat(rat_arg(re, "re"), precision),
                        RealBall::from_rat(rat_arg(im, "im"), precision));
    const int terms = bessel_auto_terms(x, precision);
    const ComplexBall j = bessel_j(nu, x, terms);
    Json doc{{"schema", "expsig.bessel/1"},  {"nu", nu},
             {"x", complex_ball_to_json(x)}, {"precision_bits", precision},
             {"terms", terms},               {"value", complex_ball_to_json(j)},
             {"text", j.to_string(16)}};
    emit(doc.dump(2), out_json);
    return EXPSIG_OK;
  });
}

expsig_status expsig_closed_form(const char* lambda, const char* r, long precision, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    check_precision(precision);
    const Rat lam = rat_arg(lambda, "lambda");
    if (lam < 0) fail(ErrorCode::kInvalidArgument, "lambda must be >= 0");
    const Rat rr = r ? parse_rat(r) : Rat(0);
    if (rr < 0 || rr > 1) fail(ErrorCode::kInvalidArgument, "r must lie in [0, 1]");
    const Constants k = make_constants(precision);
    const RealBall lb = RealBall::from_rat(lam, precision);
    const ComplexBall prod = d_product(lb, k);
    const RealBall d = prod.im();
    Json doc{{"schema", "expsig.closed-form/1"},
             {"lambda", to_string(lam)},
             {"r", to_string(rr)},
             {"precision_bits", precision},
             {"zeta", complex_ball_to_json(k.zeta)},
             {"alpha", complex_ball_to_json(k.alpha)},
             {"alpha_abs2", ball_to_json(k.alpha_abs2)},
             {"product", complex_ball_to_json(prod)},
             {"product_text", prod.to_string(14)},
             {"d", ball_to_json(d)},
             {"numerator", ball_to_json(c0_numerator(lb, k))},
             {"numerator_zeta_variant", ball_to_json(c0_numerator_zeta_variant(lb, k))}};
    if (d.contains_zero()) {
      doc["pole_proximity"] = true;
    } else {
      ABC abc = abc_closed_form(lb, RealBall::from_rat(rr, precision), k);
      doc["pole_proximity"] = false;
      doc["A"] = ball_to_json(abc.a);
      doc["B"] = ball_to_json(abc.b);
      doc["C"] = ball_to_json(abc.c);
    }
    emit(doc.dump(2), out_json);
    return EXPSIG_OK;
  });
}

expsig_status expsig_pole_locate(const char* width, long precision, char** out_json) {
  return guarded([&] {
    require_out(out_json);
    check_precision(precision);
    PoleCertificate c = locate_pole(rat_arg(width, "width"), precision);
    emit(certificate_to_json(c).dump(2), out_json);
    return EXPSIG_OK;
  });
}

expsig_status expsig_pole_verify(const char* certificate_json) {
  return guarded([&] {
    if (!certificate_json) fail(ErrorCode::kInvalidArgument, "certificate is null");
    PoleCertificate c = certificate_from_json(Json::parse(certificate_json));
    if (std::string why = check_certificate(c); !why.empty()) fail(ErrorCode::kCheckFailed, why);
    return EXPSIG_OK;
  });
}

expsig_status expsig_compare(expsig_hierarchy* h, const char* lambda, int levels, long precision, char** out_csv) {
  return guarded([&] {
    if (!h) fail(ErrorCode::kInvalidArgument, "hierarchy handle is null");
    require_out(out_csv);
    check_precision(precision);
    check_levels(EXPSIG_MODE_DEVELOPED, levels);
    const Rat lam = rat_arg(lambda, "lambda");
    if (lam < 0) fail(ErrorCode::kInvalidArgument, "lambda must be >= 0");
    const PoleCertificate cert = locate_pole(Rat(1, 1000), precision);
    if (lam >= cert.lo)
      fail(ErrorCode::kPoleProximity, "lambda = " + lam.get_str() + " is not below the certified pole bracket [" +
                                          cert.lo.get_str() + ", " + cert.hi.get_str() +
                                          "]; see `expsig pole` for the certificate");
    RealBall closed = RealBall::exact(1, precision);
    if (lam != 0) {
      // C_0 is the constant 1; d(0) = 0 makes the quotient form degenerate there.
      const Constants k = make_constants(precision);
      closed = abc_closed_form(RealBall::from_rat(lam, precision), RealBall(precision), k).c;
    }
    auto [cmid, crad] = closed.to_decimal(25);
    std::ostringstream os;
    os << "# schema=expsig.compare/1 lambda=" << to_string(lam) << " levels=" << levels
       << " bracket=[" << to_string(cert.lo) << "," << to_string(cert.hi) << "]\n";
    os << "k,partial_sum,closed_form_mid,closed_form_rad,gap_upper\n";
    Rat acc = 0, lam_pow = 1;
    for (int n = 0; n <= levels; ++n) {
      acc += lam_pow * h->impl.a(n);
      lam_pow *= lam;
      const RealBall s = RealBall::from_rat(acc, precision);
      const Mpfr gap = abs(s - closed).upper();
      char* gbuf = nullptr;
      mpfr_asprintf(&gbuf, "%.6RUe", gap.get());
      os << n << "," << s.to_decimal(25).first << "," << cmid << "," << crad << "," << gbuf << "\n";
      mpfr_free_str(gbuf);
    }
    emit(os.str(), out_csv);
    return EXPSIG_OK;
  });
}

void expsig_mc_config_init(expsig_mc_config* cfg) {
  if (!cfg) return;
  const SimConfig d;
  *cfg = expsig_mc_config{d.x0, d.y0, d.h, d.level, d.paths, d.seed, d.bridge_correction ? 1 : 0, 0};
}

expsig_status expsig_mc_run(const expsig_mc_config* cfg, char** out_csv) {
  return guarded([&] {
    if (!cfg) fail(ErrorCode::kInvalidArgument, "config is null");
    require_out(out_csv);
    const SimConfig c{cfg->x0, cfg->y0, cfg->h, cfg->level, cfg->paths, cfg->seed, cfg->bridge_correction != 0};
    const SigAccumulator acc = estimate_expected_sig(c, cfg->threads);
    Json header{{"schema", "expsig.mc/1"},  {"x0", fmt_double(c.x0)},     {"y0", fmt_double(c.y0)},
                {"h", fmt_double(c.h)},      {"level", c.level},           {"paths", c.paths},
                {"seed", std::to_string(c.seed)}, {"bridge_correction", c.bridge_correction}};
    std::ostringstream os;
    os << "# " << header.dump() << "\n";
    os << "word,mean,stderr\n";
    for (int n = 1; n <= c.level; ++n)
      for (std::size_t w = 0; w < (std::size_t{1} << n); ++w)
        os << word_string(w, n) << "," << fmt_double(acc.mean(n, w)) << "," << fmt_double(acc.stderr_of(n, w)) << "\n";
    os << "tau," << fmt_double(acc.exit_time_mean()) << "," << fmt_double(acc.exit_time_stderr()) << "\n";
    emit(os.str(), out_csv);
    return EXPSIG_OK;
  });
}

}  // extern "C"
