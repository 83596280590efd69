#include "hhverify.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "certify.hpp"
#include "errors.hpp"
#include "functions.hpp"
#include "integrals.hpp"
#include "kernel.hpp"
#include "means.hpp"
#include "report.hpp"
#include "theorems.hpp"
#include "util.hpp"
#include "version.hpp"

struct hhv_function_t {
  hhv::functions::FunctionSpec spec;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return HHV_OK;
  } catch (const hhv::ParseError& e) {
    g_last_error = e.what();
    return HHV_ERROR_PARSE;
  } catch (const hhv::EvalError& e) {
    g_last_error = e.what();
    return HHV_ERROR_DOMAIN;
  } catch (const hhv::InvalidArgument& e) {
    g_last_error = e.what();
    return HHV_ERROR_INVALID;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return HHV_ERROR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HHV_ERROR_INTERNAL;
  }
}

int require(bool ok, const char* message) {
  if (ok) return HHV_OK;
  g_last_error = message;
  return HHV_ERROR_INVALID;
}

} // namespace

extern "C" {

const char* hhv_version(void) { return hhv::kToolVersion; }

const char* hhv_last_error(void) { return g_last_error.c_str(); }

void hhv_string_free(char* s) { std::free(s); }

int hhv_mean(const char* which, double a, double b, double* out) {
  if (int rc = require(which && out, "null argument")) return rc;
  return guarded([&] {
    hhv::means::MeanPair pair(a, b);
    std::string w = which;
    if (w == "min") *out = std::min(a, b);
    else if (w == "max") *out = std::max(a, b);
    else if (w == "G") *out = hhv::means::geometric(pair);
    else if (w == "L") *out = hhv::means::logarithmic(pair);
    else if (w == "I") *out = hhv::means::identric(pair);
    else if (w == "A") *out = hhv::means::arithmetic(pair);
    else
      throw hhv::InvalidArgument("unknown mean '" + w +
                                 "' (expected min, G, L, I, A, max)");
  });
}

int hhv_mean_plog(double a, double b, double p, double* out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] { *out = hhv::means::p_logarithmic({a, b}, p); });
}

int hhv_mean_chain(double a, double b, char** json_out) {
  if (int rc = require(json_out != nullptr, "null argument")) return rc;
  return guarded([&] {
    hhv::means::ChainReport r = hhv::means::mean_chain({a, b});
    nlohmann::json j{{"min", r.min}, {"G", r.g},   {"L", r.l},
                     {"I", r.i},     {"A", r.a},   {"max", r.max},
                     {"strict", r.strict}};
    *json_out = dup_string(j.dump());
  });
}

int hhv_function_parse(const char* name, const char* text, double lo, double hi,
                       hhv_function** out) {
  if (int rc = require(text && out, "null argument")) return rc;
  return guarded([&] {
    auto* f = new hhv_function_t{
        hhv::functions::make_function(name ? name : "", text, lo, hi)};
    *out = f;
  });
}

int hhv_function_catalog(const char* name, hhv_function** out) {
  if (int rc = require(name && out, "null argument")) return rc;
  return guarded([&] {
    const auto* f = hhv::functions::find_in_catalog(name);
    if (!f)
      throw hhv::InvalidArgument("no catalog function named '" + std::string(name) +
                                 "'");
    *out = new hhv_function_t{*f};
  });
}

void hhv_function_free(hhv_function* f) { delete f; }

int hhv_function_eval(const hhv_function* f, double x, double* value, double* deriv) {
  if (int rc = require(f != nullptr, "null function")) return rc;
  return guarded([&] {
    hhv::expr::Dual d = f->spec.value_and_deriv(x);
    if (value) *value = d.value;
    if (deriv) *deriv = d.deriv;
  });
}

int hhv_function_text(const hhv_function* f, char** expr_out, char** deriv_out) {
  if (int rc = require(f != nullptr, "null function")) return rc;
  return guarded([&] {
    if (expr_out) *expr_out = dup_string(hhv::expr::to_string(f->spec.body));
    if (deriv_out) *deriv_out = dup_string(hhv::expr::to_string(f->spec.derivative));
  });
}

int hhv_certify(const hhv_function* f, const char* class_kind, double s, double lo,
                double hi, unsigned grid, unsigned t_steps, unsigned randoms,
                unsigned long long seed, double tolerance, char** json_out) {
  if (int rc = require(f && class_kind && json_out, "null argument")) return rc;
  return guarded([&] {
    hhv::certify::ConvexityClass cls = hhv::certify::class_from_name(class_kind, s);
    hhv::certify::SamplingPlan plan;
    if (grid) plan.grid = grid;
    if (t_steps) plan.t_steps = t_steps;
    if (randoms) plan.randoms = randoms;
    plan.seed = seed;
    if (tolerance > 0.0) plan.tolerance = tolerance;
    hhv::certify::Certificate cert = hhv::certify::run(f->spec, cls, lo, hi, plan);
    nlohmann::json j;
    j["class"] = hhv::certify::class_name(cls);
    j["s"] = cls.s;
    j["samples"] = cert.samples;
    j["worst_margin"] = cert.worst_margin;
    j["status"] = cert.certified() ? "certified-empirically" : "violated";
    if (cert.witness)
      j["witness"] = {{"x", (*cert.witness)[0]},
                      {"y", (*cert.witness)[1]},
                      {"t", (*cert.witness)[2]}};
    else
      j["witness"] = nullptr;
    *json_out = dup_string(j.dump());
  });
}

int hhv_kernel(double alpha, double beta, double lambda, double* out,
               char** method_out) {
  if (int rc = require(out != nullptr, "null argument")) return rc;
  return guarded([&] {
    hhv::kernel::KernelValue v = hhv::kernel::evaluate({alpha, beta, lambda});
    *out = v.value;
    if (method_out) *method_out = dup_string(hhv::kernel::method_name(v.method));
  });
}

int hhv_coefficient(const char* id, double s, double q, double a, double b,
                    double* out, char** method_out) {
  if (int rc = require(id && out, "null argument")) return rc;
  return guarded([&] {
    std::string name = id;
    if (name.size() < 2 || name[0] != 'c')
      throw hhv::InvalidArgument("coefficient id must be c1..c12");
    int index = std::atoi(name.c_str() + 1);
    hhv::kernel::KernelValue v = hhv::kernel::coefficient({index, s, q, a, b});
    *out = v.value;
    if (method_out) *method_out = dup_string(hhv::kernel::method_name(v.method));
  });
}

int hhv_gm_average(const hhv_function* f, double a, double b, double* value,
                   double* error_estimate) {
  if (int rc = require(f && value, "null argument")) return rc;
  return guarded([&] {
    hhv::quadrature::QuadResult r = hhv::integrals::gm_average(f->spec, a, b);
    *value = r.value;
    if (error_estimate) *error_estimate = r.error_estimate;
  });
}

int hhv_am_average(const hhv_function* f, double a, double b, double* value,
                   double* error_estimate) {
  if (int rc = require(f && value, "null argument")) return rc;
  return guarded([&] {
    hhv::quadrature::QuadResult r = hhv::integrals::am_average(f->spec, a, b);
    *value = r.value;
    if (error_estimate) *error_estimate = r.error_estimate;
  });
}

int hhv_identity_residual(const char* which, const hhv_function* f, double a,
                          double b, double* residual, double* quad_error) {
  if (int rc = require(which && f && residual, "null argument")) return rc;
  return guarded([&] {
    hhv::integrals::IdentityCheck chk = hhv::integrals::identity_residual(
        hhv::integrals::identity_from_name(which), f->spec, a, b);
    *residual = chk.residual;
    if (quad_error) *quad_error = chk.quad_error;
  });
}

void hhv_verify_params_init(hhv_verify_params* p) {
  if (!p) return;
  p->theorem = nullptr;
  p->a = p->b = 0.0;
  p->s = p->q = p->p = std::nan("");
  p->sense = p->target = p->direction = nullptr;
  p->tol = 1e-9;
  p->certify_hypothesis = 1;
  p->seed = 0;
}

int hhv_verify(const hhv_function* f, const hhv_verify_params* params,
               int* status_out, char** record_json) {
  if (int rc = require(params && params->theorem, "null params or theorem"))
    return rc;
  return guarded([&] {
    hhv::theorems::Request req;
    req.theorem = params->theorem;
    req.f = f ? &f->spec : nullptr;
    req.a = params->a;
    req.b = params->b;
    if (!std::isnan(params->s)) req.s = params->s;
    if (!std::isnan(params->q)) req.q = params->q;
    if (!std::isnan(params->p)) req.p = params->p;
    if (params->sense)
      req.sense = std::string(params->sense) == "first"
                      ? hhv::theorems::Sense::First
                      : hhv::theorems::Sense::Second;
    if (params->target)
      req.target = std::string(params->target) == "midpoint"
                       ? hhv::theorems::Target::Midpoint
                       : hhv::theorems::Target::Trapezoid;
    if (params->direction)
      req.direction = std::string(params->direction) == "concave"
                          ? hhv::theorems::Direction::Concave
                          : hhv::theorems::Direction::Convex;
    if (params->tol > 0.0) req.tol = params->tol;
    req.certify_hypothesis = params->certify_hypothesis != 0;
    req.plan.seed = params->seed;
    hhv::theorems::VerificationRecord rec = hhv::theorems::run(req);
    if (status_out)
      *status_out = rec.status == hhv::theorems::Status::Holds      ? 0
                    : rec.status == hhv::theorems::Status::Violated ? 1
                                                                    : 2;
    if (record_json) *record_json = dup_string(hhv::report::record_to_json(rec).dump());
  });
}

int hhv_scan(const char* spec_json, unsigned workers, char** report_json) {
  if (int rc = require(spec_json && report_json, "null argument")) return rc;
  return guarded([&] {
    hhv::report::GridSpec spec =
        hhv::report::grid_from_json(nlohmann::json::parse(spec_json));
    hhv::report::Report rep = hhv::report::run_scan(spec, workers);
    *report_json = dup_string(hhv::report::report_to_json(rep).dump(2));
  });
}

int hhv_report_csv(const char* report_json, char** csv_out) {
  if (int rc = require(report_json && csv_out, "null argument")) return rc;
  return guarded([&] {
    *csv_out =
        dup_string(hhv::report::report_to_csv(nlohmann::json::parse(report_json)));
  });
}

} // extern "C"
