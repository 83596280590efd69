// Exercises the shared-library C interface end to end: handles, error codes,
// thread-local error strings, and the JSON payloads.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hhverify.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hhv_string_free(s);
  return out;
}

struct Handle {
  hhv_function* f = nullptr;
  ~Handle() { hhv_function_free(f); }
};

} // namespace

TEST_CASE("version string") {
  CHECK(std::strlen(hhv_version()) > 0);
}

TEST_CASE("means") {
  double g = 0;
  REQUIRE(hhv_mean("G", 4.0, 9.0, &g) == HHV_OK);
  CHECK(g == doctest::Approx(6.0));

  double lp = 0;
  REQUIRE(hhv_mean_plog(1.0, 2.0, 1.0, &lp) == HHV_OK);
  CHECK(lp == doctest::Approx(1.5));

  char* raw = nullptr;
  REQUIRE(hhv_mean_chain(1.0, 2.0, &raw) == HHV_OK);
  json chain = json::parse(take(raw));
  CHECK(chain["strict"] == true);
  CHECK(chain["G"].get<double>() < chain["L"].get<double>());

  CHECK(hhv_mean("Z", 1.0, 2.0, &g) == HHV_ERROR_INVALID);
  CHECK(std::string(hhv_last_error()).find("unknown mean") != std::string::npos);
  CHECK(hhv_mean("G", -1.0, 2.0, &g) == HHV_ERROR_INVALID);
  CHECK(hhv_mean_plog(1.0, 2.0, 0.0, &lp) == HHV_ERROR_INVALID);
  CHECK(hhv_mean_chain(2.0, 2.0, &raw) == HHV_ERROR_INVALID);
}

TEST_CASE("function handles") {
  Handle h;
  REQUIRE(hhv_function_parse("sq", "x^2", 1.0, 4.0, &h.f) == HHV_OK);
  double v = 0, d = 0;
  REQUIRE(hhv_function_eval(h.f, 3.0, &v, &d) == HHV_OK);
  CHECK(v == 9.0);
  CHECK(d == 6.0);

  char *expr_text = nullptr, *deriv_text = nullptr;
  REQUIRE(hhv_function_text(h.f, &expr_text, &deriv_text) == HHV_OK);
  CHECK(take(expr_text) == "x^2");
  CHECK(take(deriv_text) == "2*x");

  Handle cat;
  REQUIRE(hhv_function_catalog("log", &cat.f) == HHV_OK);
  REQUIRE(hhv_function_eval(cat.f, std::exp(1.0), &v, &d) == HHV_OK);
  CHECK(v == doctest::Approx(1.0));

  hhv_function* bad = nullptr;
  CHECK(hhv_function_parse("", "2*^x", 1.0, 2.0, &bad) == HHV_ERROR_PARSE);
  CHECK(std::string(hhv_last_error()).find("offset 2") != std::string::npos);
  CHECK(hhv_function_catalog("nope", &bad) == HHV_ERROR_INVALID);

  Handle log_handle;
  REQUIRE(hhv_function_parse("", "ln(x)", 0.5, 2.0, &log_handle.f) == HHV_OK);
  CHECK(hhv_function_eval(log_handle.f, -1.0, &v, &d) == HHV_ERROR_DOMAIN);
}

TEST_CASE("certification through the C interface") {
  Handle h;
  REQUIRE(hhv_function_parse("c", "2.5", 1.0, 8.0, &h.f) == HHV_OK);
  char* raw = nullptr;
  REQUIRE(hhv_certify(h.f, "ga-s-second", 0.5, 1.0, 8.0, 16, 9, 500, 7, 0.0, &raw) ==
          HHV_OK);
  json cert = json::parse(take(raw));
  CHECK(cert["status"] == "certified-empirically");
  CHECK(cert["worst_margin"].get<double>() >= 0.0);
  CHECK(cert["witness"].is_null());
  CHECK(cert["samples"].get<std::size_t>() == 16 * 16 * 9 + 500);

  Handle neg;
  REQUIRE(hhv_function_parse("neg", "-x", 1.0, 4.0, &neg.f) == HHV_OK);
  REQUIRE(hhv_certify(neg.f, "ga", 1.0, 1.0, 4.0, 16, 9, 500, 7, 0.0, &raw) == HHV_OK);
  json bad = json::parse(take(raw));
  CHECK(bad["status"] == "violated");
  CHECK_FALSE(bad["witness"].is_null());

  CHECK(hhv_certify(h.f, "bogus", 1.0, 1.0, 2.0, 0, 0, 0, 0, 0.0, &raw) ==
        HHV_ERROR_INVALID);
}

TEST_CASE("kernel and coefficients") {
  double v = 0;
  char* method = nullptr;
  REQUIRE(hhv_kernel(0.0, 0.0, 0.0, &v, &method) == HHV_OK);
  CHECK(v == doctest::Approx(1.0));
  CHECK(take(method) == "series");

  REQUIRE(hhv_kernel(1.0, 1.0, 40.0, &v, &method) == HHV_OK);
  CHECK(take(method) == "quadrature");

  REQUIRE(hhv_coefficient("c8", 1.0, 2.0, 1.0, std::exp(1.0), &v, nullptr) == HHV_OK);
  CHECK(v == doctest::Approx((std::exp(2.0) + 1.0) / 4.0).epsilon(1e-12));

  CHECK(hhv_kernel(-1.0, 0.0, 0.0, &v, nullptr) == HHV_ERROR_INVALID);
  CHECK(hhv_coefficient("c13", 1.0, 1.0, 1.0, 2.0, &v, nullptr) == HHV_ERROR_INVALID);
  CHECK(hhv_coefficient("x1", 1.0, 1.0, 1.0, 2.0, &v, nullptr) == HHV_ERROR_INVALID);
}

TEST_CASE("integral functionals and identities") {
  Handle h;
  REQUIRE(hhv_function_parse("", "x", 0.5, 4.0, &h.f) == HHV_OK);
  double value = 0, err = 0;
  REQUIRE(hhv_gm_average(h.f, 1.0, 2.0, &value, &err) == HHV_OK);
  CHECK(value == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
  REQUIRE(hhv_am_average(h.f, 1.0, 2.0, &value, &err) == HHV_OK);
  CHECK(value == doctest::Approx(1.5).epsilon(1e-13));

  double residual = 0, quad_err = 0;
  REQUIRE(hhv_identity_residual("iscan-midpoint", h.f, 1.0, 2.0, &residual,
                                &quad_err) == HHV_OK);
  CHECK(residual <= 1e-9);
  CHECK(hhv_identity_residual("nope", h.f, 1.0, 2.0, &residual, &quad_err) ==
        HHV_ERROR_INVALID);
}

TEST_CASE("verification") {
  Handle h;
  REQUIRE(hhv_function_parse("", "x^2", 0.5, 4.0, &h.f) == HHV_OK);
  hhv_verify_params params;
  hhv_verify_params_init(&params);
  CHECK(params.certify_hypothesis == 1);
  CHECK(std::isnan(params.s));
  params.theorem = "thm21";
  params.a = 1.0;
  params.b = 2.0;
  params.s = 0.5;
  params.q = 2.0;
  params.sense = "second";
  params.target = "midpoint";

  int status = -1;
  char* raw = nullptr;
  REQUIRE(hhv_verify(h.f, &params, &status, &raw) == HHV_OK);
  CHECK(status == 0);
  json rec = json::parse(take(raw));
  CHECK(rec["theorem"] == "thm21");
  CHECK(rec["status"] == "holds");
  CHECK(rec["hypothesis_certified"] == true);
  CHECK(rec["margins"]["margin"].get<double>() >= -1e-9);

  // prop1 does not need a function handle.
  hhv_verify_params p1;
  hhv_verify_params_init(&p1);
  p1.theorem = "prop1";
  p1.a = 1.0;
  p1.b = 2.0;
  p1.q = 2.0;
  REQUIRE(hhv_verify(nullptr, &p1, &status, nullptr) == HHV_OK);
  CHECK(status == 0);

  p1.theorem = "prop2"; // b <= 1 violated
  CHECK(hhv_verify(nullptr, &p1, &status, nullptr) == HHV_ERROR_INVALID);

  params.q = 0.5; // thm21 requires q >= 1
  CHECK(hhv_verify(h.f, &params, &status, &raw) == HHV_ERROR_INVALID);
}

TEST_CASE("scan and csv") {
  json spec{{"theorem", "thm21"},
            {"function", "@linear"},
            {"a", {1.0}},
            {"b", {2.0, 3.0}},
            {"s", {0.5, 1.0}},
            {"q", {1.0, 2.0}},
            {"seed", 42},
            {"certify", false}};
  char* raw = nullptr;
  REQUIRE(hhv_scan(spec.dump().c_str(), 2, &raw) == HHV_OK);
  std::string report_text = take(raw);
  json report = json::parse(report_text);
  CHECK(report["records"].size() == 8);
  CHECK(report["summary"]["holds"] == 8);

  char* csv_raw = nullptr;
  REQUIRE(hhv_report_csv(report_text.c_str(), &csv_raw) == HHV_OK);
  std::string csv = take(csv_raw);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);

  CHECK(hhv_scan("not json", 1, &raw) == HHV_ERROR_INVALID);
  CHECK(hhv_scan("{\"theorem\":\"thm21\"}", 1, &raw) != HHV_OK);
}
