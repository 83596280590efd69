/*
 * hhverify -- numerical verification of Hermite-Hadamard-type inequalities
 * for convexity classes built on geometric/arithmetic input-output means,
 * the associated special-means bounds, and the coefficient integrals
 * behind them.
 *
 * C interface of the shared library.  All functions return HHV_OK (0) on
 * success or a nonzero error code; hhv_last_error() returns a thread-local
 * message for the last failing call on the same thread.  Strings returned
 * through char** are heap-allocated and must be released with
 * hhv_string_free().
 */
#ifndef HHVERIFY_H
#define HHVERIFY_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HHV_API __declspec(dllexport)
#else
#define HHV_API __attribute__((visibility("default")))
#endif

enum {
  HHV_OK = 0,
  HHV_ERROR_PARSE = 1,    /* expression syntax error */
  HHV_ERROR_DOMAIN = 2,   /* evaluation domain error */
  HHV_ERROR_INVALID = 3,  /* invalid argument / precondition violation */
  HHV_ERROR_INTERNAL = 4, /* internal invariant failure */
};

HHV_API const char* hhv_version(void);
HHV_API const char* hhv_last_error(void);
HHV_API void hhv_string_free(char* s);

/* ---- special means ----------------------------------------------------- */

/* which: "min", "G", "L", "I", "A", "max".  Requires a, b > 0. */
HHV_API int hhv_mean(const char* which, double a, double b, double* out);

/* p-logarithmic mean; p must not be -1 (logarithmic) or 0 (identric). */
HHV_API int hhv_mean_plog(double a, double b, double p, double* out);

/* JSON object {"min":..,"G":..,"L":..,"I":..,"A":..,"max":..,"strict":bool};
 * requires a != b. */
HHV_API int hhv_mean_chain(double a, double b, char** json_out);

/* ---- functions ---------------------------------------------------------- */

typedef struct hhv_function_t hhv_function;

/* Parse an expression in x over the grammar
 *   expr := term (("+"|"-") term)* ; term := factor (("*"|"/") factor)* ;
 *   factor := "-" factor | base ("^" factor)? ;
 *   base := number | "x" | ("ln"|"exp"|"sqrt"|"abs") "(" expr ")" | "(" expr ")"
 * The first derivative is derived automatically. */
HHV_API int hhv_function_parse(const char* name, const char* text, double lo,
                               double hi, hhv_function** out);

/* Look up a built-in test function by name (linear, square, reciprocal,
 * log, exp_half, power_3_2, sqrt, one, neg_linear). */
HHV_API int hhv_function_catalog(const char* name, hhv_function** out);

HHV_API void hhv_function_free(hhv_function* f);

/* Value and exact first derivative at x. */
HHV_API int hhv_function_eval(const hhv_function* f, double x, double* value,
                              double* deriv);

/* Canonical expression text and derivative text. */
HHV_API int hhv_function_text(const hhv_function* f, char** expr_out,
                              char** deriv_out);

/* ---- convexity certification ------------------------------------------- */

/* class_kind: "convex", "s-first", "s-second", "ga", "ga-s-first",
 * "ga-s-second".  Samples grid*grid low-discrepancy (x,y) pairs times
 * t_steps equispaced t values plus `randoms` seeded uniform triples on
 * [lo, hi]; certifies when the worst margin stays above -tolerance.
 * Pass 0 for grid/t_steps/randoms/tolerance to use the defaults
 * (64, 33, 10000, 1e-10).  Returns a JSON certificate. */
HHV_API int hhv_certify(const hhv_function* f, const char* class_kind, double s,
                        double lo, double hi, unsigned grid, unsigned t_steps,
                        unsigned randoms, unsigned long long seed,
                        double tolerance, char** json_out);

/* ---- kernel and coefficient integrals ----------------------------------- */

/* K(alpha,beta,lambda) = int_0^1 t^alpha (1-t)^beta e^{lambda t} dt;
 * alpha, beta >= 0, |lambda| <= 700.  method_out (optional) receives
 * "series" or "quadrature". */
HHV_API int hhv_kernel(double alpha, double beta, double lambda, double* out,
                       char** method_out);

/* id: "c1".."c12"; s in (0,1], q > 0, 0 < a < b. */
HHV_API int hhv_coefficient(const char* id, double s, double q, double a, double b,
                            double* out, char** method_out);

/* ---- integral functionals and identities -------------------------------- */

/* (1/(ln b - ln a)) int_a^b f(x)/x dx  and  (1/(b-a)) int_a^b f(x) dx. */
HHV_API int hhv_gm_average(const hhv_function* f, double a, double b, double* value,
                           double* error_estimate);
HHV_API int hhv_am_average(const hhv_function* f, double a, double b, double* value,
                           double* error_estimate);

/* which: "zhang", "iscan-midpoint", "iscan-trapezoid".  Evaluates both sides
 * of the named integral identity with independent quadratures and returns
 * |lhs - rhs|. */
HHV_API int hhv_identity_residual(const char* which, const hhv_function* f,
                                  double a, double b, double* residual,
                                  double* quad_error);

/* ---- theorem verification ----------------------------------------------- */

typedef struct hhv_verify_params {
  const char* theorem;   /* hh-s | ga-s-hh | zhang-pm | zhang-hoelder |
                            zhang-2p | zcz | thm21 | thm22 | prop1 | prop2 */
  double a, b;
  double s;              /* NAN when unused */
  double q;              /* NAN when unused */
  double p;              /* NAN when unused */
  const char* sense;     /* "first" | "second" | NULL */
  const char* target;    /* "trapezoid" | "midpoint" | NULL */
  const char* direction; /* "convex" | "concave" | NULL */
  double tol;            /* margin tolerance; <= 0 selects 1e-9 */
  int certify_hypothesis;       /* nonzero: certify the hypothesis class */
  unsigned long long seed;      /* certification seed */
} hhv_verify_params;

/* Fill defaults: NAN parameters, NULL strings, tol 1e-9, certification on. */
HHV_API void hhv_verify_params_init(hhv_verify_params* p);

/* status_out: 0 holds, 1 violated, 2 inconclusive.  record_json (optional)
 * receives the full verification record.  f may be NULL for prop1/prop2. */
HHV_API int hhv_verify(const hhv_function* f, const hhv_verify_params* params,
                       int* status_out, char** record_json);

/* ---- grid scans ---------------------------------------------------------- */

/* spec_json: {"theorem":..., "function":"@name"|"expr", "a":[...], "b":[...],
 *  "s":[...], "q":[...], "p":[...], "senses":[...], "targets":[...],
 *  "direction":..., "tol":..., "seed":..., "certify":bool}.
 * The report is deterministic and independent of the worker count. */
HHV_API int hhv_scan(const char* spec_json, unsigned workers, char** report_json);

/* Flatten a scan report to CSV (header + one row per record). */
HHV_API int hhv_report_csv(const char* report_json, char** csv_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HHVERIFY_H */
