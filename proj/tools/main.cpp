// Command-line front end for the hhverify shared library.  Talks to the
// library exclusively through the C interface in hhverify.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hhverify.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 64;

struct OutputOptions {
  std::string out_path;
  std::string format = "text"; // text | json | csv
};

void add_output_options(CLI::App* cmd, OutputOptions& opts,
                        const std::string& default_format = "text") {
  opts.format = default_format;
  cmd->add_option("--out", opts.out_path, "write output to PATH instead of stdout");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
}

// Every subcommand accepts the full common flag set; subcommands where a
// flag has nothing to control take it without effect.
void add_inert_options(CLI::App* cmd, bool tol, bool seed, bool workers) {
  static double sink_tol;
  static unsigned long long sink_seed;
  static unsigned sink_workers;
  if (tol) cmd->add_option("--tol", sink_tol, "accepted; no effect here");
  if (seed) cmd->add_option("--seed", sink_seed, "accepted; no effect here");
  if (workers) cmd->add_option("--workers", sink_workers, "accepted; no effect here");
}

int emit(const OutputOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream out(opts.out_path);
  if (!out) {
    std::cerr << "error: cannot write to '" << opts.out_path << "'\n";
    return 1;
  }
  out << payload;
  return 0;
}

[[noreturn]] void fail_api(const char* what) {
  std::cerr << "error: " << what << ": " << hhv_last_error() << '\n';
  std::exit(1);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  hhv_string_free(s);
  return out;
}

// Parse "1,2,3" or "start:step:stop" (inclusive stop, within 1e-12 slack).
std::vector<double> parse_values(const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  if (text.find(':') != std::string::npos) {
    double start, step, stop;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &start, &step, &stop) != 3 ||
        step == 0.0)
      throw CLI::ValidationError("range must be start:step:stop with step != 0");
    for (double v = start; (step > 0 ? v <= stop + 1e-12 : v >= stop - 1e-12);
         v += step)
      out.push_back(v);
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma
                                                                  : comma - pos);
    out.push_back(std::stod(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

struct FunctionHandle {
  hhv_function* f = nullptr;
  ~FunctionHandle() { hhv_function_free(f); }
};

// "@name" resolves through the catalog; anything else parses as an expression.
void resolve_function(const std::string& ref, double lo, double hi,
                      FunctionHandle& handle) {
  int rc = ref.size() > 1 && ref[0] == '@'
               ? hhv_function_catalog(ref.c_str() + 1, &handle.f)
               : hhv_function_parse("", ref.c_str(), lo, hi, &handle.f);
  if (rc != HHV_OK) fail_api("cannot resolve function");
}

// ---------------------------------------------------------------------------

int cmd_means(double a, double b, std::optional<double> p, const OutputOptions& out) {
  char* chain_raw = nullptr;
  if (hhv_mean_chain(a, b, &chain_raw) != HHV_OK) fail_api("means");
  json chain = json::parse(take_string(chain_raw));
  if (p) {
    double lp;
    if (hhv_mean_plog(a, b, *p, &lp) != HHV_OK) fail_api("p-logarithmic mean");
    chain["Lp"] = lp;
    chain["p"] = *p;
  }
  if (out.format == "json") return emit(out, chain.dump(2));
  std::string text;
  for (const char* k : {"min", "G", "L", "I", "A", "max"})
    text += std::string(k) + " = " + chain[k].dump() + "\n";
  if (p) text += "L_p(p=" + json(*p).dump() + ") = " + chain["Lp"].dump() + "\n";
  text += std::string("chain strict: ") + (chain["strict"].get<bool>() ? "yes" : "no");
  return emit(out, text);
}

int cmd_coeff(const std::string& id, double s, double q, double a, double b,
              const OutputOptions& out) {
  double value;
  char* method_raw = nullptr;
  if (hhv_coefficient(id.c_str(), s, q, a, b, &value, &method_raw) != HHV_OK)
    fail_api("coefficient");
  std::string method = take_string(method_raw);
  if (out.format == "json") {
    json j{{"id", id}, {"s", s}, {"q", q}, {"a", a}, {"b", b},
           {"value", value}, {"method", method}};
    return emit(out, j.dump(2));
  }
  return emit(out, id + " = " + json(value).dump() + "  (" + method + ")");
}

int cmd_certify(const std::string& fref, const std::string& cls, double s, double lo,
                double hi, unsigned grid, unsigned t_steps, unsigned randoms,
                unsigned long long seed, double tol, const OutputOptions& out) {
  FunctionHandle f;
  resolve_function(fref, lo, hi, f);
  char* raw = nullptr;
  if (hhv_certify(f.f, cls.c_str(), s, lo, hi, grid, t_steps, randoms, seed, tol,
                  &raw) != HHV_OK)
    fail_api("certify");
  json cert = json::parse(take_string(raw));
  if (out.format == "json") return emit(out, cert.dump(2));
  std::string text = "class " + cert["class"].get<std::string>() + " on [" +
                     json(lo).dump() + ", " + json(hi).dump() + "]: " +
                     cert["status"].get<std::string>() +
                     " (worst margin " + cert["worst_margin"].dump() + " over " +
                     cert["samples"].dump() + " samples)";
  if (!cert["witness"].is_null())
    text += "\nwitness: " + cert["witness"].dump();
  int rc = emit(out, text);
  if (rc) return rc;
  return cert["status"] == "certified-empirically" ? 0 : 1;
}

int cmd_identity(const std::string& which, const std::string& fref, double a,
                 double b, const OutputOptions& out) {
  FunctionHandle f;
  resolve_function(fref, a, b, f);
  double residual, quad_error;
  if (hhv_identity_residual(which.c_str(), f.f, a, b, &residual, &quad_error) !=
      HHV_OK)
    fail_api("identity");
  if (out.format == "json") {
    json j{{"which", which}, {"a", a}, {"b", b}, {"residual", residual},
           {"quad_error", quad_error}};
    return emit(out, j.dump(2));
  }
  return emit(out, which + " residual = " + json(residual).dump() +
                       " (quadrature error " + json(quad_error).dump() + ")");
}

int cmd_verify(const std::string& theorem, const std::string& fref, double a,
               double b, std::optional<double> s, std::optional<double> q,
               std::optional<double> p, const std::string& sense,
               const std::string& target, const std::string& direction, double tol,
               bool no_certify, unsigned long long seed, const OutputOptions& out) {
  FunctionHandle f;
  bool needs_f = theorem != "prop1" && theorem != "prop2";
  if (needs_f) {
    if (fref.empty()) {
      std::cerr << "error: --theorem " << theorem << " requires --f\n";
      return kExitUsage;
    }
    resolve_function(fref, a, b, f);
  }
  hhv_verify_params params;
  hhv_verify_params_init(&params);
  params.theorem = theorem.c_str();
  params.a = a;
  params.b = b;
  if (s) params.s = *s;
  if (q) params.q = *q;
  if (p) params.p = *p;
  if (!sense.empty()) params.sense = sense.c_str();
  if (!target.empty()) params.target = target.c_str();
  if (!direction.empty()) params.direction = direction.c_str();
  params.tol = tol;
  params.certify_hypothesis = no_certify ? 0 : 1;
  params.seed = seed;

  int status = 0;
  char* raw = nullptr;
  if (hhv_verify(f.f, &params, &status, &raw) != HHV_OK) fail_api("verify");
  json rec = json::parse(take_string(raw));
  if (out.format == "json") {
    emit(out, rec.dump(2));
  } else {
    std::string text = theorem + " on [" + json(a).dump() + ", " + json(b).dump() +
                       "]: " + rec["status"].get<std::string>();
    text += "\nsides: " + rec["sides"].dump();
    text += "\nmargins: " + rec["margins"].dump();
    if (!rec["hypothesis_certified"].is_null() &&
        !rec["hypothesis_certified"].get<bool>())
      text += "\nnote: unverified hypothesis (certification found a violation)";
    emit(out, text);
  }
  return status; // 0 holds, 1 violated, 2 inconclusive
}

int cmd_scan(const json& spec, unsigned workers, const OutputOptions& out) {
  char* raw = nullptr;
  if (hhv_scan(spec.dump().c_str(), workers, &raw) != HHV_OK) fail_api("scan");
  std::string report = take_string(raw);
  if (out.format == "csv") {
    char* csv_raw = nullptr;
    if (hhv_report_csv(report.c_str(), &csv_raw) != HHV_OK) fail_api("csv");
    return emit(out, take_string(csv_raw));
  }
  if (out.format == "json") return emit(out, report);
  json j = json::parse(report);
  std::string text = "scan " + spec["theorem"].get<std::string>() + ": " +
                     j["summary"]["holds"].dump() + " holds, " +
                     j["summary"]["violated"].dump() + " violated, " +
                     j["summary"]["inconclusive"].dump() + " inconclusive, " +
                     j["summary"]["skipped"].dump() + " skipped; worst margin " +
                     j["summary"]["worst_margin"].dump();
  return emit(out, text);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical verification of Hermite-Hadamard-type inequalities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hhv_version());

  // means
  auto* means_cmd = app.add_subcommand("means", "evaluate the special means");
  double m_a, m_b;
  std::optional<double> m_p;
  OutputOptions m_out;
  means_cmd->add_option("--a", m_a)->required();
  means_cmd->add_option("--b", m_b)->required();
  means_cmd->add_option("--p", m_p, "also evaluate the p-logarithmic mean");
  add_output_options(means_cmd, m_out);
  add_inert_options(means_cmd, true, true, true);

  // coeff
  auto* coeff_cmd = app.add_subcommand("coeff", "evaluate a coefficient integral");
  std::string c_id;
  double c_s = 1.0, c_q = 1.0, c_a, c_b;
  OutputOptions c_out;
  coeff_cmd->add_option("--id", c_id, "c1..c12")->required();
  coeff_cmd->add_option("--s", c_s)->required();
  coeff_cmd->add_option("--q", c_q)->required();
  coeff_cmd->add_option("--a", c_a)->required();
  coeff_cmd->add_option("--b", c_b)->required();
  add_output_options(coeff_cmd, c_out);
  add_inert_options(coeff_cmd, true, true, true);

  // certify
  auto* cert_cmd =
      app.add_subcommand("certify", "empirically certify convexity-class membership");
  std::string ce_f, ce_class;
  double ce_s = 1.0, ce_lo = 1.0, ce_hi = 2.0, ce_tol = 0.0;
  unsigned ce_grid = 0, ce_tsteps = 0, ce_randoms = 0;
  unsigned long long ce_seed = 0;
  OutputOptions ce_out;
  cert_cmd->add_option("--f", ce_f, "expression or @catalog-name")->required();
  cert_cmd->add_option("--class", ce_class,
                       "convex|s-first|s-second|ga|ga-s-first|ga-s-second")
      ->required();
  cert_cmd->add_option("--s", ce_s);
  cert_cmd->add_option("--lo", ce_lo);
  cert_cmd->add_option("--hi", ce_hi);
  cert_cmd->add_option("--grid", ce_grid, "low-discrepancy grid side (default 64)");
  cert_cmd->add_option("--t-steps", ce_tsteps, "equispaced t values (default 33)");
  cert_cmd->add_option("--randoms", ce_randoms, "random triples (default 10000)");
  cert_cmd->add_option("--seed", ce_seed);
  cert_cmd->add_option("--tol", ce_tol, "margin tolerance (default 1e-10)");
  add_output_options(cert_cmd, ce_out);
  add_inert_options(cert_cmd, false, false, true);

  // identity
  auto* id_cmd = app.add_subcommand("identity", "residual of an integral identity");
  std::string i_which, i_f;
  double i_a, i_b;
  OutputOptions i_out;
  id_cmd->add_option("--which", i_which, "zhang|iscan-midpoint|iscan-trapezoid")
      ->required();
  id_cmd->add_option("--f", i_f)->required();
  id_cmd->add_option("--a", i_a)->required();
  id_cmd->add_option("--b", i_b)->required();
  add_output_options(id_cmd, i_out);
  add_inert_options(id_cmd, true, true, true);

  // verify
  auto* v_cmd = app.add_subcommand("verify", "verify one theorem instance");
  std::string v_theorem, v_f, v_sense, v_target, v_direction;
  double v_a, v_b, v_tol = 1e-9;
  std::optional<double> v_s, v_q, v_p;
  bool v_no_certify = false;
  unsigned long long v_seed = 0;
  OutputOptions v_out;
  v_cmd->add_option("--theorem", v_theorem,
                    "hh-s|ga-s-hh|zhang-pm|zhang-hoelder|zhang-2p|zcz|thm21|thm22|"
                    "prop1|prop2")
      ->required();
  v_cmd->add_option("--f", v_f, "expression or @catalog-name");
  v_cmd->add_option("--a", v_a)->required();
  v_cmd->add_option("--b", v_b)->required();
  v_cmd->add_option("--s", v_s);
  v_cmd->add_option("--q", v_q);
  v_cmd->add_option("--p", v_p);
  v_cmd->add_option("--sense", v_sense)->check(CLI::IsMember({"first", "second"}));
  v_cmd->add_option("--target", v_target)
      ->check(CLI::IsMember({"trapezoid", "midpoint"}));
  v_cmd->add_option("--direction", v_direction)
      ->check(CLI::IsMember({"convex", "concave"}));
  v_cmd->add_option("--tol", v_tol);
  v_cmd->add_flag("--no-certify", v_no_certify, "skip hypothesis certification");
  v_cmd->add_option("--seed", v_seed);
  add_output_options(v_cmd, v_out);
  add_inert_options(v_cmd, false, false, true);

  // scan
  auto* s_cmd = app.add_subcommand("scan", "verify a parameter grid");
  std::string s_theorem, s_f, s_a, s_b, s_s, s_q, s_p, s_direction = "convex";
  std::vector<std::string> s_senses, s_targets;
  double s_tol = 1e-9;
  unsigned s_workers = 1;
  unsigned long long s_seed = 0;
  bool s_no_certify = false;
  OutputOptions s_out;
  s_cmd->add_option("--theorem", s_theorem)->required();
  s_cmd->add_option("--f", s_f, "expression or @catalog-name");
  s_cmd->add_option("--a", s_a, "list 1,2,3 or range start:step:stop")->required();
  s_cmd->add_option("--b", s_b)->required();
  s_cmd->add_option("--s", s_s);
  s_cmd->add_option("--q", s_q);
  s_cmd->add_option("--p", s_p);
  s_cmd->add_option("--sense", s_senses)->check(CLI::IsMember({"first", "second"}));
  s_cmd->add_option("--target", s_targets)
      ->check(CLI::IsMember({"trapezoid", "midpoint"}));
  s_cmd->add_option("--direction", s_direction)
      ->check(CLI::IsMember({"convex", "concave"}));
  s_cmd->add_option("--tol", s_tol);
  s_cmd->add_option("--workers", s_workers);
  s_cmd->add_option("--seed", s_seed);
  s_cmd->add_flag("--no-certify", s_no_certify);
  add_output_options(s_cmd, s_out, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (means_cmd->parsed()) return cmd_means(m_a, m_b, m_p, m_out);
    if (coeff_cmd->parsed()) return cmd_coeff(c_id, c_s, c_q, c_a, c_b, c_out);
    if (cert_cmd->parsed())
      return cmd_certify(ce_f, ce_class, ce_s, ce_lo, ce_hi, ce_grid, ce_tsteps,
                         ce_randoms, ce_seed, ce_tol, ce_out);
    if (id_cmd->parsed()) return cmd_identity(i_which, i_f, i_a, i_b, i_out);
    if (v_cmd->parsed())
      return cmd_verify(v_theorem, v_f, v_a, v_b, v_s, v_q, v_p, v_sense, v_target,
                        v_direction, v_tol, v_no_certify, v_seed, v_out);
    if (s_cmd->parsed()) {
      json spec;
      spec["theorem"] = s_theorem;
      spec["function"] = s_f;
      spec["a"] = parse_values(s_a);
      spec["b"] = parse_values(s_b);
      spec["s"] = parse_values(s_s);
      spec["q"] = parse_values(s_q);
      spec["p"] = parse_values(s_p);
      if (!s_senses.empty()) spec["senses"] = s_senses;
      if (!s_targets.empty()) spec["targets"] = s_targets;
      spec["direction"] = s_direction;
      spec["tol"] = s_tol;
      spec["seed"] = s_seed;
      spec["certify"] = !s_no_certify;
      return cmd_scan(spec, s_workers, s_out);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
