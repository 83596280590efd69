#include "report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ctime>
#include <limits>
#include <set>
#include <thread>

#include "errors.hpp"
#include "util.hpp"
#include "version.hpp"

namespace hhv::report {

namespace {

using nlohmann::json;
using theorems::VerificationRecord;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool uses_s(const std::string& t) {
  return t == "hh-s" || t == "ga-s-hh" || t == "thm21" || t == "thm22";
}
bool uses_q(const std::string& t) {
  return t.rfind("zhang", 0) == 0 || t == "thm21" || t == "thm22" || t == "prop1" ||
         t == "prop2";
}
bool uses_p(const std::string& t) { return t == "zhang-2p"; }
bool uses_sense(const std::string& t) {
  return t == "ga-s-hh" || t == "thm21" || t == "thm22";
}
bool uses_target(const std::string& t) { return t == "thm21" || t == "thm22"; }
bool uses_function(const std::string& t) { return t != "prop1" && t != "prop2"; }

theorems::Sense sense_from(const std::string& s) {
  if (s == "first") return theorems::Sense::First;
  if (s == "second") return theorems::Sense::Second;
  throw InvalidArgument("unknown sense '" + s + "' (expected first or second)");
}

theorems::Target target_from(const std::string& s) {
  if (s == "trapezoid") return theorems::Target::Trapezoid;
  if (s == "midpoint") return theorems::Target::Midpoint;
  throw InvalidArgument("unknown target '" + s + "' (expected trapezoid or midpoint)");
}

theorems::Direction direction_from(const std::string& s) {
  if (s == "convex") return theorems::Direction::Convex;
  if (s == "concave") return theorems::Direction::Concave;
  throw InvalidArgument("unknown direction '" + s + "' (expected convex or concave)");
}

struct GridPoint {
  double a, b;
  std::optional<double> s, q, p;
  std::optional<std::string> sense, target;

  json inputs_json(const GridSpec& spec) const {
    json j;
    j["a"] = a;
    j["b"] = b;
    if (s) j["s"] = *s;
    if (q) j["q"] = *q;
    if (p) j["p"] = *p;
    if (sense) j["sense"] = *sense;
    if (target) j["target"] = *target;
    if (spec.theorem == "zcz") j["direction"] = spec.direction;
    return j;
  }
};

std::vector<GridPoint> enumerate(const GridSpec& spec) {
  const std::string& t = spec.theorem;
  auto one = [](std::vector<double> v) {
    return v.empty() ? std::vector<double>{0.0} : v;
  };
  std::vector<double> ss = uses_s(t) ? spec.s_values : std::vector<double>{};
  std::vector<double> qs = uses_q(t) ? spec.q_values : std::vector<double>{};
  std::vector<double> ps = uses_p(t) ? spec.p_values : std::vector<double>{};
  std::vector<std::string> senses =
      uses_sense(t) ? spec.senses : std::vector<std::string>{};
  std::vector<std::string> targets =
      uses_target(t) ? spec.targets : std::vector<std::string>{};
  if (uses_s(t) && spec.s_values.empty())
    throw InvalidArgument("scan over '" + t + "' needs s values");
  if (uses_q(t) && spec.q_values.empty())
    throw InvalidArgument("scan over '" + t + "' needs q values");
  if (uses_p(t) && spec.p_values.empty())
    throw InvalidArgument("scan over '" + t + "' needs p values");

  std::vector<GridPoint> points;
  for (double a : spec.a_values)
    for (double b : spec.b_values)
      for (double s : one(ss))
        for (double q : one(qs))
          for (double p : one(ps))
            for (const std::string& sense : senses.empty()
                                                ? std::vector<std::string>{""}
                                                : senses)
              for (const std::string& target : targets.empty()
                                                   ? std::vector<std::string>{""}
                                                   : targets) {
                GridPoint pt;
                pt.a = a;
                pt.b = b;
                if (uses_s(t)) pt.s = s;
                if (uses_q(t)) pt.q = q;
                if (uses_p(t)) pt.p = p;
                if (!sense.empty()) pt.sense = sense;
                if (!target.empty()) pt.target = target;
                points.push_back(pt);
              }
  return points;
}

} // namespace

functions::FunctionSpec resolve_function(const std::string& ref, double lo, double hi) {
  if (!ref.empty() && ref[0] == '@') {
    const functions::FunctionSpec* f = functions::find_in_catalog(ref.substr(1));
    if (!f) throw InvalidArgument("no catalog function named '" + ref.substr(1) + "'");
    return *f;
  }
  return functions::make_function("", ref, lo, hi);
}

GridSpec grid_from_json(const json& j) {
  GridSpec spec;
  spec.theorem = j.at("theorem").get<std::string>();
  spec.function_ref = j.value("function", std::string{});
  auto list = [&](const char* key) {
    std::vector<double> v;
    if (j.contains(key)) v = j.at(key).get<std::vector<double>>();
    return v;
  };
  spec.a_values = list("a");
  spec.b_values = list("b");
  spec.s_values = list("s");
  spec.q_values = list("q");
  spec.p_values = list("p");
  if (j.contains("senses")) spec.senses = j.at("senses").get<std::vector<std::string>>();
  if (j.contains("targets"))
    spec.targets = j.at("targets").get<std::vector<std::string>>();
  spec.direction = j.value("direction", std::string("convex"));
  spec.tol = j.value("tol", 1e-9);
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.certify_hypothesis = j.value("certify", true);
  return spec;
}

json grid_to_json(const GridSpec& spec) {
  json j;
  j["theorem"] = spec.theorem;
  j["function"] = spec.function_ref;
  j["a"] = spec.a_values;
  j["b"] = spec.b_values;
  j["s"] = spec.s_values;
  j["q"] = spec.q_values;
  j["p"] = spec.p_values;
  j["senses"] = spec.senses;
  j["targets"] = spec.targets;
  j["direction"] = spec.direction;
  j["tol"] = spec.tol;
  j["seed"] = spec.seed;
  j["certify"] = spec.certify_hypothesis;
  return j;
}

json record_to_json(const VerificationRecord& rec) {
  json j;
  j["theorem"] = rec.theorem_id;
  json inputs;
  inputs["f"] = rec.f_name;
  inputs["expr"] = rec.f_source;
  inputs["a"] = rec.a;
  inputs["b"] = rec.b;
  if (rec.s) inputs["s"] = *rec.s;
  if (rec.q) inputs["q"] = *rec.q;
  if (rec.p) inputs["p"] = *rec.p;
  if (rec.sense) inputs["sense"] = *rec.sense;
  if (rec.target) inputs["target"] = *rec.target;
  if (rec.direction) inputs["direction"] = *rec.direction;
  j["inputs"] = inputs;
  json sides, margins;
  for (const auto& nv : rec.sides) sides[nv.name] = nv.value;
  for (const auto& nv : rec.margins) margins[nv.name] = nv.value;
  j["sides"] = sides;
  j["margins"] = margins;
  j["status"] = theorems::status_name(rec.status);
  j["quad_error"] = rec.quad_error;
  j["tolerance"] = rec.tolerance;
  if (rec.hypothesis_certified)
    j["hypothesis_certified"] = *rec.hypothesis_certified;
  else
    j["hypothesis_certified"] = nullptr;
  return j;
}

Report run_scan(const GridSpec& spec, unsigned workers) {
  if (workers == 0) workers = 1;
  std::vector<GridPoint> points = enumerate(spec);

  functions::FunctionSpec f;
  if (uses_function(spec.theorem)) {
    double lo = 1e300, hi = 0.0;
    for (double a : spec.a_values) lo = std::min(lo, a);
    for (double b : spec.b_values) hi = std::max(hi, b);
    if (points.empty()) { // domain immaterial, keep construction valid
      lo = 1.0;
      hi = 2.0;
    }
    f = resolve_function(spec.function_ref, lo, hi);
  }

  struct Outcome {
    bool skipped = false;
    std::string reason;
    VerificationRecord record;
  };
  std::vector<Outcome> outcomes(points.size());

  auto evaluate_point = [&](std::size_t i) {
    const GridPoint& pt = points[i];
    theorems::Request req;
    req.theorem = spec.theorem;
    req.f = uses_function(spec.theorem) ? &f : nullptr;
    req.a = pt.a;
    req.b = pt.b;
    req.s = pt.s;
    req.q = pt.q;
    req.p = pt.p;
    if (pt.sense) req.sense = sense_from(*pt.sense);
    if (pt.target) req.target = target_from(*pt.target);
    if (spec.theorem == "zcz") req.direction = direction_from(spec.direction);
    req.tol = spec.tol;
    req.certify_hypothesis = spec.certify_hypothesis;
    req.plan = spec.plan;
    req.plan.seed = spec.seed + i; // per-point seed: index only, not worker
    try {
      outcomes[i].record = theorems::run(req);
    } catch (const std::exception& e) {
      outcomes[i].skipped = true;
      outcomes[i].reason = e.what();
    }
  };

  if (workers == 1 || points.size() <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) evaluate_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= points.size()) return;
        evaluate_point(i);
      }
    };
    std::vector<std::thread> pool;
    unsigned n = std::min<std::size_t>(workers, points.size());
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  Report report;
  report.spec = spec;
  report.summary.worst_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (outcomes[i].skipped) {
      report.skipped.push_back({points[i].inputs_json(spec), outcomes[i].reason});
      ++report.summary.skipped;
      continue;
    }
    const VerificationRecord& rec = outcomes[i].record;
    switch (rec.status) {
      case theorems::Status::Holds: ++report.summary.holds; break;
      case theorems::Status::Violated: ++report.summary.violated; break;
      case theorems::Status::Inconclusive: ++report.summary.inconclusive; break;
    }
    double wm = rec.worst_margin();
    if (wm < report.summary.worst_margin) {
      report.summary.worst_margin = wm;
      report.summary.worst_inputs = points[i].inputs_json(spec).dump();
    }
    report.records.push_back(rec);
  }
  if (report.records.empty()) report.summary.worst_margin = 0.0;
  return report;
}

json report_to_json(const Report& report) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["tool_version"] = kToolVersion;
  j["timestamp"] = utc_timestamp();
  j["spec"] = grid_to_json(report.spec);
  json records = json::array();
  for (const VerificationRecord& rec : report.records)
    records.push_back(record_to_json(rec));
  j["records"] = records;
  json skipped = json::array();
  for (const SkipEntry& sk : report.skipped)
    skipped.push_back({{"inputs", sk.inputs}, {"reason", sk.reason}});
  j["skipped"] = skipped;
  j["summary"] = {{"holds", report.summary.holds},
                  {"violated", report.summary.violated},
                  {"inconclusive", report.summary.inconclusive},
                  {"skipped", report.summary.skipped},
                  {"worst_margin", report.summary.worst_margin},
                  {"worst_inputs", report.summary.worst_inputs}};
  return j;
}

std::string report_to_csv(const json& report_json) {
  const json& records = report_json.at("records");
  std::set<std::string> side_names, margin_names;
  for (const json& rec : records) {
    for (auto it = rec.at("sides").begin(); it != rec.at("sides").end(); ++it)
      side_names.insert(it.key());
    for (auto it = rec.at("margins").begin(); it != rec.at("margins").end(); ++it)
      margin_names.insert(it.key());
  }

  std::string out = "theorem,f,expr,a,b,s,q,p,sense,target,direction,status,"
                    "hypothesis_certified,quad_error";
  for (const std::string& n : side_names) out += ",side_" + n;
  for (const std::string& n : margin_names) out += ",margin_" + n;
  out += '\n';

  auto cell = [](const json& obj, const char* key) -> std::string {
    if (!obj.contains(key) || obj.at(key).is_null()) return "";
    const json& v = obj.at(key);
    if (v.is_number()) return double17(v.get<double>());
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    std::string s = v.get<std::string>();
    if (s.find(',') != std::string::npos) s = '"' + s + '"';
    return s;
  };

  for (const json& rec : records) {
    const json& in = rec.at("inputs");
    out += rec.at("theorem").get<std::string>();
    out += ',' + cell(in, "f") + ',' + cell(in, "expr") + ',' + cell(in, "a") + ',' +
           cell(in, "b") + ',' + cell(in, "s") + ',' + cell(in, "q") + ',' +
           cell(in, "p") + ',' + cell(in, "sense") + ',' + cell(in, "target") + ',' +
           cell(in, "direction") + ',' + rec.at("status").get<std::string>() + ',' +
           cell(rec, "hypothesis_certified") + ',' + cell(rec, "quad_error");
    for (const std::string& n : side_names)
      out += ',' + cell(rec.at("sides"), n.c_str());
    for (const std::string& n : margin_names)
      out += ',' + cell(rec.at("margins"), n.c_str());
    out += '\n';
  }
  return out;
}

std::string report_to_csv(const Report& report) {
  return report_to_csv(report_to_json(report));
}

} // namespace hhv::report
