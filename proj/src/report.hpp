#ifndef HHV_REPORT_HPP
#define HHV_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "theorems.hpp"

namespace hhv::report {

/// Parameter grid for a scan: the cartesian product of the lists that apply
/// to the chosen theorem.  Points violating the theorem's preconditions are
/// recorded as skipped with the rejection reason.
struct GridSpec {
  std::string theorem;
  std::string function_ref; // "@catalog-name" or an expression
  std::vector<double> a_values, b_values, s_values, q_values, p_values;
  std::vector<std::string> senses = {"second"};
  std::vector<std::string> targets = {"trapezoid"};
  std::string direction = "convex";
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool certify_hypothesis = true;
  certify::SamplingPlan plan; // plan.seed is derived per grid point
};

struct SkipEntry {
  nlohmann::json inputs;
  std::string reason;
};

struct Summary {
  std::size_t holds = 0, violated = 0, inconclusive = 0, skipped = 0;
  double worst_margin = 0.0;
  std::string worst_inputs;
};

struct Report {
  GridSpec spec;
  std::vector<theorems::VerificationRecord> records;
  std::vector<SkipEntry> skipped;
  Summary summary;
};

GridSpec grid_from_json(const nlohmann::json& j);
nlohmann::json grid_to_json(const GridSpec& spec);

/// Run every grid point, distributing across `workers` threads.  The report
/// is deterministic and independent of the worker count: records appear in
/// grid-enumeration order and per-point seeds derive from the spec seed and
/// the point index only.
Report run_scan(const GridSpec& spec, unsigned workers = 1);

nlohmann::json record_to_json(const theorems::VerificationRecord& rec);
nlohmann::json report_to_json(const Report& report);

/// One record per row; the side/margin columns are the sorted union of the
/// names appearing in the report, values printed with 17 significant digits.
std::string report_to_csv(const Report& report);
std::string report_to_csv(const nlohmann::json& report_json);

/// Resolve "@name" through the catalog or parse the expression text.
functions::FunctionSpec resolve_function(const std::string& ref, double lo, double hi);

} // namespace hhv::report

#endif
