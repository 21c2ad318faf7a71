#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetracenters/properties.hpp"

namespace tc {

struct ScreenPlan {
  TetraFamily family = TetraFamily::General;
  // "X7", "POW@2"; a bare parametric id expands over default_r_values().
  std::vector<std::string> centers;
  std::vector<PropertyId> properties;
  int count = 20;
  std::uint64_t seed = 1;
  int precision_cap = kDefaultPrecisionCap;
  int jobs = 1;
  // When non-empty these are screened instead of generated ones (family is then informational).
  std::vector<EdgeLengths> instances;
};

// One (instance, center, property) evaluation. The 64-bit interval prefilter
// settles Fails (an enclosure excluding zero is a proof); everything else is
// re-run with rationals kept exact and radicals as intervals, doubling the
// precision up to the cap while the verdict stays undecided or too wide.
struct CellEvaluation {
  Verdict verdict;
  std::string mode;  // "prefilter-64", "exact", "mixed-<bits>"
};

// Widest interval accepted as HoldsNumeric before escalating.
inline constexpr double kNumericHoldWidth = 5.421010862427522e-20;  // 2^-64

CellEvaluation evaluate_cell(const EdgeLengths& e, const CenterRef& c, PropertyId id,
                             int precision_cap = kDefaultPrecisionCap);

std::vector<CenterRef> expand_centers(const Catalog& cat, const std::vector<std::string>& specs);

struct Counterexample {
  int index = 0;
  EdgeLengths instance;
  std::string witness;
};

struct CellReport {
  std::string center;
  PropertyId property = PropertyId::Concur;
  int holds_exact = 0;
  int holds_numeric = 0;
  int fails = 0;
  int undecided = 0;
  int errors = 0;
  int degenerate = 0;
  int escalated = 0;  // instances the prefilter could not settle
  double max_width = 0.0;
  std::string status;
  std::string payload;  // from the first holding instance
  std::optional<Counterexample> counterexample;
  std::vector<std::string> error_messages;  // first few, "instance k: message"
  double seconds = 0.0;
};

struct ScreenReport {
  std::string family;
  std::uint64_t seed = 0;
  int precision_cap = kDefaultPrecisionCap;
  std::vector<std::string> centers;
  std::vector<PropertyId> properties;
  std::vector<EdgeLengths> instances;
  std::vector<CellReport> cells;  // center-major, in plan order
  double seconds = 0.0;
};

// Per-cell errors are recorded in the cell; only an invalid plan throws.
ScreenReport run_screen(const ScreenPlan& plan, const Catalog& cat);

// One-line description of a verdict's payload (point, ratio, shared centers, ...).
std::string describe_payload(const Verdict& v);

enum class ReportFormat { Json, Csv, Markdown };
ReportFormat parse_format(const std::string& s);

// Timing is left out unless asked for, so equal plans give byte-identical output.
std::string render(const ScreenReport& r, ReportFormat f, bool timing = false);

}  // namespace tc
