#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tetracenters/screen.hpp"

namespace tc {

enum class CaseStatus { Pass, Fail, Excluded };
std::string to_string(CaseStatus s);

struct TheoremResult {
  std::string id;
  std::string statement;
  CaseStatus status = CaseStatus::Fail;
  std::string mode;  // "randomized exact", "interval", "search"
  int instances = 0;
  std::string evidence;
  double seconds = 0.0;
};

struct CaseContext {
  int n;
  std::uint64_t seed;
  const Catalog& cat;
};

struct TheoremCase {
  std::string id;  // "T5.1b", "T7a", ...
  std::string statement;
  TetraFamily family = TetraFamily::General;
  std::string centers;   // display only
  std::string property;  // display only
  std::string payload;   // expected payload predicate, display only
  int default_n = 100;
  std::string excluded;  // non-empty: reported, never run
  std::function<TheoremResult(const CaseContext&)> run;
};

const std::vector<TheoremCase>& theorem_registry();
const TheoremCase& find_case(const std::string& id);  // UnknownId

// n = 0 uses the case default. GenerationExhausted propagates.
TheoremResult verify_theorem(const TheoremCase& c, int n, std::uint64_t seed, const Catalog& cat);

std::string render_verification(const std::vector<TheoremResult>& results, ReportFormat f, bool timing = false);

// --- counterexample hunts ----------------------------------------------------

enum class HuntOutcome {
  Supported,       // uniqueness: every non-excluded center failed somewhere
  Survivors,       // uniqueness: some non-excluded center never failed within budget
  Counterexample,  // conjecture or converse: a violating instance was found
  Exhausted,       // conjecture or converse: nothing found within budget
};
std::string to_string(HuntOutcome o);

struct HuntFinding {
  std::string center;
  bool found = false;  // a failing (uniqueness) or violating (conjecture) instance
  int tried = 0;
  std::optional<EdgeLengths> instance;
  std::string witness;
};

struct HuntResult {
  std::string claim;
  std::string statement;
  HuntOutcome outcome = HuntOutcome::Exhausted;
  int budget = 0;
  std::uint64_t seed = 0;
  std::vector<HuntFinding> findings;
  std::vector<std::string> excluded;  // with reasons
  double seconds = 0.0;
};

struct HuntClaim {
  std::string name;
  std::string statement;
};
const std::vector<HuntClaim>& hunt_claims();

// True when the areal face values agree projectively with a^k, b^k, c^k for some
// k in [-10, 10] on several test triangles; *k receives the exponent.
bool is_power_point(const CenterRef& c, long* k = nullptr);

HuntResult hunt_counterexample(const std::string& claim, int budget, std::uint64_t seed, const Catalog& cat);

std::string render_hunt(const HuntResult& r, ReportFormat f, bool timing = false);

}  // namespace tc
