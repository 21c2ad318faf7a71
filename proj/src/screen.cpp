#include "tetracenters/screen.hpp"

#include <atomic>
#include <chrono>
#include <thread>

namespace tc {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool settled(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::HoldsExact:
    case VerdictKind::Fails:
      return true;
    case VerdictKind::HoldsNumeric:
      return v.width < kNumericHoldWidth;
    case VerdictKind::Undecided:
      return v.degenerate;  // vacuous, more precision will not change it
  }
  return true;
}

std::string point_str(const TetraPoint& p) {
  TetraPoint n;
  try {
    n = p.normalized();
  } catch (const Error&) {
    n = p;
  }
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + n.x[i].str();
  return s + ")";
}

std::string status_of(const CellReport& c, int n) {
  std::string count = std::to_string(n) + " instances";
  if (c.holds_exact == n) return "confirmed (randomized exact, " + count + ")";
  if (c.holds_exact + c.holds_numeric == n) return "confirmed (interval, " + count + ")";
  if (c.fails > 0) return "fails (" + std::to_string(c.fails) + " of " + count + ")";
  if (c.errors == n) return "error";
  return "inconclusive";
}

CellReport screen_cell(const std::vector<EdgeLengths>& instances, const CenterRef& c, PropertyId id, int cap) {
  auto t0 = std::chrono::steady_clock::now();
  CellReport out;
  out.center = c.label();
  out.property = id;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const EdgeLengths& e = instances[k];
    try {
      CellEvaluation ev = evaluate_cell(e, c, id, cap);
      const Verdict& v = ev.verdict;
      if (ev.mode != "prefilter-64") ++out.escalated;
      if (v.degenerate) ++out.degenerate;
      switch (v.kind) {
        case VerdictKind::HoldsExact: ++out.holds_exact; break;
        case VerdictKind::HoldsNumeric:
          ++out.holds_numeric;
          out.max_width = std::max(out.max_width, v.width);
          break;
        case VerdictKind::Fails: ++out.fails; break;
        case VerdictKind::Undecided: ++out.undecided; break;
      }
      if (v.holds() && out.payload.empty()) out.payload = describe_payload(v);
      if (v.kind == VerdictKind::Fails && !out.counterexample) {
        std::string witness = v.witness;
        if (ev.mode == "prefilter-64") {
          // Replace the interval witness with the exact one where the exact path can produce it.
          try {
            Verdict exact = check_property(id, e, c, EvalContext::mixed());
            if (exact.kind == VerdictKind::Fails) witness = exact.witness;
          } catch (const Error&) {
          }
        }
        out.counterexample = Counterexample{static_cast<int>(k), e, witness};
      }
    } catch (const Error& err) {
      ++out.errors;
      if (out.error_messages.size() < 5)
        out.error_messages.push_back("instance " + std::to_string(k) + ": " + err.what());
    }
  }
  out.status = status_of(out, static_cast<int>(instances.size()));
  out.seconds = seconds_since(t0);
  return out;
}

}  // namespace

CellEvaluation evaluate_cell(const EdgeLengths& e, const CenterRef& c, PropertyId id, int precision_cap) {
  try {
    EvalContext pre = EvalContext::numeric(kPrefilterBits);
    Verdict v = check_property(id, e, face_points(e, c, pre), pre);
    if (v.kind == VerdictKind::Fails) return {v, "prefilter-64"};
  } catch (const Error&) {
    // Anything the prefilter cannot settle, including errors, goes to the exact path.
  }
  for (int bits = kRadicalBits;; bits *= 2) {
    bool last = bits * 2 > precision_cap;
    EvalContext ctx = EvalContext::mixed(bits);
    Verdict v;
    try {
      v = check_property(id, e, c, ctx);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Undecided && !last) continue;
      throw;
    }
    if (settled(v) || last) {
      return {v, v.kind == VerdictKind::HoldsExact ? "exact" : "mixed-" + std::to_string(bits)};
    }
  }
}

std::vector<CenterRef> expand_centers(const Catalog& cat, const std::vector<std::string>& specs) {
  std::vector<CenterRef> out;
  for (const auto& s : specs) {
    if (s.find('@') == std::string::npos) {
      const CatalogEntry* entry = cat.find(s);
      if (entry && entry->takes_r) {
        for (const auto& r : default_r_values()) out.push_back(CenterRef{*entry, r});
        continue;
      }
    }
    out.push_back(resolve_center(cat, s));
  }
  return out;
}

ScreenReport run_screen(const ScreenPlan& plan, const Catalog& cat) {
  if (plan.centers.empty()) throw Error(ErrorCode::InvalidArgument, "no centers in plan");
  if (plan.properties.empty()) throw Error(ErrorCode::InvalidArgument, "no properties in plan");
  if (plan.instances.empty() && plan.count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  if (plan.precision_cap < kRadicalBits)
    throw Error(ErrorCode::InvalidArgument, "precision cap below " + std::to_string(kRadicalBits) + " bits");
  auto t0 = std::chrono::steady_clock::now();

  ScreenReport report;
  report.family = plan.instances.empty() ? to_string(plan.family) : "file";
  report.seed = plan.seed;
  report.precision_cap = plan.precision_cap;
  report.properties = plan.properties;
  report.instances = plan.instances.empty() ? generate(plan.family, plan.seed, plan.count) : plan.instances;
  for (const auto& e : report.instances)
    if (auto v = validate(e); !v) throw Error(ErrorCode::InvalidInstance, e.str() + ": " + v.reason);

  std::vector<CenterRef> centers = expand_centers(cat, plan.centers);
  for (const auto& c : centers) report.centers.push_back(c.label());

  std::size_t cells = centers.size() * plan.properties.size();
  report.cells.resize(cells);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      const CenterRef& c = centers[i / plan.properties.size()];
      PropertyId id = plan.properties[i % plan.properties.size()];
      report.cells[i] = screen_cell(report.instances, c, id, plan.precision_cap);
    }
  };
  int jobs = std::max(1, std::min<int>(plan.jobs, static_cast<int>(cells)));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  report.seconds = seconds_since(t0);
  return report;
}

std::string describe_payload(const Verdict& v) {
  std::vector<std::string> parts;
  if (v.point) parts.push_back("point " + point_str(*v.point));
  if (v.hyperboloid_center) parts.push_back("hyperboloid center " + point_str(*v.hyperboloid_center));
  if (v.ratio) parts.push_back("squared ratio " + v.ratio->str());
  for (const auto& s : v.shared) parts.push_back("central " + to_string(s.central) + " = reference " + to_string(s.reference));
  for (const auto& m : v.euler) parts.push_back(to_string(m.kind) + " at t=" + m.t.str());
  if (v.degenerate) parts.push_back("degenerate");
  for (const auto& n : v.notes) parts.push_back(n);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

}  // namespace tc
