#include <chrono>
#include <random>

#include "tetracenters/theorems.hpp"

namespace tc {

namespace {

enum class Base { Isosceles, Regular, Circumscriptible };

// Instance k of a perturbation stream: a base instance with one or two edges nudged.
class Perturbations {
 public:
  Perturbations(Base base, std::uint64_t seed, int count) : base_(base), seed_(seed) {
    if (base == Base::Isosceles) bases_ = generate(TetraFamily::Isosceles, seed, count);
    if (base == Base::Circumscriptible) bases_ = generate(TetraFamily::Circumscriptible, seed, count);
  }

  std::optional<EdgeLengths> at(int k) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(k), 0x70u};
    std::mt19937_64 rng(seq);
    auto draw = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    EdgeLengths e;
    if (base_ == Base::Regular) {
      Rational s(draw(2, 30));
      e = EdgeLengths::of(s, s, s, s, s, s);
    } else {
      e = bases_[k];
    }
    int nudges = static_cast<int>(draw(1, 2));
    for (int n = 0; n < nudges; ++n) {
      Rational delta(draw(1, 3), draw(2, 60));
      if (rng() % 2) delta = -delta;
      auto& edge = rng() % 2 ? e.a[draw(0, 2)] : e.b[draw(0, 2)];
      edge += delta;
    }
    if (!validate(e)) return std::nullopt;
    return e;
  }

 private:
  Base base_;
  std::uint64_t seed_;
  std::vector<EdgeLengths> bases_;
};

std::vector<CenterRef> whole_catalog(const Catalog& cat) {
  std::vector<std::string> ids;
  for (const auto& entry : cat.entries()) ids.push_back(entry.id);
  return expand_centers(cat, ids);
}

bool is_regular(const EdgeLengths& e) {
  for (int i = 0; i < 3; ++i)
    if (e.a[i] != e.a[0] || e.b[i] != e.a[0]) return false;
  return true;
}

// Cheap decision of one property: prefilter first, then the exact path. Errors count as "no".
bool property_holds(const EdgeLengths& e, const CenterRef& c, PropertyId id, std::string* witness = nullptr) {
  try {
    CellEvaluation ev = evaluate_cell(e, c, id);
    if (witness) *witness = ev.verdict.holds() ? describe_payload(ev.verdict) : ev.verdict.witness;
    return ev.verdict.holds();
  } catch (const Error&) {
    return false;
  }
}

enum class Outcome { Fails, DoesNotFail, Error };

Outcome property_fails(const EdgeLengths& e, const CenterRef& c, PropertyId id, std::string* witness) {
  try {
    CellEvaluation ev = evaluate_cell(e, c, id);
    if (ev.verdict.kind != VerdictKind::Fails) return Outcome::DoesNotFail;
    *witness = ev.verdict.witness;
    return Outcome::Fails;
  } catch (const Error& err) {
    *witness = err.what();
    return Outcome::Error;
  }
}

// A center that cannot be evaluated on any of this many instances is not a point there.
constexpr int kUnevaluableAfter = 16;

enum class Exclude { Nothing, Centroid, PowerPoints };

HuntResult uniqueness(const HuntClaim& claim, TetraFamily family, PropertyId id, Exclude exclude,
                      int budget, std::uint64_t seed, const Catalog& cat) {
  HuntResult out;
  out.claim = claim.name;
  out.statement = claim.statement;
  out.budget = budget;
  out.seed = seed;
  out.outcome = HuntOutcome::Supported;
  std::vector<EdgeLengths> instances = generate(family, seed, std::min(budget, 16));
  for (const auto& c : whole_catalog(cat)) {
    long k = 0;
    if (exclude != Exclude::Nothing && is_power_point(c, &k) && (exclude == Exclude::PowerPoints || k == 0)) {
      out.excluded.push_back(c.label() + " (projectively a^" + std::to_string(k) + ")");
      continue;
    }
    HuntFinding f;
    f.center = c.label();
    int errors = 0;
    std::string last_error;
    for (int n = 0; n < budget && !f.found; ++n) {
      if (n == static_cast<int>(instances.size())) instances = generate(family, seed, budget);
      ++f.tried;
      std::string w;
      Outcome o = property_fails(instances[n], c, id, &w);
      if (o == Outcome::Fails) {
        f.found = true;
        f.instance = instances[n];
        f.witness = w;
      } else if (o == Outcome::Error) {
        ++errors;
        last_error = w;
      }
      if (errors == kUnevaluableAfter && f.tried == errors) break;
    }
    if (!f.found && f.tried == errors) {
      out.excluded.push_back(c.label() + " (no evaluable instance: " + last_error + ")");
      continue;
    }
    if (!f.found) out.outcome = HuntOutcome::Survivors;
    out.findings.push_back(f);
  }
  for (const char* id106 : {"X106", "X107", "X108", "X109", "X110", "X111"})
    if (!cat.find(id106)) out.excluded.push_back(std::string(id106) + " (not in the catalog)");
  return out;
}

// Searches instances from `base` for one where `premise` holds but `conclusion` does not.
HuntResult conjecture(const HuntClaim& claim, Base base, const std::vector<CenterRef>& centers,
                      const std::function<bool(const EdgeLengths&, const CenterRef&, std::string*)>& premise,
                      const std::function<bool(const EdgeLengths&, const CenterRef&)>& conclusion, int budget,
                      std::uint64_t seed) {
  HuntResult out;
  out.claim = claim.name;
  out.statement = claim.statement;
  out.budget = budget;
  out.seed = seed;
  out.outcome = HuntOutcome::Exhausted;
  HuntFinding f;
  f.center = centers.size() == 1 ? centers[0].label() : std::to_string(centers.size()) + " centers";
  Perturbations stream(base, seed, budget);
  for (int k = 0; k < budget && !f.found; ++k) {
    auto e = stream.at(k);
    if (!e) continue;
    ++f.tried;
    for (const auto& c : centers) {
      std::string w;
      if (premise(*e, c, &w) && !conclusion(*e, c)) {
        f.found = true;
        f.center = c.label();
        f.instance = *e;
        f.witness = w;
        out.outcome = HuntOutcome::Counterexample;
        break;
      }
    }
  }
  out.findings.push_back(f);
  return out;
}

}  // namespace

std::string to_string(HuntOutcome o) {
  switch (o) {
    case HuntOutcome::Supported: return "supported";
    case HuntOutcome::Survivors: return "survivors";
    case HuntOutcome::Counterexample: return "counterexample";
    case HuntOutcome::Exhausted: return "exhausted";
  }
  return "?";
}

const std::vector<HuntClaim>& hunt_claims() {
  static const std::vector<HuntClaim> claims{
      {"centroid-uniqueness", "the centroid is the only center whose cevians concur on every isosceles tetrahedron"},
      {"power-uniqueness", "power points are the only centers whose cevians form a hyperbolic group on every tetrahedron"},
      {"planarity-impossibility", "no center has coplanar face centers on every isosceles tetrahedron"},
      {"converse-circumscriptible", "if the cevians to the Nagel points concur, the tetrahedron is circumscriptible"},
      {"conjecture-central-isosceles", "a central tetrahedron that is isosceles comes from an isosceles reference"},
      {"conjecture-central-regular", "a central tetrahedron that is regular comes from a regular reference"},
      {"conjecture-similar-centroid", "a central tetrahedron similar to the reference comes from the centroid"},
      {"conjecture-equal-cevians", "equal cevians to corresponding face centers imply an isosceles tetrahedron"},
  };
  return claims;
}

bool is_power_point(const CenterRef& c, long* k_out) {
  static const std::array<std::array<long, 3>, 3> triangles{{{4, 5, 6}, {5, 7, 9}, {3, 8, 10}}};
  CenterExpr f = c.entry.areal();
  std::vector<Triple> values;
  try {
    for (const auto& t : triangles) {
      TriangleSides s{Rational(t[0]), Rational(t[1]), Rational(t[2])};
      values.push_back(eval_center(f, CoordForm::Areal, s, c.r, EvalContext::mixed()).c);
    }
  } catch (const Error&) {
    return false;
  }
  for (long k = -10; k <= 10; ++k) {
    bool match = true;
    for (std::size_t n = 0; n < triangles.size() && match; ++n) {
      Triple pw;
      for (int i = 0; i < 3; ++i) pw[i] = Scalar(Rational(triangles[n][i]).pow(k));
      match = all_zero(cross_residuals(values[n], pw)) != ZeroTest::NonZero;
    }
    if (match) {
      if (k_out) *k_out = k;
      return true;
    }
  }
  return false;
}

HuntResult hunt_counterexample(const std::string& claim, int budget, std::uint64_t seed, const Catalog& cat) {
  if (budget < 1) throw Error(ErrorCode::InvalidArgument, "budget must be at least 1");
  const HuntClaim* found = nullptr;
  for (const auto& c : hunt_claims())
    if (c.name == claim) found = &c;
  if (!found) throw Error(ErrorCode::UnknownId, "unknown claim '" + claim + "'");
  auto t0 = std::chrono::steady_clock::now();
  HuntResult r;
  auto all = whole_catalog(cat);
  auto holds_as = [](PropertyId id) {
    return [id](const EdgeLengths& e, const CenterRef& c, std::string* w) { return property_holds(e, c, id, w); };
  };

  if (claim == "centroid-uniqueness") {
    // Centers projectively equal to a^0 on every face are the centroid.
    r = uniqueness(*found, TetraFamily::Isosceles, PropertyId::Concur, Exclude::Centroid, budget, seed, cat);
  } else if (claim == "power-uniqueness") {
    r = uniqueness(*found, TetraFamily::General, PropertyId::Hyperbolic, Exclude::PowerPoints, budget, seed, cat);
  } else if (claim == "planarity-impossibility") {
    r = uniqueness(*found, TetraFamily::Isosceles, PropertyId::Coplanar, Exclude::Nothing, budget, seed, cat);
  } else if (claim == "converse-circumscriptible") {
    r = conjecture(*found, Base::Circumscriptible, {resolve_center(cat, "X8")}, holds_as(PropertyId::Concur),
                   [](const EdgeLengths& e, const CenterRef&) { return family_predicate(e, TetraFamily::Circumscriptible); },
                   budget, seed);
  } else if (claim == "conjecture-central-isosceles") {
    r = conjecture(*found, Base::Isosceles, all, holds_as(PropertyId::CentralIsosceles),
                   [](const EdgeLengths& e, const CenterRef&) { return family_predicate(e, TetraFamily::Isosceles); },
                   budget, seed);
  } else if (claim == "conjecture-central-regular") {
    r = conjecture(*found, Base::Regular, all, holds_as(PropertyId::CentralRegular),
                   [](const EdgeLengths& e, const CenterRef&) { return is_regular(e); }, budget, seed);
  } else if (claim == "conjecture-similar-centroid") {
    std::vector<CenterRef> others;
    for (const auto& c : all) {
      long k = 1;
      if (!(is_power_point(c, &k) && k == 0)) others.push_back(c);
    }
    // Any instance works as the reference here; the premise should never hold off the centroid.
    r = conjecture(*found, Base::Isosceles, others, holds_as(PropertyId::SimilarToReference),
                   [](const EdgeLengths&, const CenterRef&) { return false; }, budget, seed);
  } else {
    r = conjecture(*found, Base::Isosceles, all, holds_as(PropertyId::EqualCevians),
                   [](const EdgeLengths& e, const CenterRef&) { return family_predicate(e, TetraFamily::Isosceles); },
                   budget, seed);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace tc
