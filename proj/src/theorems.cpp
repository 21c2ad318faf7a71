#include "tetracenters/theorems.hpp"

#include <chrono>
#include <random>
#include <set>

namespace tc {

namespace {

using Points = std::array<TetraPoint, 4>;

struct Check {
  bool ok = true;
  bool numeric = false;
  std::string detail;
};

using InstanceFn = std::function<Check(const EdgeLengths&, const Catalog&)>;

Points pts(const Catalog& cat, const EdgeLengths& e, const std::string& center_id) {
  return face_points(e, resolve_center(cat, center_id), EvalContext::mixed());
}

Points pts(const EdgeLengths& e, const CatalogEntry& entry) {
  return face_points(e, entry, std::nullopt, EvalContext::mixed());
}

Check holds(const Verdict& v, const std::string& what) {
  Check c;
  c.ok = v.holds();
  c.numeric = v.kind == VerdictKind::HoldsNumeric;
  c.detail = c.ok ? describe_payload(v) : what + " " + to_string(v.kind) + (v.witness.empty() ? "" : ": " + v.witness);
  return c;
}

Check fail(const std::string& why) { return Check{false, false, why}; }

// All checks must hold; details of the first failure win.
Check all_of(const std::vector<Check>& cs) {
  Check out;
  for (const auto& c : cs) {
    out.numeric = out.numeric || c.numeric;
    if (!c.ok && out.ok) {
      out.ok = false;
      out.detail = c.detail;
    }
  }
  if (out.ok && !cs.empty()) out.detail = cs.front().detail;
  return out;
}

bool same(const TetraPoint& p, const TetraPoint& q) { return projectively_equal(p.x, q.x); }

std::string pt(const TetraPoint& p) {
  std::string s = "(";
  TetraPoint n = p.normalized();
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + n.x[i].str();
  return s + ")";
}

// Coordinate k is f applied to the sides (opposite A, B, C) of face k.
TetraPoint face_formula(const EdgeLengths& e, const std::function<Rational(const std::array<Rational, 3>&)>& f) {
  auto sides = face_sides(e);
  TetraPoint p;
  for (int k = 0; k < 4; ++k) p.x[k] = Scalar(f(sides[k]));
  return p;
}

TheoremResult over_instances(const CaseContext& cx, TetraFamily f, const InstanceFn& fn) {
  TheoremResult r;
  auto instances = generate(f, cx.seed, cx.n);
  r.instances = static_cast<int>(instances.size());
  bool numeric = false;
  int failures = 0;
  std::string first_pass, first_fail;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    Check c;
    try {
      c = fn(instances[k], cx.cat);
    } catch (const Error& err) {
      c = fail(err.what());
    }
    numeric = numeric || c.numeric;
    if (c.ok) {
      if (first_pass.empty()) first_pass = c.detail;
    } else if (failures++ == 0) {
      first_fail = "instance " + std::to_string(k) + " " + instances[k].str() + ": " + c.detail;
    }
  }
  r.mode = numeric ? "interval" : "randomized exact";
  r.status = failures ? CaseStatus::Fail : CaseStatus::Pass;
  if (failures)
    r.evidence = std::to_string(failures) + " of " + std::to_string(r.instances) + " instances fail; first: " + first_fail;
  else
    r.evidence = "holds on all " + std::to_string(r.instances) + " " + to_string(f) + " instances" +
                 (first_pass.empty() ? "" : "; first: " + first_pass);
  return r;
}

std::function<TheoremResult(const CaseContext&)> per_instance(TetraFamily f, InstanceFn fn) {
  return [f, fn](const CaseContext& cx) { return over_instances(cx, f, fn); };
}

// Merges runs of the same case over several families or parameters.
TheoremResult merge(const std::vector<TheoremResult>& parts, const std::vector<std::string>& labels) {
  TheoremResult r;
  r.status = CaseStatus::Pass;
  r.mode = "randomized exact";
  std::string ev;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    r.instances += parts[i].instances;
    if (parts[i].mode == "interval") r.mode = "interval";
    if (parts[i].status == CaseStatus::Fail) r.status = CaseStatus::Fail;
    if (parts[i].status == CaseStatus::Fail || i == 0) ev += (ev.empty() ? "" : " | ") + labels[i] + ": " + parts[i].evidence;
  }
  r.evidence = ev;
  return r;
}

bool has_shared(const Verdict& v, SpaceCenterKind c, SpaceCenterKind r) {
  for (const auto& s : v.shared)
    if (s.central == c && s.reference == r) return true;
  return false;
}

std::optional<Scalar> euler_t(const Verdict& v, SpaceCenterKind k) {
  for (const auto& m : v.euler)
    if (m.kind == k) return m.t;
  return std::nullopt;
}

InstanceFn shared_check(std::string center_id, SpaceCenterKind c, SpaceCenterKind r) {
  return [=](const EdgeLengths& e, const Catalog& cat) {
    Verdict v = check_space_center_relations(e, pts(cat, e, center_id), EvalContext::mixed()).shared;
    if (!has_shared(v, c, r))
      return fail("central " + to_string(c) + " differs from reference " + to_string(r) +
                  (v.holds() ? " (other coincidences: " + describe_payload(v) + ")" : ""));
    return Check{true, v.kind == VerdictKind::HoldsNumeric, "central " + to_string(c) + " = reference " + to_string(r)};
  };
}

// Euler-line membership with an optional exact parameter.
InstanceFn euler_check(std::string center_id, bool central_on_reference, SpaceCenterKind k, std::optional<Rational> t) {
  return [=](const EdgeLengths& e, const Catalog& cat) {
    auto rel = check_space_center_relations(e, pts(cat, e, center_id), EvalContext::mixed());
    const Verdict& v = central_on_reference ? rel.central_on_reference_euler : rel.reference_on_central_euler;
    auto got = euler_t(v, k);
    if (!got) return fail(to_string(k) + " is not on the Euler line");
    if (t && !(got->is_rational() && got->rational() == *t))
      return fail(to_string(k) + " at t=" + got->str() + ", expected " + t->str());
    return Check{true, !got->is_rational(), to_string(k) + " at t=" + got->str()};
  };
}

InstanceFn property_check(std::string center_id, PropertyId id) {
  return [=](const EdgeLengths& e, const Catalog& cat) {
    return holds(check_property(id, e, pts(cat, e, center_id), EvalContext::mixed()), to_string(id));
  };
}

InstanceFn concur_at(std::string center_id, std::function<TetraPoint(const EdgeLengths&)> expected, std::string label) {
  return [=](const EdgeLengths& e, const Catalog& cat) {
    Verdict v = check_concurrence(pts(cat, e, center_id));
    if (!v.holds()) return holds(v, "concurrence");
    if (!v.point) return fail("no intersection point");
    if (!same(*v.point, expected(e))) return fail("point " + pt(*v.point) + " is not " + label);
    return Check{true, v.kind == VerdictKind::HoldsNumeric, "point " + pt(*v.point) + " = " + label};
  };
}

InstanceFn normals_at(std::string center_id, std::optional<SpaceCenterKind> at) {
  return [=](const EdgeLengths& e, const Catalog& cat) {
    Verdict v = check_normals_concur(e.metric(), pts(cat, e, center_id));
    Check c = holds(v, "normal concurrence");
    if (c.ok && at) {
      if (!v.point) return fail("no intersection point");
      if (!same(*v.point, space_center(e, *at))) return fail("normals meet at " + pt(*v.point) + ", not the reference " + to_string(*at));
      c.detail = "normals meet at the reference " + to_string(*at);
    }
    return c;
  };
}

// Hyperbolic for the center and, with conjugates, its isotomic and isogonal conjugates.
InstanceFn hyperbolic_check(std::string id, bool conjugates) {
  return [=](const EdgeLengths& e, const Catalog& cat) {
    const CatalogEntry& base = cat.at(id);
    std::vector<Check> cs{holds(check_hyperbolic(pts(e, base)), id + " hyperbolic")};
    if (conjugates) {
      cs.push_back(holds(check_hyperbolic(pts(e, isotomic_of(base))), "isotomic conjugate of " + id + " hyperbolic"));
      cs.push_back(holds(check_hyperbolic(pts(e, isogonal_of(base))), "isogonal conjugate of " + id + " hyperbolic"));
    }
    return all_of(cs);
  };
}

TheoremResult centroid_row(const CaseContext& cx, std::function<Check(const EdgeLengths&, const Points&)> fn) {
  return over_instances(cx, TetraFamily::General,
                        [fn](const EdgeLengths& e, const Catalog& cat) { return fn(e, pts(cat, e, "X2")); });
}

// Every rational-only catalog entry (parametric ones over the default r values).
std::vector<CenterRef> rational_catalog(const Catalog& cat) {
  std::vector<std::string> ids;
  for (const auto& entry : cat.entries())
    if (entry.rational_only) ids.push_back(entry.id);
  return expand_centers(cat, ids);
}

TheoremResult isosceles_all_centers(const CaseContext& cx, PropertyId id,
                                    std::function<Check(const EdgeLengths&, const Points&)> extra = nullptr) {
  auto centers = rational_catalog(cx.cat);
  int skipped = 0;
  std::set<std::string> skipped_labels;
  TheoremResult r = over_instances(cx, TetraFamily::Isosceles, [&](const EdgeLengths& e, const Catalog&) {
    std::vector<Check> cs;
    for (const auto& c : centers) {
      Check k;
      try {
        Points p = face_points(e, c, EvalContext::mixed());
        k = extra ? extra(e, p) : holds(check_property(id, e, p, EvalContext::mixed()), c.label());
      } catch (const Error& err) {
        // Singular centers, points at infinity and flat central tetrahedra have no property to check.
        if (err.code() != ErrorCode::EvaluationSingular && err.code() != ErrorCode::PointAtInfinity &&
            err.code() != ErrorCode::CoplanarPoints)
          throw;
        ++skipped;
        skipped_labels.insert(c.label());
        continue;
      }
      k.detail = k.ok ? "" : c.label() + ": " + k.detail;
      cs.push_back(k);
    }
    Check out = all_of(cs);
    if (out.ok) out.detail = std::to_string(centers.size()) + " centers";
    return out;
  });
  r.evidence += "; " + std::to_string(centers.size()) + " centers per instance";
  if (skipped) {
    r.evidence += "; " + std::to_string(skipped) + " degenerate (center, instance) pairs skipped:";
    for (const auto& l : skipped_labels) r.evidence += " " + l;
  }
  return r;
}

// Random normalized point strictly inside face i.
TetraPoint face_point(std::mt19937_64& rng, int i) {
  TetraPoint p;
  for (int k = 0; k < 4; ++k)
    p.x[k] = k == i ? Scalar(0) : Scalar(Rational(static_cast<long>(rng() % 30) + 1, static_cast<long>(rng() % 7) + 1));
  return p.normalized();
}

TheoremResult tabov_pairs(const CaseContext& cx) {
  std::mt19937_64 rng(cx.seed);
  auto instances = generate(TetraFamily::General, cx.seed, 20);
  TheoremResult r;
  r.mode = "randomized exact";
  int conforming = 0, other = 0, mismatches = 0;
  std::string first;
  for (int n = 0; n < cx.n; ++n) {
    const EdgeLengths& e = instances[n % instances.size()];
    EdgeMetric m = e.metric();
    int i = n % 4, j = (i + 1 + (n / 4) % 3) % 4;
    TetraPoint pi = face_point(rng, i), pj = face_point(rng, j);
    if (n % 2 == 0) {
      // The residual is affine along a segment of normalized points; move pj onto its zero.
      TetraPoint qj = face_point(rng, j);
      Scalar r0 = tabov_residual(m, i, pi, j, pj), r1 = tabov_residual(m, i, pi, j, qj);
      if (is_zero(r1 - r0) == ZeroTest::NonZero) {
        Scalar t = r0 / (r0 - r1);
        pj = TetraPoint{(Scalar(1) - t) * pj.x + t * qj.x};
      }
    }
    bool cond = is_zero(tabov_residual(m, i, pi, j, pj)) == ZeroTest::Zero;
    (cond ? conforming : other)++;
    bool meet = lines_intersect(face_normal_line(m, i, pi), face_normal_line(m, j, pj));
    if (cond != meet && mismatches++ == 0)
      first = "pair " + std::to_string(n) + " on faces " + std::to_string(i + 1) + "," + std::to_string(j + 1);
  }
  r.instances = cx.n;
  r.status = mismatches ? CaseStatus::Fail : CaseStatus::Pass;
  r.evidence = std::to_string(conforming) + " conforming and " + std::to_string(other) +
               " non-conforming pairs; distance condition and normal intersection " +
               (mismatches ? "disagree on " + std::to_string(mismatches) + " (first: " + first + ")" : "agree on all");
  return r;
}

// Closure runs over (instance, center) pairs where the base property holds.
struct ClosurePair {
  EdgeLengths e;
  CatalogEntry entry;
};

std::vector<ClosurePair> concurrent_pairs(const CaseContext& cx) {
  std::vector<ClosurePair> out;
  int third = std::max(1, cx.n / 3);
  for (const auto& e : generate(TetraFamily::Circumscriptible, cx.seed, third)) out.push_back({e, cx.cat.at("X7")});
  for (const auto& e : generate(TetraFamily::Isodynamic, cx.seed + 1, third))
    out.push_back({e, a_power_times(cx.cat.at("X2"), static_cast<long>(out.size() % 5) - 2, 1)});
  for (const auto& e : generate(TetraFamily::Orthocentric, cx.seed + 2, std::max(1, cx.n - 2 * third)))
    out.push_back({e, cx.cat.at("X4")});
  return out;
}

std::vector<ClosurePair> hyperbolic_pairs(const CaseContext& cx) {
  std::vector<ClosurePair> out;
  int quarter = std::max(1, cx.n / 4);
  for (const auto& e : generate(TetraFamily::Isodynamic, cx.seed, quarter)) out.push_back({e, cx.cat.at("X10")});
  for (const auto& e : generate(TetraFamily::Circumscriptible, cx.seed + 1, quarter)) out.push_back({e, cx.cat.at("X9")});
  for (const auto& e : generate(TetraFamily::Isosceles, cx.seed + 2, quarter)) out.push_back({e, cx.cat.at("X5")});
  for (const auto& e : generate(TetraFamily::General, cx.seed + 3, std::max(1, cx.n - 3 * quarter)))
    out.push_back({e, power_of(cx.cat.at("X1"), 2)});
  return out;
}

TheoremResult closure(const CaseContext& cx, const std::vector<ClosurePair>& pairs, PropertyId id,
                      const std::function<std::vector<std::pair<std::string, CatalogEntry>>(const CatalogEntry&)>& derived) {
  TheoremResult r;
  r.mode = "randomized exact";
  r.instances = static_cast<int>(pairs.size());
  int failures = 0, checks = 0;
  std::string first;
  auto check = [&](const EdgeLengths& e, const CatalogEntry& entry) {
    Points p = pts(e, entry);
    return id == PropertyId::Concur ? check_concurrence(p) : check_hyperbolic(p);
  };
  for (const auto& [e, entry] : pairs) {
    try {
      Verdict base = check(e, entry);
      if (!base.holds()) {
        if (failures++ == 0) first = "base center " + entry.id + " fails on " + e.str();
        continue;
      }
      for (const auto& [label, d] : derived(entry)) {
        ++checks;
        Verdict v = check(e, d);
        if (v.kind == VerdictKind::HoldsNumeric) r.mode = "interval";
        if (!v.holds() && failures++ == 0) first = label + " of " + entry.id + " fails on " + e.str() + ": " + v.witness;
      }
    } catch (const Error& err) {
      if (failures++ == 0) first = entry.id + " on " + e.str() + ": " + err.what();
    }
  }
  r.status = failures ? CaseStatus::Fail : CaseStatus::Pass;
  r.evidence = failures ? std::to_string(failures) + " failures; first: " + first
                        : std::to_string(checks) + " derived-center checks hold on " + std::to_string(pairs.size()) +
                              " (instance, center) pairs";
  return r;
}

TheoremCase make(std::string id, std::string statement, TetraFamily f, std::string centers, std::string property,
                 std::string payload, int n, std::function<TheoremResult(const CaseContext&)> run) {
  TheoremCase c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.family = f;
  c.centers = std::move(centers);
  c.property = std::move(property);
  c.payload = std::move(payload);
  c.default_n = n;
  c.run = std::move(run);
  return c;
}

TheoremCase excluded(std::string id, std::string statement, TetraFamily f, std::string centers, std::string why) {
  TheoremCase c = make(std::move(id), std::move(statement), f, std::move(centers), "hyperbolic", "", 0, nullptr);
  c.excluded = std::move(why);
  return c;
}

std::vector<TheoremCase> build_registry() {
  using F = TetraFamily;
  using P = PropertyId;
  using K = SpaceCenterKind;
  std::vector<TheoremCase> v;
  auto add = [&](TheoremCase c) { v.push_back(std::move(c)); };

  // Arbitrary tetrahedra, centroid face centers.
  add(make("T5.1a", "faces of the centroid central tetrahedron are parallel to the reference faces", F::General, "X2",
           "faces parallel", "", 100, per_instance(F::General, property_check("X2", P::FacesParallel))));
  add(make("T5.1b", "cevians to the face centroids concur at the reference centroid", F::General, "X2", "concur",
           "point = (1/4,1/4,1/4,1/4)", 100,
           per_instance(F::General, concur_at(
                                        "X2", [](const EdgeLengths&) { return TetraPoint{{1, 1, 1, 1}}; },
                                        "(1/4,1/4,1/4,1/4)"))));
  add(make("T5.1c", "the centroid central tetrahedron is similar to the reference tetrahedron", F::General, "X2",
           "similar", "squared ratio = 1/9", 100, [](const CaseContext& cx) {
             return centroid_row(cx, [](const EdgeLengths& e, const Points& p) {
               Verdict v = check_central_class(P::SimilarToReference, e.metric(), p);
               Check c = holds(v, "similarity");
               if (c.ok && !(v.ratio && v.ratio->is_rational() && v.ratio->rational() == Rational(1, 9)))
                 return fail("squared ratio " + (v.ratio ? v.ratio->str() : std::string("missing")) + ", expected 1/9");
               return c;
             });
           }));
  add(make("T5.1d", "central centroid coincides with the reference centroid", F::General, "X2", "shared space center",
           "centroid = centroid", 100, per_instance(F::General, shared_check("X2", K::Centroid, K::Centroid))));
  add(make("T5.1e", "central circumcenter coincides with the reference Euler point", F::General, "X2",
           "shared space center", "circumcenter = Euler point", 100,
           per_instance(F::General, shared_check("X2", K::Circumcenter, K::EulerPoint))));
  add(make("T5.1f", "central Monge point lies on the reference Euler line", F::General, "X2", "on reference Euler line",
           "t = 2/3", 100, per_instance(F::General, euler_check("X2", true, K::MongePoint, Rational(2, 3)))));
  add(make("T5.1g", "central Euler point lies on the reference Euler line", F::General, "X2", "on reference Euler line",
           "t = 8/9", 100, per_instance(F::General, euler_check("X2", true, K::EulerPoint, Rational(8, 9)))));
  add(make("T5.1h", "reference circumcenter lies on the central Euler line", F::General, "X2", "on central Euler line",
           "t = 4", 100, per_instance(F::General, euler_check("X2", false, K::Circumcenter, Rational(4)))));
  add(make("T5.1i", "reference Monge point lies on the central Euler line", F::General, "X2", "on central Euler line",
           "t = -2", 100, per_instance(F::General, euler_check("X2", false, K::MongePoint, Rational(-2)))));
  add(make("T5.2", "normals at the face circumcenters concur at the reference circumcenter", F::General, "X3",
           "normals concur", "point = reference circumcenter", 100,
           per_instance(F::General, normals_at("X3", K::Circumcenter))));
  add(make("T5.3", "cevians to the r-power points form a hyperbolic group", F::General, "POW@-2..3", "hyperbolic",
           "hyperboloid center independent of line order", 50, [](const CaseContext& cx) {
             std::vector<TheoremResult> parts;
             std::vector<std::string> labels;
             for (long r = -2; r <= 3; ++r) {
               std::string center_id = "POW@" + std::to_string(r);
               parts.push_back(over_instances(cx, F::General, [center_id](const EdgeLengths& e, const Catalog& cat) {
                 Points p = pts(cat, e, center_id);
                 Verdict v = check_hyperbolic(p);
                 Check c = holds(v, "hyperbolic");
                 if (!c.ok || v.degenerate) return c;
                 if (!v.hyperboloid_center) return fail("no hyperboloid center");
                 static const int orders[3][4] = {{1, 2, 3, 0}, {3, 0, 2, 1}, {2, 3, 1, 0}};
                 for (const auto& o : orders) {
                   std::array<TetraLine, 4> lines;
                   for (int k = 0; k < 4; ++k) lines[k] = cevian(o[k], p[o[k]]);
                   if (!same(hyperboloid_center(lines), *v.hyperboloid_center))
                     return fail("hyperboloid center depends on the order of the lines");
                 }
                 return c;
               }));
               labels.push_back("r=" + std::to_string(r));
             }
             return merge(parts, labels);
           }));
  add(make("T5.4", "2a^r+b^r+c^r central tetrahedron shares the reference centroid", F::General, "Z8A@1, Z8A@2",
           "shared space center", "centroid = centroid", 100, [](const CaseContext& cx) {
             return merge({over_instances(cx, F::General, shared_check("Z8A@1", K::Centroid, K::Centroid)),
                           over_instances(cx, F::General, shared_check("Z8A@2", K::Centroid, K::Centroid))},
                          {"r=1", "r=2"});
           }));

  // Isosceles tetrahedra, every rational-only center.
  add(make("T6a", "cevians to any face center of an isosceles tetrahedron have equal length", F::Isosceles,
           "all rational-only", "equal cevians", "", 20,
           [](const CaseContext& cx) { return isosceles_all_centers(cx, P::EqualCevians); }));
  add(make("T6b", "central tetrahedron of any face center of an isosceles tetrahedron is isosceles", F::Isosceles,
           "all rational-only", "central isosceles", "", 20,
           [](const CaseContext& cx) { return isosceles_all_centers(cx, P::CentralIsosceles); }));
  add(make("T6c", "central tetrahedron of any face center of an isosceles tetrahedron shares the centroid",
           F::Isosceles, "all rational-only", "shared space center", "centroid = centroid", 20, [](const CaseContext& cx) {
             return isosceles_all_centers(cx, P::SharedSpaceCenter, [](const EdgeLengths& e, const Points& p) {
               Verdict v = check_space_center_relations(e, p, EvalContext::mixed()).shared;
               if (!has_shared(v, K::Centroid, K::Centroid)) return fail("central centroid differs");
               return Check{true, false, ""};
             });
           }));
  add(make("T6d", "cevians to any face center of an isosceles tetrahedron form a hyperbolic group", F::Isosceles,
           "all rational-only", "hyperbolic", "", 20,
           [](const CaseContext& cx) { return isosceles_all_centers(cx, P::Hyperbolic); }));

  // Circumscriptible tetrahedra.
  add(make("T7a", "cevians to the Gergonne points concur", F::Circumscriptible, "X7", "concur",
           "4th coordinate (a2+a3-a1)(a3+a1-a2)(a1+a2-a3)", 100,
           per_instance(F::Circumscriptible,
                        concur_at(
                            "X7",
                            [](const EdgeLengths& e) {
                              return face_formula(e, [](const auto& s) {
                                return (s[1] + s[2] - s[0]) * (s[2] + s[0] - s[1]) * (s[0] + s[1] - s[2]);
                              });
                            },
                            "(a2+a3-a1)(a3+a1-a2)(a1+a2-a3) per face"))));
  add(make("T7b", "cevians to the Nagel points concur", F::Circumscriptible, "X8", "concur", "4th coordinate a1+a2+a3-2t",
           100,
           per_instance(F::Circumscriptible,
                        concur_at(
                            "X8",
                            [](const EdgeLengths& e) {
                              Rational t = e.a[0] + e.b[0];
                              return face_formula(e, [t](const auto& s) { return s[0] + s[1] + s[2] - Rational(2) * t; });
                            },
                            "a1+a2+a3-2t per face"))));
  add(make("T7c", "Feuerbach points of a circumscriptible tetrahedron are coplanar", F::Circumscriptible, "X11",
           "coplanar", "", 100, per_instance(F::Circumscriptible, property_check("X11", P::Coplanar))));
  add(make("T7d", "normals at the incenters concur", F::Circumscriptible, "X1", "normals concur", "", 100,
           per_instance(F::Circumscriptible, normals_at("X1", std::nullopt))));
  add(make("T7e", "normals at the X40 points concur", F::Circumscriptible, "X40", "normals concur", "", 100,
           per_instance(F::Circumscriptible, normals_at("X40", std::nullopt))));
  {
    const char* ids[] = {"X7", "X8", "X9", "X41", "X11"};
    const char* letters = "abcde";
    for (int i = 0; i < 5; ++i)
      add(make(std::string("T7.2") + letters[i], std::string(ids[i]) + " and its conjugates form hyperbolic groups",
               F::Circumscriptible, std::string(ids[i]) + " +isotomic +isogonal", "hyperbolic", "", 100,
               per_instance(F::Circumscriptible, hyperbolic_check(ids[i], true))));
  }

  // Isodynamic tetrahedra.
  add(make("T8a", "cevians to any power point concur", F::Isodynamic, "POW@-1..2", "concur",
           "point (a1^k,a2^k,a3^k,(a1a2a3/t)^k), k=r+1; quoted 4th coordinate a1a2^(r+1)a3 reported", 100,
           [](const CaseContext& cx) {
             std::vector<TheoremResult> parts;
             std::vector<std::string> labels;
             for (long r = -1; r <= 2; ++r) {
               long k = r + 1;
               std::optional<Rational> quoted_ratio;
               bool quoted_constant = true;
               TheoremResult part = over_instances(cx, F::Isodynamic, [&](const EdgeLengths& e, const Catalog& cat) {
                 Verdict v = check_concurrence(pts(cat, e, "POW@" + std::to_string(r)));
                 if (!v.holds()) return holds(v, "concurrence");
                 Rational t = e.a[0] * e.b[0];
                 TetraPoint expected{{Scalar(e.a[0].pow(k)), Scalar(e.a[1].pow(k)), Scalar(e.a[2].pow(k)),
                                      Scalar((e.a[0] * e.a[1] * e.a[2] / t).pow(k))}};
                 if (!v.point || !same(*v.point, expected)) return fail("point differs from the empirical pattern");
                 // Scale so x1 = a1^k and compare x4 with the quoted polynomial.
                 const Rational& x1 = v.point->x[0].rational();
                 Rational x4 = v.point->x[3].rational() * e.a[0].pow(k) / x1;
                 Rational ratio = x4 / (e.a[0] * e.a[1].pow(r + 1) * e.a[2]);
                 if (!quoted_ratio) quoted_ratio = ratio;
                 else if (*quoted_ratio != ratio) quoted_constant = false;
                 return Check{true, false, "point " + pt(*v.point)};
               });
               part.evidence += std::string("; quoted 4th coordinate a1a2^(r+1)a3 ") +
                                (quoted_constant ? "proportional" : "not proportional") + " to the observed one";
               parts.push_back(part);
               labels.push_back("r=" + std::to_string(r));
             }
             TheoremResult out = merge(parts, labels);
             for (std::size_t i = 1; i < parts.size(); ++i)
               if (parts[i].status == CaseStatus::Pass)
                 out.evidence += " | " + labels[i] + ": " + parts[i].evidence.substr(parts[i].evidence.rfind("; quoted") + 2);
             return out;
           }));
  add(make("T8b", "Feuerbach points of an isodynamic tetrahedron are coplanar", F::Isodynamic, "X11", "coplanar", "",
           100, per_instance(F::Isodynamic, property_check("X11", P::Coplanar))));
  add(make("T8c", "X44 points of an isodynamic tetrahedron are coplanar", F::Isodynamic, "X44", "coplanar", "", 100,
           per_instance(F::Isodynamic, property_check("X44", P::Coplanar))));
  add(make("T8d", "Lemoine axes of the faces of an isodynamic tetrahedron are coplanar", F::Isodynamic,
           "Lemoine axis", "coplanar lines", "", 100, per_instance(F::Isodynamic, [](const EdgeLengths& e, const Catalog&) {
             return holds(check_lemoine_axes_coplanar(e), "Lemoine axes");
           })));
  add(make("T8e", "circumcenter of the X76 points coincides with the reference centroid", F::Isodynamic, "X76",
           "shared space center", "circumcenter = centroid", 100,
           per_instance(F::Isodynamic, shared_check("X76", K::Circumcenter, K::Centroid))));
  {
    const char* ids[] = {"X10", "X37", "X38", "X39", "X42"};
    const char* letters = "abcde";
    for (int i = 0; i < 5; ++i)
      add(make(std::string("T8.2") + letters[i], std::string(ids[i]) + " and its conjugates form hyperbolic groups",
               F::Isodynamic, std::string(ids[i]) + " +isotomic +isogonal", "hyperbolic", "", 100,
               per_instance(F::Isodynamic, hyperbolic_check(ids[i], true))));
    const char* more[] = {"X106", "X107", "X108", "X109", "X110", "X111"};
    for (int i = 0; i < 6; ++i)
      add(excluded(std::string("T8.2") + "fghijk"[i], std::string(more[i]) + " points form hyperbolic groups",
                   F::Isodynamic, more[i], "not in the curated catalog"));
  }

  // Orthocentric tetrahedra.
  add(make("T9a", "cevians to the orthocenters concur", F::Orthocentric, "X4", "concur",
           "4th coordinate (a2^2+a3^2-a1^2)(a3^2+a1^2-a2^2)(a1^2+a2^2-a3^2)", 100,
           per_instance(F::Orthocentric, concur_at(
                                             "X4",
                                             [](const EdgeLengths& e) {
                                               return face_formula(e, [](const auto& s) {
                                                 Rational p = s[0] * s[0], q = s[1] * s[1], r = s[2] * s[2];
                                                 return (q + r - p) * (r + p - q) * (p + q - r);
                                               });
                                             },
                                             "product of (b^2+c^2-a^2) per face"))));
  add(make("T9b", "cevians to the isotomic conjugates of the orthocenters concur", F::Orthocentric, "isotomic X4",
           "concur", "4th coordinate a1^2+a2^2+a3^2-2t", 100,
           per_instance(F::Orthocentric, [](const EdgeLengths& e, const Catalog& cat) {
             Verdict v = check_concurrence(pts(e, isotomic_of(cat.at("X4"))));
             if (!v.holds()) return holds(v, "concurrence");
             Rational t = e.a[0] * e.a[0] + e.b[0] * e.b[0];
             TetraPoint expected =
                 face_formula(e, [t](const auto& s) { return s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - Rational(2) * t; });
             if (!v.point || !same(*v.point, expected)) return fail("point differs from a1^2+a2^2+a3^2-2t per face");
             return Check{true, false, "point " + pt(*v.point)};
           })));
  add(make("T9c", "centroid of the nine-point centers coincides with the reference centroid", F::Orthocentric, "X5",
           "shared space center", "centroid = centroid", 100,
           per_instance(F::Orthocentric, shared_check("X5", K::Centroid, K::Centroid))));
  add(make("T9d", "centroid of the orthocenters coincides with the reference Monge point", F::Orthocentric, "X4",
           "shared space center", "centroid = Monge point", 100,
           per_instance(F::Orthocentric, shared_check("X4", K::Centroid, K::MongePoint))));
  add(make("T9e", "circumcenter of the orthocenters lies on the reference Euler line", F::Orthocentric, "X4",
           "on reference Euler line", "", 100,
           per_instance(F::Orthocentric, euler_check("X4", true, K::Circumcenter, std::nullopt))));
  add(make("T9f", "Monge point of the orthocenters lies on the reference Euler line", F::Orthocentric, "X4",
           "on reference Euler line", "", 100,
           per_instance(F::Orthocentric, euler_check("X4", true, K::MongePoint, std::nullopt))));
  add(make("T9g", "centroid of the X53 points coincides with the reference Monge point", F::Orthocentric, "X53",
           "shared space center", "centroid = Monge point", 100,
           per_instance(F::Orthocentric, shared_check("X53", K::Centroid, K::MongePoint))));
  {
    const char* ids[] = {"X3", "X2", "X4", "X5", "X20"};
    const char* letters = "abcde";
    for (int i = 0; i < 5; ++i)
      add(make(std::string("T9.2") + letters[i], std::string("normals at the ") + ids[i] + " points concur",
               F::Orthocentric, ids[i], "normals concur", "", 100,
               per_instance(F::Orthocentric, normals_at(ids[i], std::nullopt))));
  }
  add(make("T9.3a", "cevians to the circumcenters of an orthocentric tetrahedron form a hyperbolic group",
           F::Orthocentric, "X3", "hyperbolic", "", 100, per_instance(F::Orthocentric, hyperbolic_check("X3", false))));
  add(make("T9.3b", "crucial points and their conjugates form hyperbolic groups", F::Orthocentric,
           "X69 +isotomic +isogonal", "hyperbolic", "", 100, per_instance(F::Orthocentric, hyperbolic_check("X69", true))));
  add(make("T9.3c", "cevians to the X25 points form a hyperbolic group", F::Orthocentric, "X25", "hyperbolic", "", 100,
           per_instance(F::Orthocentric, hyperbolic_check("X25", false))));
  add(make("T9.3d", "X48 points and their conjugates form hyperbolic groups", F::Orthocentric, "X48 +isotomic +isogonal",
           "hyperbolic", "", 100, per_instance(F::Orthocentric, hyperbolic_check("X48", true))));

  // Harmonic tetrahedra.
  add(make("TH1a", "Feuerbach points of a harmonic tetrahedron are coplanar", F::Harmonic, "X11", "coplanar", "", 100,
           per_instance(F::Harmonic, property_check("X11", P::Coplanar))));
  add(make("TH1b", "cevians to the X117 points and to their isotomic conjugates concur", F::Harmonic,
           "X117N, isotomic X117N", "concur", "", 100, per_instance(F::Harmonic, [](const EdgeLengths& e, const Catalog& cat) {
             const CatalogEntry& x117 = cat.at("X117N");
             return all_of({holds(check_concurrence(pts(e, x117)), "X117 concurrence"),
                            holds(check_concurrence(pts(e, isotomic_of(x117))), "isotomic X117 concurrence")});
           })));
  add(make("TH2a", "X43 points and their conjugates form hyperbolic groups", F::Harmonic, "X43 +isotomic +isogonal",
           "hyperbolic", "", 100, per_instance(F::Harmonic, hyperbolic_check("X43", true))));
  add(make("TH2b", "cevians to the X102 points form a hyperbolic group", F::Harmonic, "X102N", "hyperbolic", "", 100,
           per_instance(F::Harmonic, hyperbolic_check("X102N", false))));
  add(make("TH2c", "cevians to the X117 points form a hyperbolic group", F::Harmonic, "X117N", "hyperbolic", "", 100,
           per_instance(F::Harmonic, hyperbolic_check("X117N", false))));

  // Closure properties of concurrence and hyperbolic groups.
  add(make("T10.1", "isotomic conjugates of concurrent face centers concur", F::General, "X7, a^rF, X4", "concur", "",
           50, [](const CaseContext& cx) {
             return closure(cx, concurrent_pairs(cx), P::Concur, [](const CatalogEntry& e) {
               return std::vector<std::pair<std::string, CatalogEntry>>{{"isotomic conjugate", isotomic_of(e)}};
             });
           }));
  add(make("T10.2", "powers F^q of a concurrent center function concur", F::General, "X7, a^rF, X4", "concur",
           "q in {2,3,-1}", 50, [](const CaseContext& cx) {
             return closure(cx, concurrent_pairs(cx), P::Concur, [](const CatalogEntry& e) {
               std::vector<std::pair<std::string, CatalogEntry>> out;
               for (long q : {2, 3, -1}) out.push_back({"F^" + std::to_string(q), power_of(e, q)});
               return out;
             });
           }));
  add(make("T11.1", "a^r F^q of a hyperbolic center function is hyperbolic", F::General, "X10, X9, X5, X1^2",
           "hyperbolic", "(r,q) in {(1,1),(2,1),(0,2),(-2,1)}", 50, [](const CaseContext& cx) {
             return closure(cx, hyperbolic_pairs(cx), P::Hyperbolic, [](const CatalogEntry& e) {
               std::vector<std::pair<std::string, CatalogEntry>> out;
               for (auto [r, q] : {std::pair<long, long>{1, 1}, {2, 1}, {0, 2}, {-2, 1}})
                 out.push_back({"a^" + std::to_string(r) + " F^" + std::to_string(q), a_power_times(e, r, q)});
               return out;
             });
           }));
  add(make("T11.2", "isotomic and isogonal conjugates of a hyperbolic center are hyperbolic", F::General,
           "X10, X9, X5, X1^2", "hyperbolic", "", 50, [](const CaseContext& cx) {
             return closure(cx, hyperbolic_pairs(cx), P::Hyperbolic, [](const CatalogEntry& e) {
               return std::vector<std::pair<std::string, CatalogEntry>>{{"isotomic conjugate", isotomic_of(e)},
                                                                        {"isogonal conjugate", isogonal_of(e)}};
             });
           }));

  // Planarity.
  add(make("T12a", "Feuerbach determinant vanishes and Feuerbach points are coplanar", F::Circumscriptible,
           "X11", "coplanar", "det[a_i+b_i; a_i b_i; 1] = 0", 50, [](const CaseContext& cx) {
             std::vector<TheoremResult> parts;
             std::vector<std::string> labels;
             for (F f : {F::Circumscriptible, F::Isodynamic, F::Harmonic, F::ProductSum}) {
               parts.push_back(over_instances(cx, f, [](const EdgeLengths& e, const Catalog& cat) {
                 if (!feuerbach_planarity_condition(e)) return fail("determinant is nonzero");
                 return holds(check_coplanar(pts(cat, e, "X11")), "coplanarity");
               }));
               labels.push_back(to_string(f));
             }
             return merge(parts, labels);
           }));
  add(make("T12b", "no face center is coplanar on every isosceles tetrahedron", F::Isosceles, "whole catalog",
           "coplanar", "every center fails somewhere", 1000, [](const CaseContext& cx) {
             HuntResult h = hunt_counterexample("planarity-impossibility", cx.n, cx.seed, cx.cat);
             TheoremResult r;
             r.mode = "search";
             int survivors = 0;
             std::string names;
             for (const auto& f : h.findings) {
               r.instances = std::max(r.instances, f.tried);
               if (!f.found) {
                 ++survivors;
                 names += (names.empty() ? "" : ", ") + f.center;
               }
             }
             r.status = h.outcome == HuntOutcome::Supported ? CaseStatus::Pass : CaseStatus::Fail;
             r.evidence = std::to_string(h.findings.size()) + " centers searched, " + std::to_string(survivors) +
                          " never failed" + (names.empty() ? "" : ": " + names);
             return r;
           }));

  // Normals at two face points.
  add(make("T13", "normals at P1, P2 meet iff |P2A3|^2+|P1A4|^2 = |P2A4|^2+|P1A3|^2", F::General, "random points",
           "normal pair", "both directions", 200, tabov_pairs));
  return v;
}

}  // namespace

std::string to_string(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Excluded: return "excluded";
  }
  return "?";
}

const std::vector<TheoremCase>& theorem_registry() {
  static const std::vector<TheoremCase> registry = build_registry();
  return registry;
}

const TheoremCase& find_case(const std::string& id) {
  for (const auto& c : theorem_registry())
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownId, "unknown theorem case '" + id + "'");
}

TheoremResult verify_theorem(const TheoremCase& c, int n, std::uint64_t seed, const Catalog& cat) {
  auto t0 = std::chrono::steady_clock::now();
  TheoremResult r;
  if (!c.excluded.empty()) {
    r.status = CaseStatus::Excluded;
    r.mode = "none";
    r.evidence = c.excluded;
  } else {
    r = c.run(CaseContext{n > 0 ? n : c.default_n, seed, cat});
  }
  r.id = c.id;
  r.statement = c.statement;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace tc
