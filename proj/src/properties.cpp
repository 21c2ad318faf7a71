#include "tetracenters/properties.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace tc {

namespace {

const std::array<std::pair<int, int>, 6> kEdgePairs{{{1, 2}, {0, 2}, {0, 1}, {0, 3}, {1, 3}, {2, 3}}};

std::array<int, 2> remaining(int i, int j) {
  std::array<int, 2> out{};
  int n = 0;
  for (int k = 0; k < 4; ++k)
    if (k != i && k != j) out[n++] = k;
  return out;
}

std::array<int, 3> others(int k) {
  std::array<int, 3> o{};
  int n = 0;
  for (int j = 0; j < 4; ++j)
    if (j != k) o[n++] = j;
  return o;
}

Quad unit(int c) {
  Quad u{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
  u[c] = Scalar(1);
  return u;
}

std::string pair_label(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

void require_not_coplanar(const std::array<TetraPoint, 4>& p) {
  if (decide(is_zero(coplanar_residual(p[0], p[1], p[2], p[3])), "coplanarity of central tetrahedron"))
    throw Error(ErrorCode::CoplanarPoints, "central tetrahedron is flat");
}

// t with p = o + t(g - o), taking membership for granted.
Scalar param_unchecked(const TetraPoint& o, const TetraPoint& g, const TetraPoint& p) {
  Quad d = g.x - o.x, v = p.x - o.x;
  for (int i = 0; i < 4; ++i)
    if (is_zero(d[i]) == ZeroTest::NonZero) return v[i] / d[i];
  throw Error(ErrorCode::Undecided, "Euler direction not separated from zero");
}

EvalContext radical_context(const EvalContext& ctx) {
  return ctx.mode == EvalMode::Exact ? EvalContext::mixed(ctx.precision_bits) : ctx;
}

// Combine verdicts of an existential property: best holding verdict wins.
Verdict any_of(std::vector<Verdict> vs, const std::string& none) {
  Verdict best;
  best.kind = VerdictKind::Fails;
  best.witness = none;
  bool undecided = false;
  for (auto& v : vs) {
    if (v.kind == VerdictKind::HoldsExact) return v;
    if (v.kind == VerdictKind::HoldsNumeric && best.kind != VerdictKind::HoldsNumeric) best = v;
    if (v.kind == VerdictKind::Undecided) undecided = true;
  }
  if (best.kind == VerdictKind::Fails && undecided) best.kind = VerdictKind::Undecided;
  return best;
}

}  // namespace

std::string to_string(PropertyId p) {
  switch (p) {
    case PropertyId::Concur: return "Concur";
    case PropertyId::Hyperbolic: return "Hyperbolic";
    case PropertyId::Coplanar: return "Coplanar";
    case PropertyId::Collinear: return "Collinear";
    case PropertyId::NormalsConcur: return "NormalsConcur";
    case PropertyId::FacesParallel: return "FacesParallel";
    case PropertyId::CentralIsosceles: return "CentralIsosceles";
    case PropertyId::CentralRegular: return "CentralRegular";
    case PropertyId::CentralIsodynamic: return "CentralIsodynamic";
    case PropertyId::CentralCircumscriptible: return "CentralCircumscriptible";
    case PropertyId::CentralOrthocentric: return "CentralOrthocentric";
    case PropertyId::SimilarToReference: return "SimilarToReference";
    case PropertyId::EqualCevians: return "EqualCevians";
    case PropertyId::SharedSpaceCenter: return "SharedSpaceCenter";
    case PropertyId::CentralCenterOnRefEuler: return "CentralCenterOnRefEuler";
    case PropertyId::RefCenterOnCentralEuler: return "RefCenterOnCentralEuler";
  }
  return "?";
}

const std::vector<PropertyId>& all_properties() {
  static const std::vector<PropertyId> v = [] {
    std::vector<PropertyId> out;
    for (int i = 1; i <= 16; ++i) out.push_back(static_cast<PropertyId>(i));
    return out;
  }();
  return v;
}

PropertyId parse_property(const std::string& s) {
  auto lower = [](std::string x) {
    std::transform(x.begin(), x.end(), x.begin(), [](unsigned char c) { return std::tolower(c); });
    return x;
  };
  if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    int n = std::stoi(s);
    if (n >= 1 && n <= 16) return static_cast<PropertyId>(n);
  }
  for (auto p : all_properties())
    if (lower(to_string(p)) == lower(s)) return p;
  throw Error(ErrorCode::InvalidArgument, "unknown property '" + s + "'");
}

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::HoldsExact: return "holds-exact";
    case VerdictKind::HoldsNumeric: return "holds-numeric";
    case VerdictKind::Fails: return "fails";
    case VerdictKind::Undecided: return "undecided";
  }
  return "?";
}

Verdict verdict_from_residuals(const std::vector<Scalar>& residuals, const std::string& what) {
  Verdict v;
  bool numeric = false;
  double width = 0.0;
  for (std::size_t k = 0; k < residuals.size(); ++k) {
    const Scalar& r = residuals[k];
    ZeroTest z = is_zero(r);
    if (z == ZeroTest::NonZero) {
      v.kind = VerdictKind::Fails;
      v.witness = what + "[" + std::to_string(k) + "] = " + r.str();
      return v;
    }
    if (r.is_interval()) {
      numeric = true;
      width = std::max(width, r.width());
    }
  }
  v.kind = numeric ? VerdictKind::HoldsNumeric : VerdictKind::HoldsExact;
  v.width = width;
  return v;
}

TetraLine cevian(int i, const TetraPoint& p) {
  try {
    return line_through(TetraPoint::vertex(i), p);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IdenticalPoints || e.code() == ErrorCode::PointAtInfinity)
      throw Error(ErrorCode::DegenerateCevian, "cevian from A" + std::to_string(i + 1) + " is undefined");
    throw;
  }
}

Scalar pair_concurrence_residual(int i, const TetraPoint& pi, int j, const TetraPoint& pj) {
  auto [k, l] = remaining(i, j);
  return pi.x[k] * pj.x[l] - pi.x[l] * pj.x[k];
}

bool pair_concurrence_condition(const TetraPoint& p1, const TetraPoint& p2) {
  return decide(is_zero(pair_concurrence_residual(0, p1, 1, p2)), "pair concurrence");
}

namespace {

std::vector<Scalar> concurrence_residuals(const std::array<TetraPoint, 4>& p) {
  std::vector<Scalar> r;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) r.push_back(pair_concurrence_residual(i, p[i], j, p[j]));
  return r;
}

std::array<TetraLine, 4> cevians(const std::array<TetraPoint, 4>& p) {
  return {cevian(0, p[0]), cevian(1, p[1]), cevian(2, p[2]), cevian(3, p[3])};
}

}  // namespace

Verdict check_concurrence(const std::array<TetraPoint, 4>& p) {
  Verdict v = verdict_from_residuals(concurrence_residuals(p), "cevian pair");
  if (!v.holds()) return v;
  auto l = cevians(p);
  try {
    bool exact = v.kind == VerdictKind::HoldsExact;
    TetraPoint x = intersection_point(l[0], l[1], exact).normalized();
    if (exact)
      for (int k = 2; k < 4; ++k)
        if (!decide(all_zero(point_on_line_residuals(x, l[k])), "concurrence point"))
          v.notes.push_back("payload point misses cevian " + std::to_string(k + 1));
    v.point = x;
  } catch (const Error& e) {
    v.notes.push_back(std::string("no finite concurrence point: ") + e.what());
  }
  return v;
}

Scalar spear_residual(int k, const std::array<TetraPoint, 4>& p) {
  auto [i, j, l] = others(k);
  return p[i].x[l] * p[j].x[i] * p[l].x[j] - p[i].x[j] * p[j].x[l] * p[l].x[i];
}

bool spear_condition(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3) {
  std::array<TetraPoint, 4> p{p1, p2, p3, TetraPoint::vertex(3)};
  return decide(is_zero(spear_residual(3, p)), "spear condition");
}

TetraPoint spear_trace(const TetraPoint& p1, const TetraPoint&, const TetraPoint& p3) {
  const Scalar &y1 = p1.x[1], &z1 = p1.x[2], &x3 = p3.x[0], &y3 = p3.x[1];
  return TetraPoint{{x3 * y1, y1 * y3, y3 * z1, Scalar(0)}};
}

bool spear_constructive(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3) {
  TetraPoint a4 = TetraPoint::vertex(3);
  TetraPlane e = plane_point_line(a4, cevian(2, p3));
  TetraPoint q1 = line_plane_intersection(cevian(0, p1), e);
  TetraPoint q2 = line_plane_intersection(cevian(1, p2), e);
  return collinear3(a4, q1, q2);
}

TetraPoint hyperboloid_center(const std::array<TetraLine, 4>& l) {
  TetraPoint x = line_plane_intersection(l[2], plane_line_parallel_line(l[0], l[1].dir));
  TetraPoint y = line_plane_intersection(l[1], plane_line_parallel_line(l[0], l[2].dir));
  return divide_segment(x, y, Rational(1), Rational(1));
}

Verdict check_hyperbolic(const std::array<TetraPoint, 4>& p) {
  auto conc = concurrence_residuals(p);
  Verdict together = verdict_from_residuals(conc, "cevian pair");
  if (together.holds()) {
    together.degenerate = true;
    together.notes.push_back("cevians concur; every line through the common point is a transversal");
    return together;
  }
  std::vector<Scalar> spears;
  for (int k = 0; k < 4; ++k) spears.push_back(spear_residual(k, p));
  Verdict v = verdict_from_residuals(spears, "spear");
  int n = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++n)
      if (is_zero(conc[n]) != ZeroTest::NonZero) {
        v.degenerate = true;
        v.notes.push_back("cevians " + pair_label(i, j) + " are not skew");
      }
  if (v.holds() && !v.degenerate) {
    try {
      v.hyperboloid_center = hyperboloid_center(cevians(p)).normalized();
    } catch (const Error& e) {
      v.notes.push_back(std::string("hyperboloid center unavailable: ") + e.what());
    }
  }
  return v;
}

Verdict check_coplanar(const std::array<TetraPoint, 4>& p) {
  return verdict_from_residuals({coplanar_residual(p[0], p[1], p[2], p[3])}, "det");
}

Verdict check_collinear(const std::array<TetraPoint, 4>& p) {
  auto r = collinear_residuals(p[0], p[1], p[2]);
  auto s = collinear_residuals(p[0], p[1], p[3]);
  r.insert(r.end(), s.begin(), s.end());
  return verdict_from_residuals(r, "minor");
}

bool feuerbach_planarity_condition(const EdgeLengths& e) {
  Matrix m(3);
  for (int i = 0; i < 3; ++i) {
    m[0].push_back(Scalar(e.a[i] + e.b[i]));
    m[1].push_back(Scalar(e.a[i] * e.b[i]));
    m[2].push_back(Scalar(1));
  }
  return det(m).rational().is_zero();
}

Verdict check_lemoine_axes_coplanar(const EdgeLengths& e) {
  // Points (0, b^2, -c^2) and (a^2, 0, -c^2) of x/a^2 + y/b^2 + z/c^2 = 0 on each face.
  auto sides = face_sides(e);
  std::vector<TetraPoint> pts;
  for (int f = 0; f < 4; ++f) {
    Scalar a2(sides[f][0] * sides[f][0]), b2(sides[f][1] * sides[f][1]), c2(sides[f][2] * sides[f][2]);
    pts.push_back(embed_face_point(f, {Scalar(0), b2, -c2}));
    pts.push_back(embed_face_point(f, {a2, Scalar(0), -c2}));
  }
  std::vector<Scalar> r;
  const int n = static_cast<int>(pts.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) r.push_back(coplanar_residual(pts[i], pts[j], pts[k], pts[l]));
  return verdict_from_residuals(r, "det");
}

TetraLine face_normal_line(const EdgeMetric& m, int i, const TetraPoint& p) {
  auto [j, k, l] = others(i);
  Quad u1 = unit(k) - unit(j), u2 = unit(l) - unit(j);
  Matrix rows(3);
  for (int c = 0; c < 4; ++c) {
    rows[0].push_back(bilinear(unit(c), u1, m));
    rows[1].push_back(bilinear(unit(c), u2, m));
    rows[2].push_back(Scalar(1));
  }
  auto v = null_vector(rows);
  Quad d{v[0], v[1], v[2], v[3]};
  if (is_zero_tuple(d)) throw Error(ErrorCode::SingularSystem, "no normal direction");
  return TetraLine{p.normalized(), TetraDirection{d}};
}

Scalar tabov_residual(const EdgeMetric& m, int i, const TetraPoint& pi, int j, const TetraPoint& pj) {
  auto [k, l] = remaining(i, j);
  TetraPoint ak = TetraPoint::vertex(k), al = TetraPoint::vertex(l);
  return squared_distance(pj, ak, m) + squared_distance(pi, al, m) - squared_distance(pj, al, m) -
         squared_distance(pi, ak, m);
}

bool tabov_pair_condition(const EdgeMetric& m, const TetraPoint& p1, const TetraPoint& p2) {
  return decide(is_zero(tabov_residual(m, 0, p1, 1, p2)), "normal pair condition");
}

Verdict check_normals_concur(const EdgeMetric& m, const std::array<TetraPoint, 4>& p) {
  std::array<TetraLine, 4> n;
  for (int i = 0; i < 4; ++i) n[i] = face_normal_line(m, i, p[i]);
  std::vector<Scalar> r;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) r.push_back(intersect_residual(n[i], n[j]));
  Verdict v = verdict_from_residuals(r, "normal pair");
  if (!v.holds()) return v;
  try {
    bool exact = v.kind == VerdictKind::HoldsExact;
    TetraPoint x = intersection_point(n[0], n[1], exact).normalized();
    if (exact)
      for (int k = 2; k < 4; ++k)
        if (!decide(all_zero(point_on_line_residuals(x, n[k])), "normal intersection"))
          v.notes.push_back("payload point misses normal " + std::to_string(k + 1));
    v.point = x;
  } catch (const Error& e) {
    v.notes.push_back(std::string("no common point computed: ") + e.what());
  }
  return v;
}

std::array<Scalar, 6> central_squared_edges(const EdgeMetric& m, const std::array<TetraPoint, 4>& p) {
  std::array<Scalar, 6> out;
  for (int k = 0; k < 6; ++k) out[k] = squared_distance(p[kEdgePairs[k].first], p[kEdgePairs[k].second], m);
  return out;
}

Verdict check_central_class(PropertyId id, const EdgeMetric& m, const std::array<TetraPoint, 4>& p) {
  require_not_coplanar(p);
  auto d = central_squared_edges(m, p);
  const Scalar *a = &d[0], *b = &d[3];
  std::vector<Scalar> r;
  switch (id) {
    case PropertyId::CentralIsosceles:
      for (int i = 0; i < 3; ++i) r.push_back(a[i] - b[i]);
      return verdict_from_residuals(r, "a'^2-b'^2");
    case PropertyId::CentralRegular:
      for (int k = 1; k < 6; ++k) r.push_back(d[k] - d[0]);
      return verdict_from_residuals(r, "edge^2 difference");
    case PropertyId::CentralIsodynamic:
      for (int i = 1; i < 3; ++i) r.push_back(a[i] * b[i] - a[0] * b[0]);
      return verdict_from_residuals(r, "a'^2b'^2 difference");
    case PropertyId::CentralOrthocentric:
      for (int i = 1; i < 3; ++i) r.push_back(a[i] + b[i] - a[0] - b[0]);
      return verdict_from_residuals(r, "a'^2+b'^2 difference");
    case PropertyId::CentralCircumscriptible: {
      bool rational = std::all_of(d.begin(), d.end(), [](const Scalar& s) { return s.is_rational(); });
      if (rational) {
        for (int i = 1; i < 3; ++i) {
          auto c = compare_radical_sums(a[i].rational(), b[i].rational(), a[0].rational(), b[0].rational());
          if (c != std::strong_ordering::equal) {
            Verdict v;
            v.kind = VerdictKind::Fails;
            Interval diff = Interval(a[i].rational(), 128).sqrt() + Interval(b[i].rational(), 128).sqrt() -
                            Interval(a[0].rational(), 128).sqrt() - Interval(b[0].rational(), 128).sqrt();
            v.witness = "a'" + std::to_string(i + 1) + "+b'" + std::to_string(i + 1) + " - (a'1+b'1) = " +
                        diff.str();
            return v;
          }
        }
        return Verdict{VerdictKind::HoldsExact};
      }
      std::array<Scalar, 6> len;
      for (int k = 0; k < 6; ++k) len[k] = sqrt(d[k], std::max(d[k].precision(), kRadicalBits));
      for (int i = 1; i < 3; ++i) r.push_back(len[i] + len[3 + i] - len[0] - len[3]);
      return verdict_from_residuals(r, "a'+b' difference");
    }
    case PropertyId::SimilarToReference: {
      Scalar lambda = d[0] / Scalar(m.d2(1, 2));
      for (int k = 1; k < 6; ++k)
        r.push_back(d[k] - lambda * Scalar(m.d2(kEdgePairs[k].first, kEdgePairs[k].second)));
      Verdict v = verdict_from_residuals(r, "edge^2 - ratio*ref^2");
      if (v.holds()) v.ratio = lambda;
      return v;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "not a central-class property: " + to_string(id));
  }
}

std::set<PropertyId> classify_central(const EdgeMetric& m, const std::array<TetraPoint, 4>& p) {
  std::set<PropertyId> out;
  for (auto id : {PropertyId::CentralIsosceles, PropertyId::CentralRegular, PropertyId::CentralIsodynamic,
                  PropertyId::CentralCircumscriptible, PropertyId::CentralOrthocentric,
                  PropertyId::SimilarToReference})
    if (check_central_class(id, m, p).holds()) out.insert(id);
  return out;
}

Verdict check_faces_parallel(const std::array<TetraPoint, 4>& p) {
  require_not_coplanar(p);
  std::vector<Scalar> r;
  for (int i = 0; i < 4; ++i) {
    auto [j, k, l] = others(i);
    TetraPlane central = plane_through_3(p[j], p[k], p[l]);
    auto s = planes_parallel_residuals(central, TetraPlane{unit(i)});
    r.insert(r.end(), s.begin(), s.end());
  }
  return verdict_from_residuals(r, "plane cross");
}

Verdict check_equal_cevians(const EdgeMetric& m, const std::array<TetraPoint, 4>& p) {
  std::array<Scalar, 4> len;
  for (int i = 0; i < 4; ++i) len[i] = squared_distance(TetraPoint::vertex(i), p[i], m);
  std::vector<Scalar> r;
  for (int i = 1; i < 4; ++i) r.push_back(len[i] - len[0]);
  return verdict_from_residuals(r, "cevian^2 difference");
}

SpaceCenterRelations check_space_center_relations(const EdgeLengths& e, const std::array<TetraPoint, 4>& p,
                                                  const EvalContext& ctx) {
  EdgeMetric m = e.metric();
  EvalContext rc = radical_context(ctx);
  const auto& kinds = all_space_centers();
  std::map<SpaceCenterKind, TetraPoint> ref, cen;
  for (auto k : kinds) {
    ref[k] = space_center(e, k, rc);
    cen[k] = space_center_of_points(p, m, k, rc);
  }
  SpaceCenterRelations out;

  std::vector<Verdict> shared;
  for (auto c : kinds)
    for (auto r : kinds) {
      Quad diff = cen[c].x - ref[r].x;
      Verdict v = verdict_from_residuals({diff.begin(), diff.end()}, "difference");
      if (v.holds()) v.shared.push_back({c, r});
      shared.push_back(v);
    }
  Verdict sv = any_of(shared, "no central space center coincides with a reference space center");
  if (sv.holds()) {
    sv.shared.clear();
    for (const auto& v : shared)
      if (v.holds()) sv.shared.insert(sv.shared.end(), v.shared.begin(), v.shared.end());
  }
  out.shared = sv;

  auto on_line = [&](const TetraPoint& o, const TetraPoint& g, const std::map<SpaceCenterKind, TetraPoint>& pts,
                     const std::string& what) {
    Quad d = g.x - o.x;
    Verdict line = verdict_from_residuals({d.begin(), d.end()}, "G-O");
    if (line.holds()) {
      Verdict v;
      v.kind = VerdictKind::Undecided;
      v.degenerate = true;
      v.notes.push_back(what + " Euler line undefined (G = O); property vacuous");
      return v;
    }
    std::vector<Verdict> vs;
    for (auto k : kinds) {
      Verdict v = verdict_from_residuals(cross_residuals(pts.at(k).x - o.x, d), "cross");
      if (v.holds()) v.euler.push_back({k, param_unchecked(o, g, pts.at(k))});
      vs.push_back(v);
    }
    Verdict best = any_of(vs, "no center lies on the " + what + " Euler line");
    if (best.holds()) {
      best.euler.clear();
      for (const auto& v : vs)
        if (v.holds()) best.euler.insert(best.euler.end(), v.euler.begin(), v.euler.end());
    }
    return best;
  };
  out.central_on_reference_euler =
      on_line(ref[SpaceCenterKind::Circumcenter], ref[SpaceCenterKind::Centroid], cen, "reference");
  out.reference_on_central_euler =
      on_line(cen[SpaceCenterKind::Circumcenter], cen[SpaceCenterKind::Centroid], ref, "central");
  return out;
}

Verdict check_property(PropertyId id, const EdgeLengths& e, const std::array<TetraPoint, 4>& p,
                       const EvalContext& ctx) {
  // A center whose coordinates sum to zero is a point at infinity, not a face point.
  for (int i = 0; i < 4; ++i)
    if (is_zero(p[i].sum()) == ZeroTest::Zero)
      throw Error(ErrorCode::PointAtInfinity, "face point " + std::to_string(i + 1) + " is at infinity");
  switch (id) {
    case PropertyId::Concur: return check_concurrence(p);
    case PropertyId::Hyperbolic: return check_hyperbolic(p);
    case PropertyId::Coplanar: return check_coplanar(p);
    case PropertyId::Collinear: return check_collinear(p);
    case PropertyId::NormalsConcur: return check_normals_concur(e.metric(), p);
    case PropertyId::FacesParallel: return check_faces_parallel(p);
    case PropertyId::EqualCevians: return check_equal_cevians(e.metric(), p);
    case PropertyId::SharedSpaceCenter: return check_space_center_relations(e, p, ctx).shared;
    case PropertyId::CentralCenterOnRefEuler: return check_space_center_relations(e, p, ctx).central_on_reference_euler;
    case PropertyId::RefCenterOnCentralEuler: return check_space_center_relations(e, p, ctx).reference_on_central_euler;
    default: return check_central_class(id, e.metric(), p);
  }
}

Verdict check_property(PropertyId id, const EdgeLengths& e, const CenterRef& c, const EvalContext& ctx) {
  return check_property(id, e, face_points(e, c, ctx), ctx);
}

}  // namespace tc
