#include "doctest.h"

#include "tetracenters/properties.hpp"
#include "test_support.hpp"

using namespace tc;

namespace {

using Points = std::array<TetraPoint, 4>;

TetraPoint point(long x, long y, long z, long w) { return TetraPoint{{Scalar(x), Scalar(y), Scalar(z), Scalar(w)}}; }

bool same(const TetraPoint& p, const TetraPoint& q) { return projectively_equal(p.x, q.x); }

const Catalog& cat() {
  static const Catalog c = builtin_catalog();
  return c;
}

Points pts(const EdgeLengths& e, const std::string& center_id) {
  return face_points(e, resolve_center(cat(), center_id), EvalContext::exact());
}

Points pts(const EdgeLengths& e, const CatalogEntry& entry) {
  return face_points(e, entry, std::nullopt, EvalContext::exact());
}

Points vertices() { return {TetraPoint::vertex(0), TetraPoint::vertex(1), TetraPoint::vertex(2), TetraPoint::vertex(3)}; }

// Random point strictly inside face i.
TetraPoint face_point(std::mt19937_64& rng, int i) {
  TetraPoint p;
  for (int k = 0; k < 4; ++k) p.x[k] = k == i ? Scalar(0) : Scalar(testing::random_positive(rng, 30, 7));
  return p;
}

EdgeLengths ints(long a1, long a2, long a3, long b1, long b2, long b3) {
  return EdgeLengths::of(Rational(a1), Rational(a2), Rational(a3), Rational(b1), Rational(b2), Rational(b3));
}

}  // namespace

TEST_CASE("property ids") {
  CHECK(all_properties().size() == 16);
  CHECK(parse_property("1") == PropertyId::Concur);
  CHECK(parse_property("hyperbolic") == PropertyId::Hyperbolic);
  CHECK(parse_property("16") == PropertyId::RefCenterOnCentralEuler);
  CHECK_THROWS_AS(parse_property("17"), Error);
  for (auto p : all_properties()) CHECK(parse_property(to_string(p)) == p);
}

TEST_CASE("pair concurrence condition") {
  CHECK(pair_concurrence_condition(point(0, 1, 1, 1), point(1, 0, 1, 1)));
  CHECK(pair_concurrence_condition(point(0, 1, 2, 3), point(1, 0, 2, 3)));
  CHECK_FALSE(pair_concurrence_condition(point(0, 1, 2, 3), point(1, 0, 3, 2)));
  CHECK(pair_concurrence_residual(0, point(0, 1, 2, 3), 1, point(1, 0, 3, 2)).rational() == Rational(-5));
  // Agrees with the line-intersection determinant.
  std::mt19937_64 rng(201);
  for (int n = 0; n < 200; ++n) {
    int i = n % 4, j = (i + 1 + n / 4 % 3) % 4;
    TetraPoint p = face_point(rng, i), q = face_point(rng, j);
    if (n % 3 == 0) {
      // Force the condition by copying the ratio on the remaining indices.
      int k = -1, l = -1;
      for (int c = 0; c < 4; ++c)
        if (c != i && c != j) (k < 0 ? k : l) = c;
      q.x[l] = q.x[k] * p.x[l] / p.x[k];
    }
    bool cond = is_zero(pair_concurrence_residual(i, p, j, q)) == ZeroTest::Zero;
    CHECK(cond == lines_intersect(cevian(i, p), cevian(j, q)));
  }
}

TEST_CASE("concurrence") {
  for (const auto& e : generate(TetraFamily::General, 202, 10)) {
    Verdict g = check_concurrence(pts(e, "X2"));
    CHECK(g.kind == VerdictKind::HoldsExact);
    REQUIRE(g.point);
    CHECK(same(*g.point, point(1, 1, 1, 1)));
    Verdict bad = check_concurrence(pts(e, "X7"));
    CHECK(bad.kind == VerdictKind::Fails);
    CHECK(!bad.witness.empty());
  }
  for (const auto& e : generate(TetraFamily::Circumscriptible, 203, 10)) {
    Verdict v = check_concurrence(pts(e, "X7"));
    CHECK(v.kind == VerdictKind::HoldsExact);
    REQUIRE(v.point);
    TetraPoint expected;
    auto sides = face_sides(e);
    for (int k = 0; k < 4; ++k) {
      const auto& s = sides[k];
      expected.x[k] = Scalar((s[1] + s[2] - s[0]) * (s[2] + s[0] - s[1]) * (s[0] + s[1] - s[2]));
    }
    CHECK(same(*v.point, expected));
    CHECK(check_concurrence(pts(e, "X8")).holds());
  }
}

TEST_CASE("spear condition and trace") {
  TetraPoint c1 = point(0, 1, 1, 1), c2 = point(1, 0, 1, 1), c3 = point(1, 1, 0, 1);
  CHECK(spear_condition(c1, c2, c3));
  CHECK(same(spear_trace(c1, c2, c3), point(1, 1, 1, 0)));

  std::mt19937_64 rng(204);
  int agreed_true = 0;
  for (int n = 0; n < 500; ++n) {
    TetraPoint p1 = face_point(rng, 0), p2 = face_point(rng, 1), p3 = face_point(rng, 2);
    if (n % 2 == 0) {
      // z1 x2 y3 = y1 z2 x3: solve for x3.
      p3.x[0] = p1.x[2] * p2.x[0] * p3.x[1] / (p1.x[1] * p2.x[2]);
    }
    bool cond = spear_condition(p1, p2, p3);
    bool built;
    try {
      built = spear_constructive(p1, p2, p3);
    } catch (const Error& e) {
      // A cevian parallel to the auxiliary plane; the construction is undefined there.
      CHECK(e.code() == ErrorCode::LineParallelToPlane);
      continue;
    }
    CHECK(cond == built);
    if (cond) {
      ++agreed_true;
      TetraLine spear = line_through(TetraPoint::vertex(3), spear_trace(p1, p2, p3));
      CHECK(lines_intersect(spear, cevian(0, p1)));
      CHECK(lines_intersect(spear, cevian(1, p2)));
      CHECK(lines_intersect(spear, cevian(2, p3)));
    }
  }
  CHECK(agreed_true > 200);
}

TEST_CASE("every catalog center is hyperbolic on isosceles tetrahedra") {
  for (const auto& e : generate(TetraFamily::Isosceles, 205, 3)) {
    for (const auto& entry : cat().entries()) {
      std::optional<Rational> r;
      if (entry.takes_r) r = Rational(2);
      Points p;
      try {
        p = face_points(e, entry, r, EvalContext::mixed());
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::EvaluationSingular);
        continue;
      }
      Verdict v = check_hyperbolic(p);
      INFO(entry.id);
      CHECK(v.holds());
      CHECK(spear_residual(3, p).to_interval(128).contains_zero());
    }
  }
}

TEST_CASE("hyperbolic groups") {
  for (const auto& e : generate(TetraFamily::General, 206, 6)) {
    for (long r : {-2, 1, 2, 3}) {
      Verdict v = check_hyperbolic(pts(e, "POW@" + std::to_string(r)));
      CHECK(v.kind == VerdictKind::HoldsExact);
      CHECK_FALSE(v.degenerate);
      CHECK(v.hyperboloid_center.has_value());
    }
    Verdict cen = check_hyperbolic(pts(e, "POW@-1"));  // the centroid: cevians concur
    CHECK(cen.holds());
    CHECK(cen.degenerate);
    CHECK(check_hyperbolic(pts(e, "X10")).kind == VerdictKind::Fails);
  }
  for (const auto& e : generate(TetraFamily::Isodynamic, 207, 6)) {
    CHECK(check_hyperbolic(pts(e, "X10")).kind == VerdictKind::HoldsExact);
    CHECK(check_hyperbolic(pts(e, isotomic_of(cat().at("X10")))).kind == VerdictKind::HoldsExact);
  }
}

TEST_CASE("hyperboloid center on an isosceles tetrahedron is the centroid") {
  for (const auto& e : generate(TetraFamily::Isosceles, 208, 5))
    for (const char* id : {"X1", "X3", "X4", "X7", "X8", "POW@2"}) {
      Verdict v = check_hyperbolic(pts(e, id));
      REQUIRE(v.holds());
      REQUIRE(v.hyperboloid_center);
      CHECK(same(*v.hyperboloid_center, point(1, 1, 1, 1)));
    }
}

TEST_CASE("hyperboloid center of three rulings of x^2+y^2-z^2=1") {
  using Vec3 = std::array<Rational, 3>;
  const std::array<Vec3, 4> frame{{{Rational(1), Rational(2), Rational(3)},
                                   {Rational(-2), Rational(1), Rational(0)},
                                   {Rational(0), Rational(-3), Rational(1)},
                                   {Rational(2), Rational(0), Rational(-2)}}};
  auto bary = [&](const Vec3& q) {
    Matrix m(4, std::vector<Scalar>(4));
    std::vector<Scalar> rhs{Scalar(q[0]), Scalar(q[1]), Scalar(q[2]), Scalar(1)};
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 4; ++i) m[k][i] = Scalar(frame[i][k]);
    for (int i = 0; i < 4; ++i) m[3][i] = Scalar(1);
    auto x = solve(m, rhs);
    return TetraPoint{{x[0], x[1], x[2], x[3]}};
  };
  // Ruling through (c, s, 0) with direction (-s, c, 1), for rational points on the unit circle.
  auto ruling = [&](const Rational& c, const Rational& s) {
    return line_through(bary({c, s, Rational(0)}), bary({c - s, s + c, Rational(1)}));
  };
  std::vector<std::pair<Rational, Rational>> circle{{Rational(1), Rational(0)},
                                                    {Rational(0), Rational(1)},
                                                    {Rational(3, 5), Rational(-4, 5)},
                                                    {Rational(-5, 13), Rational(12, 13)}};
  std::array<TetraLine, 4> lines;
  for (int i = 0; i < 4; ++i) lines[i] = ruling(circle[i].first, circle[i].second);
  TetraPoint origin = bary({Rational(0), Rational(0), Rational(0)});
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    std::array<TetraLine, 4> l{lines[perm[0]], lines[perm[1]], lines[perm[2]], lines[perm[3]]};
    CHECK(same(hyperboloid_center(l), origin));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("hyperboloid center is independent of the chosen triple") {
  for (const auto& e : generate(TetraFamily::General, 209, 5)) {
    Points p = pts(e, "POW@2");
    std::array<TetraLine, 4> l{cevian(0, p[0]), cevian(1, p[1]), cevian(2, p[2]), cevian(3, p[3])};
    TetraPoint ref = hyperboloid_center(l);
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
      std::array<TetraLine, 4> q{l[perm[0]], l[perm[1]], l[perm[2]], l[perm[3]]};
      CHECK(same(hyperboloid_center(q), ref));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("coplanarity and collinearity of face centers") {
  for (const auto& e : generate(TetraFamily::Circumscriptible, 210, 5)) CHECK(check_coplanar(pts(e, "X11")).holds());
  for (const auto& e : generate(TetraFamily::Isodynamic, 211, 5)) CHECK(check_coplanar(pts(e, "X11")).holds());
  for (const auto& e : generate(TetraFamily::General, 212, 5)) {
    CHECK(check_coplanar(pts(e, "X2")).kind == VerdictKind::Fails);
    CHECK(check_coplanar(pts(e, "X11")).kind == VerdictKind::Fails);
    CHECK(check_collinear(pts(e, "X2")).kind == VerdictKind::Fails);
  }
}

TEST_CASE("Feuerbach planarity determinant") {
  for (auto f : {TetraFamily::Circumscriptible, TetraFamily::Isodynamic, TetraFamily::ProductSum})
    for (const auto& e : generate(f, 213, 10)) CHECK(feuerbach_planarity_condition(e));
  int fails = 0;
  for (const auto& e : generate(TetraFamily::General, 213, 20)) fails += !feuerbach_planarity_condition(e);
  CHECK(fails == 20);
  // The determinant agrees with the direct coplanarity test of the Feuerbach points.
  for (const auto& e : generate(TetraFamily::ProductSum, 214, 5)) CHECK(check_coplanar(pts(e, "X11")).holds());
}

TEST_CASE("Lemoine axes") {
  for (const auto& e : generate(TetraFamily::Isodynamic, 215, 5)) CHECK(check_lemoine_axes_coplanar(e).holds());
  for (const auto& e : generate(TetraFamily::General, 215, 5))
    CHECK(check_lemoine_axes_coplanar(e).kind == VerdictKind::Fails);
}

TEST_CASE("face normals") {
  for (const auto& e : generate(TetraFamily::General, 216, 10)) {
    EdgeMetric m = e.metric();
    Points p = pts(e, "X3");
    TetraPoint o = space_center(e, SpaceCenterKind::Circumcenter);
    for (int i = 0; i < 4; ++i) {
      TetraLine n = face_normal_line(m, i, p[i]);
      CHECK(decide(all_zero(point_on_line_residuals(o, n)), "normal through O"));
      for (int j = 0; j < 4; ++j)
        for (int k = j + 1; k < 4; ++k)
          if (j != i && k != i) {
            Quad edge = TetraPoint::vertex(k).x - TetraPoint::vertex(j).x;
            CHECK(is_zero(perpendicular_form(n.dir, TetraDirection{edge}, m)) == ZeroTest::Zero);
          }
    }
    Verdict v = check_normals_concur(m, p);
    CHECK(v.kind == VerdictKind::HoldsExact);
    REQUIRE(v.point);
    CHECK(same(*v.point, o));
    CHECK(check_normals_concur(m, pts(e, "X2")).kind == VerdictKind::Fails);
  }
  EdgeLengths reg = ints(1, 1, 1, 1, 1, 1);
  TetraLine n = face_normal_line(reg.metric(), 3, point(1, 1, 1, 0));
  CHECK(decide(all_zero(point_on_line_residuals(point(1, 1, 1, 1), n)), "regular normal"));
  for (const auto& e : generate(TetraFamily::Orthocentric, 217, 10))
    CHECK(check_normals_concur(e.metric(), pts(e, "X2")).holds());
}

TEST_CASE("normal pair condition") {
  for (const auto& e : generate(TetraFamily::Circumscriptible, 218, 10)) {
    EdgeMetric m = e.metric();
    Points p = pts(e, "X1");
    CHECK(tabov_pair_condition(m, p[0], p[1]));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) CHECK(is_zero(tabov_residual(m, i, p[i], j, p[j])) == ZeroTest::Zero);
    CHECK(check_normals_concur(m, p).holds());
  }
  std::mt19937_64 rng(219);
  auto instances = generate(TetraFamily::General, 219, 20);
  int conforming = 0, other = 0;
  for (int n = 0; n < 200; ++n) {
    const EdgeLengths& e = instances[n % instances.size()];
    EdgeMetric m = e.metric();
    int i = n % 4, j = (i + 1 + (n / 4) % 3) % 4;
    TetraPoint pi = face_point(rng, i), pj = face_point(rng, j);
    if (n % 2 == 0) {
      // The residual is affine along a segment of normalized points; move pj onto its zero.
      TetraPoint qj = face_point(rng, j);
      Scalar r0 = tabov_residual(m, i, pi, j, pj), r1 = tabov_residual(m, i, pi, j, qj);
      if (is_zero(r1 - r0) != ZeroTest::NonZero) continue;
      Scalar t = r0 / (r0 - r1);
      TetraPoint a = pj.normalized(), b = qj.normalized();
      pj = TetraPoint{(Scalar(1) - t) * a.x + t * b.x};
    }
    bool cond = is_zero(tabov_residual(m, i, pi, j, pj)) == ZeroTest::Zero;
    (cond ? conforming : other)++;
    CHECK(cond == lines_intersect(face_normal_line(m, i, pi), face_normal_line(m, j, pj)));
  }
  CHECK(conforming > 80);
  CHECK(other > 80);
}

TEST_CASE("central tetrahedron classification") {
  for (const auto& e : generate(TetraFamily::Isosceles, 220, 4))
    for (const char* id : {"X1", "X3", "X4", "X6"}) {
      auto s = classify_central(e.metric(), pts(e, id));
      CHECK(s.count(PropertyId::CentralIsosceles));
    }
  for (const auto& e : generate(TetraFamily::General, 221, 10)) {
    EdgeMetric m = e.metric();
    Verdict sim = check_central_class(PropertyId::SimilarToReference, m, pts(e, "X2"));
    CHECK(sim.kind == VerdictKind::HoldsExact);
    REQUIRE(sim.ratio);
    CHECK(sim.ratio->rational() == Rational(1, 9));
    Verdict self = check_central_class(PropertyId::SimilarToReference, m, vertices());
    REQUIRE(self.ratio);
    CHECK(self.ratio->rational() == Rational(1));
    CHECK(check_central_class(PropertyId::CentralIsosceles, m, pts(e, "X2")).kind == VerdictKind::Fails);
    CHECK(check_central_class(PropertyId::CentralCircumscriptible, m, pts(e, "X2")).kind == VerdictKind::Fails);
  }
  // Central classes inherit from the reference under similarity.
  for (const auto& e : generate(TetraFamily::Orthocentric, 222, 4)) {
    auto s = classify_central(e.metric(), pts(e, "X2"));
    CHECK(s.count(PropertyId::CentralOrthocentric));
  }
  for (const auto& e : generate(TetraFamily::Isodynamic, 222, 4))
    CHECK(classify_central(e.metric(), pts(e, "X2")).count(PropertyId::CentralIsodynamic));
  for (const auto& e : generate(TetraFamily::Circumscriptible, 222, 4))
    CHECK(classify_central(e.metric(), pts(e, "X2")).count(PropertyId::CentralCircumscriptible));
  CHECK(classify_central(ints(1, 1, 1, 1, 1, 1).metric(), vertices()).count(PropertyId::CentralRegular));
  Points flat{point(0, 1, 1, 0), point(1, 0, 1, 0), point(1, 1, 0, 0), point(1, 1, 1, 0)};
  CHECK_THROWS_AS(classify_central(ints(1, 1, 1, 1, 1, 1).metric(), flat), Error);
}

TEST_CASE("faces parallel and equal cevians") {
  for (const auto& e : generate(TetraFamily::General, 223, 6)) {
    EdgeMetric m = e.metric();
    CHECK(check_faces_parallel(pts(e, "X2")).kind == VerdictKind::HoldsExact);
    CHECK(check_faces_parallel(vertices()).kind == VerdictKind::HoldsExact);
    CHECK(check_faces_parallel(pts(e, "X1")).kind == VerdictKind::Fails);
    CHECK(check_equal_cevians(m, pts(e, "X2")).kind == VerdictKind::Fails);
  }
  for (const auto& e : generate(TetraFamily::Isosceles, 224, 4))
    for (const char* id : {"X1", "X2", "X3", "X7"}) CHECK(check_equal_cevians(e.metric(), pts(e, id)).holds());
  EdgeLengths reg = ints(1, 1, 1, 1, 1, 1);
  CHECK(check_equal_cevians(reg.metric(), pts(reg, "X1")).holds());
}

TEST_CASE("space center relations") {
  auto has = [](const Verdict& v, SpaceCenterKind c, SpaceCenterKind r) {
    return std::any_of(v.shared.begin(), v.shared.end(),
                       [&](const SharedCenter& s) { return s.central == c && s.reference == r; });
  };
  for (const auto& e : generate(TetraFamily::General, 225, 4)) {
    auto rel = check_space_center_relations(e, pts(e, "X2"), EvalContext::exact());
    CHECK(rel.shared.holds());
    CHECK(has(rel.shared, SpaceCenterKind::Centroid, SpaceCenterKind::Centroid));
    CHECK(has(rel.shared, SpaceCenterKind::Circumcenter, SpaceCenterKind::EulerPoint));
    REQUIRE(rel.central_on_reference_euler.holds());
    bool monge_at_two_thirds = false;
    for (const auto& m : rel.central_on_reference_euler.euler)
      if (m.kind == SpaceCenterKind::MongePoint) monge_at_two_thirds = m.t.rational() == Rational(2, 3);
    CHECK(monge_at_two_thirds);
    REQUIRE(rel.reference_on_central_euler.holds());
    for (const auto& m : rel.reference_on_central_euler.euler) {
      if (m.kind == SpaceCenterKind::Circumcenter) CHECK(m.t.rational() == Rational(4));
      if (m.kind == SpaceCenterKind::MongePoint) CHECK(m.t.rational() == Rational(-2));
    }
    for (long r : {1, 2, 3}) {
      auto z = check_space_center_relations(e, pts(e, "Z8A@" + std::to_string(r)), EvalContext::exact());
      CHECK(has(z.shared, SpaceCenterKind::Centroid, SpaceCenterKind::Centroid));
    }
  }
  for (const auto& e : generate(TetraFamily::Orthocentric, 226, 4)) {
    auto rel = check_space_center_relations(e, pts(e, "X4"), EvalContext::exact());
    CHECK(has(rel.shared, SpaceCenterKind::Centroid, SpaceCenterKind::MongePoint));
  }
  EdgeLengths iso = generate(TetraFamily::Isosceles, 227, 1)[0];
  auto rel = check_space_center_relations(iso, pts(iso, "X1"), EvalContext::exact());
  CHECK(rel.central_on_reference_euler.degenerate);
}

TEST_CASE("isotomic and power closure of concurrence") {
  std::vector<std::pair<EdgeLengths, CatalogEntry>> cases;
  for (const auto& e : generate(TetraFamily::Circumscriptible, 228, 15)) cases.push_back({e, cat().at("X7")});
  for (const auto& e : generate(TetraFamily::Isodynamic, 229, 20))
    cases.push_back({e, a_power_times(cat().at("X2"), (long)(cases.size() % 5) - 2, 1)});
  for (const auto& e : generate(TetraFamily::General, 230, 15)) cases.push_back({e, cat().at("X2")});
  REQUIRE(cases.size() == 50);
  for (const auto& [e, entry] : cases) {
    INFO(entry.id << " " << e.str());
    REQUIRE(check_concurrence(pts(e, entry)).holds());
    CHECK(check_concurrence(pts(e, isotomic_of(entry))).holds());
    for (long q : {2, 3, -1}) CHECK(check_concurrence(pts(e, power_of(entry, q))).holds());
  }
}

TEST_CASE("hyperbolic closure") {
  std::vector<std::pair<EdgeLengths, CatalogEntry>> cases;
  for (const auto& e : generate(TetraFamily::Isodynamic, 231, 4)) cases.push_back({e, cat().at("X10")});
  for (const auto& e : generate(TetraFamily::Isosceles, 232, 4)) cases.push_back({e, cat().at("X5")});
  for (const auto& e : generate(TetraFamily::General, 233, 4)) cases.push_back({e, power_of(cat().at("X1"), 2)});
  for (const auto& [e, entry] : cases) {
    INFO(entry.id << " " << e.str());
    REQUIRE(check_hyperbolic(pts(e, entry)).holds());
    for (auto [r, q] : {std::pair<long, long>{1, 1}, {2, 1}, {0, 2}, {-2, 1}})
      CHECK(check_hyperbolic(pts(e, a_power_times(entry, r, q))).holds());
    CHECK(check_hyperbolic(pts(e, isotomic_of(entry))).holds());
    CHECK(check_hyperbolic(pts(e, isogonal_of(entry))).holds());
  }
}

TEST_CASE("b+c-a concurrence detects circumscriptible tetrahedra") {
  std::mt19937_64 rng(234);
  int perturbed = 0;
  for (const auto& e : generate(TetraFamily::Circumscriptible, 234, 20)) {
    CHECK(check_concurrence(pts(e, "X8")).holds());
    EdgeLengths f = e;
    int i = static_cast<int>(rng() % 3);
    f.b[i] += Rational(1, static_cast<long>(rng() % 50) + 2);
    if (!validate(f)) continue;
    ++perturbed;
    bool conc = check_concurrence(pts(f, "X8")).holds();
    CHECK_FALSE(family_predicate(f, TetraFamily::Circumscriptible));
    CHECK(conc == family_predicate(f, TetraFamily::Circumscriptible));
  }
  CHECK(perturbed > 10);
}

TEST_CASE("verdicts from residuals") {
  CHECK(verdict_from_residuals({Scalar(0), Scalar(0)}, "r").kind == VerdictKind::HoldsExact);
  Verdict f = verdict_from_residuals({Scalar(0), Scalar(Rational(3, 2))}, "r");
  CHECK(f.kind == VerdictKind::Fails);
  CHECK(f.witness == "r[1] = 3/2");
  Interval tiny = Interval::hull(Rational(-1, 1000000), Rational(1, 1000000), 64);
  Verdict n = verdict_from_residuals({Scalar(tiny)}, "r");
  CHECK(n.kind == VerdictKind::HoldsNumeric);
  CHECK(n.width > 0);
}
