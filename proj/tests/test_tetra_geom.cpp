#include "doctest.h"

#include <cmath>

#include "tetracenters/tetra_geom.hpp"
#include "test_support.hpp"

using namespace tc;

namespace {

using Vec3 = std::array<Rational, 3>;

Vec3 sub(const Vec3& p, const Vec3& q) { return {p[0] - q[0], p[1] - q[1], p[2] - q[2]}; }
Rational dot3(const Vec3& p, const Vec3& q) { return p[0] * q[0] + p[1] * q[1] + p[2] * q[2]; }
Vec3 cross3(const Vec3& p, const Vec3& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

// A tetrahedron with rational Cartesian vertices: every squared edge is rational,
// so barycentric points map to exact Cartesian points.
struct Frame {
  std::array<Vec3, 4> v;

  EdgeMetric metric() const {
    auto d = [&](int i, int j) { return dot3(sub(v[i], v[j]), sub(v[i], v[j])); };
    return EdgeMetric({d(1, 2), d(0, 2), d(0, 1), d(0, 3), d(1, 3), d(2, 3)});
  }
  Vec3 embed(const Quad& x) const {
    Vec3 out{Rational(0), Rational(0), Rational(0)};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 3; ++k) out[k] += x[i].rational() * v[i][k];
    return out;
  }
};

Frame random_frame(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-12, 12);
  for (;;) {
    Frame f;
    for (auto& p : f.v) p = {Rational(c(rng)), Rational(c(rng)), Rational(c(rng))};
    if (!dot3(cross3(sub(f.v[1], f.v[0]), sub(f.v[2], f.v[0])), sub(f.v[3], f.v[0])).is_zero()) return f;
  }
}

TetraPoint random_point(std::mt19937_64& rng) {
  for (;;) {
    TetraPoint p{{Scalar(testing::random_rational(rng, 20, 5)), Scalar(testing::random_rational(rng, 20, 5)),
                  Scalar(testing::random_rational(rng, 20, 5)), Scalar(testing::random_rational(rng, 20, 5))}};
    if (!p.sum().rational().is_zero()) return p;
  }
}

TetraPoint point(long x, long y, long z, long w) { return TetraPoint{{Scalar(x), Scalar(y), Scalar(z), Scalar(w)}}; }

EdgeMetric regular() {
  return EdgeMetric({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
}

bool same_point(const TetraPoint& p, const TetraPoint& q) { return projectively_equal(p.x, q.x); }

}  // namespace

TEST_CASE("edge metric labelling") {
  EdgeMetric m({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(6)});
  CHECK(m.d2(1, 2) == Rational(1));  // A2A3 = a1
  CHECK(m.d2(2, 0) == Rational(2));  // A3A1 = a2
  CHECK(m.d2(0, 1) == Rational(3));  // A1A2 = a3
  CHECK(m.d2(0, 3) == Rational(4));  // A1A4 = b1
  CHECK(m.d2(3, 1) == Rational(5));  // A2A4 = b2
  CHECK(m.d2(2, 3) == Rational(6));  // A3A4 = b3
  CHECK_THROWS_AS(EdgeMetric({Rational(0), Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}), Error);
}

TEST_CASE("regular tetrahedron: volume, faces and centroid distance") {
  EdgeMetric m = regular();
  CHECK(m.volume_squared() == Rational(1, 72));
  CHECK(m.face_area_squared(0) == Rational(3));  // 16 F^2 = 3
  TetraPoint g = point(1, 1, 1, 1);
  for (int i = 0; i < 4; ++i) CHECK(squared_distance(g, TetraPoint::vertex(i), m).rational() == Rational(3, 8));
  CHECK(squared_distance(TetraPoint::vertex(0), TetraPoint::vertex(1), m).rational() == Rational(1));
}

TEST_CASE("squared distance agrees with a Cartesian embedding") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 1000; ++n) {
    Frame f = random_frame(rng);
    EdgeMetric m = f.metric();
    TetraPoint p = random_point(rng), q = random_point(rng);
    Vec3 pc = f.embed(p.normalized().x), qc = f.embed(q.normalized().x);
    Rational expected = dot3(sub(pc, qc), sub(pc, qc));
    Scalar got = squared_distance(p, q, m);
    REQUIRE(got.is_rational());
    CHECK(got.rational() == expected);
  }
}

TEST_CASE("bilinear form is the Cartesian dot product of directions") {
  std::mt19937_64 rng(102);
  for (int n = 0; n < 300; ++n) {
    Frame f = random_frame(rng);
    EdgeMetric m = f.metric();
    Quad u = random_point(rng).normalized().x - random_point(rng).normalized().x;
    Quad v = random_point(rng).normalized().x - random_point(rng).normalized().x;
    Vec3 uc = f.embed(u), vc = f.embed(v);
    CHECK(bilinear(u, v, m).rational() == dot3(uc, vc));
    CHECK(perpendicular_form(TetraDirection{u}, TetraDirection{v}, m).rational() == Rational(-2) * dot3(uc, vc));
  }
}

TEST_CASE("normalization and points at infinity") {
  TetraPoint p = point(2, 2, 0, 4);
  CHECK(p.normalized().x[3].rational() == Rational(1, 2));
  CHECK_THROWS_AS(point(1, -1, 0, 0).normalized(), Error);
  try {
    (void)point(1, -1, 2, -2).normalized();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PointAtInfinity);
  }
}

TEST_CASE("coplanarity and collinearity") {
  // Face 4 contains every point with w = 0.
  CHECK(coplanar4(point(1, 2, 3, 0), point(5, 1, 1, 0), point(0, 0, 1, 0), point(2, 7, 1, 0)));
  CHECK_FALSE(coplanar4(point(1, 2, 3, 0), point(5, 1, 1, 0), point(0, 0, 1, 0), point(1, 1, 1, 1)));
  TetraPoint a = point(1, 0, 0, 0), b = point(0, 1, 0, 0);
  CHECK(collinear3(a, b, point(3, 5, 0, 0)));
  CHECK(collinear3(a, b, point(-3, 5, 0, 0)));
  CHECK_FALSE(collinear3(a, b, point(3, 5, 1, 0)));
  // Scaling a point does not change either test.
  CHECK(collinear3(point(2, 0, 0, 0), b, point(6, 10, 0, 0)));
}

TEST_CASE("segment division") {
  TetraPoint m = divide_segment(TetraPoint::vertex(0), TetraPoint::vertex(1), Rational(1), Rational(1));
  CHECK(same_point(m, point(1, 1, 0, 0)));
  TetraPoint t = divide_segment(TetraPoint::vertex(0), TetraPoint::vertex(1), Rational(1), Rational(2));
  CHECK(same_point(t, point(2, 1, 0, 0)));  // A1P : PA2 = 1 : 2
  CHECK_THROWS_AS(divide_segment(TetraPoint::vertex(0), TetraPoint::vertex(1), Rational(1), Rational(-1)), Error);
}

TEST_CASE("line constructions and intersections") {
  std::mt19937_64 rng(103);
  for (int n = 0; n < 200; ++n) {
    TetraPoint x = random_point(rng), p = random_point(rng), q = random_point(rng);
    if (collinear3(x, p, q)) continue;
    TetraLine l1 = line_through(p, x), l2 = line_through(q, x);
    CHECK(lines_intersect(l1, l2));
    CHECK_FALSE(lines_parallel(l1, l2));
    CHECK(same_point(intersection_point(l1, l2), x));
    CHECK(decide(all_zero(point_on_line_residuals(x, l1)), "on line"));
  }
  // Opposite edges are skew.
  TetraLine e12 = line_through(TetraPoint::vertex(0), TetraPoint::vertex(1));
  TetraLine e34 = line_through(TetraPoint::vertex(2), TetraPoint::vertex(3));
  CHECK_FALSE(lines_intersect(e12, e34));
  try {
    (void)intersection_point(e12, e34);
    FAIL("expected SkewLines");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SkewLines);
  }
  // Midline parallel to an edge.
  TetraLine mid = line_through(point(1, 0, 1, 0), point(0, 1, 1, 0));
  CHECK(lines_parallel(mid, e12));
  try {
    (void)intersection_point(mid, e12);
    FAIL("expected ParallelLines");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParallelLines);
  }
  try {
    (void)intersection_point(e12, line_through(point(2, 1, 0, 0), point(1, 3, 0, 0)));
    FAIL("expected IdenticalLines");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IdenticalLines);
  }
  CHECK_THROWS_AS(line_through(point(1, 1, 0, 0), point(2, 2, 0, 0)), Error);
}

TEST_CASE("opposite edges of a regular tetrahedron are perpendicular") {
  EdgeMetric m = regular();
  TetraLine e12 = line_through(TetraPoint::vertex(0), TetraPoint::vertex(1));
  TetraLine e34 = line_through(TetraPoint::vertex(2), TetraPoint::vertex(3));
  TetraLine e13 = line_through(TetraPoint::vertex(0), TetraPoint::vertex(2));
  CHECK(lines_perpendicular(e12, e34, m));
  CHECK_FALSE(lines_perpendicular(e12, e13, m));
}

TEST_CASE("direction cosines agree with Cartesian face normals") {
  std::mt19937_64 rng(104);
  for (int n = 0; n < 200; ++n) {
    Frame f = random_frame(rng);
    EdgeMetric m = f.metric();
    TetraLine l = line_through(random_point(rng), random_point(rng));
    auto cs = direction_cosines(l, m);
    Vec3 d = f.embed(l.dir.d);
    double dn = std::sqrt(dot3(d, d).to_double());
    for (int i = 0; i < 4; ++i) {
      int o[3], k = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) o[k++] = j;
      Vec3 nrm = cross3(sub(f.v[o[1]], f.v[o[0]]), sub(f.v[o[2]], f.v[o[0]]));
      if (dot3(nrm, sub(f.v[i], f.v[o[0]])).sign() < 0) nrm = {-nrm[0], -nrm[1], -nrm[2]};
      double expected = dot3(d, nrm).to_double() / (dn * std::sqrt(dot3(nrm, nrm).to_double()));
      CHECK(cs[i].to_double() == doctest::Approx(expected).epsilon(1e-9));
      if (cs[i].is_interval()) CHECK(cs[i].width() < 1e-20);
    }
  }
  // Along the altitude direction of the regular tetrahedron from face 4 to A4, cos_4 = 1.
  auto c = direction_cosines(line_through(point(1, 1, 1, 0), TetraPoint::vertex(3)), regular());
  CHECK(c[3].to_interval(128).contains(Rational(1)));
}

TEST_CASE("planes") {
  EdgeMetric m = regular();
  (void)m;
  TetraPlane face4 = plane_through_3(TetraPoint::vertex(0), TetraPoint::vertex(1), TetraPoint::vertex(2));
  CHECK(is_zero(face4.eval(point(3, 1, 7, 0))) == ZeroTest::Zero);
  CHECK(is_zero(face4.eval(TetraPoint::vertex(3))) == ZeroTest::NonZero);
  CHECK_THROWS_AS(plane_through_3(TetraPoint::vertex(0), TetraPoint::vertex(1), point(1, 1, 0, 0)), Error);

  // Midpoints of A1A4, A2A4, A3A4 span a plane parallel to face 4.
  TetraPlane mid = plane_through_3(point(1, 0, 0, 1), point(0, 1, 0, 1), point(0, 0, 1, 1));
  CHECK(planes_parallel(face4, mid));
  TetraPlane face3 = plane_through_3(TetraPoint::vertex(0), TetraPoint::vertex(1), TetraPoint::vertex(3));
  CHECK_FALSE(planes_parallel(face4, face3));

  TetraLine e12 = line_through(TetraPoint::vertex(0), TetraPoint::vertex(1));
  TetraPlane through = plane_point_line(TetraPoint::vertex(2), e12);
  CHECK(projectively_equal(through.c, face4.c));
  CHECK_THROWS_AS(plane_point_line(point(1, 1, 0, 0), e12), Error);

  TetraLine e34 = line_through(TetraPoint::vertex(2), TetraPoint::vertex(3));
  TetraPlane par = plane_line_parallel_line(e12, e34.dir);
  CHECK(is_zero(par.eval(TetraPoint::vertex(0))) == ZeroTest::Zero);
  CHECK(is_zero(par.eval(point(1, 1, 1, 1))) == ZeroTest::NonZero);
  CHECK_THROWS_AS(plane_line_parallel_line(e12, e12.dir), Error);

  // Altitude foot lies in face 4.
  TetraLine l = line_through(TetraPoint::vertex(3), point(1, 2, 3, 4));
  TetraPoint x = line_plane_intersection(l, face4);
  CHECK(is_zero(face4.eval(x)) == ZeroTest::Zero);
  CHECK(decide(all_zero(point_on_line_residuals(x, l)), "foot on line"));
  try {
    (void)line_plane_intersection(e12, mid);
    FAIL("expected LineParallelToPlane");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LineParallelToPlane);
  }
}

TEST_CASE("interval inputs give enclosures, not false decisions") {
  Interval third(Rational(1, 3), 64);
  TetraPoint p{{Scalar(third), Scalar(third), Scalar(third), Scalar(0)}};
  TetraPoint q = point(1, 1, 1, 0);
  Scalar d = squared_distance(p, q, regular());
  CHECK(d.is_interval());
  CHECK(d.interval().contains(Rational(0)));
  CHECK_THROWS_AS(collinear3(p, q, TetraPoint::vertex(0)), Error);  // Undecided
}
