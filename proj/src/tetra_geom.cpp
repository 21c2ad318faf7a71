#include "tetracenters/tetra_geom.hpp"

namespace tc {

namespace {

// Position in the squares array for the pair (i, j), 0-based.
int pair_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int table[4][4] = {{-1, 2, 1, 3}, {2, -1, 0, 4}, {1, 0, -1, 5}, {3, 4, 5, -1}};
  if (i < 0 || j > 3 || i == j) throw Error(ErrorCode::InvalidArgument, "bad vertex pair");
  return table[i][j];
}

Scalar dot(const Quad& a, const Quad& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]; }

Quad as_quad(const TetraDirection& d) { return d.d; }

}  // namespace

TetraPoint TetraPoint::vertex(int i) {
  TetraPoint p{{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
  p.x[i] = Scalar(1);
  return p;
}

TetraPoint TetraPoint::normalized() const {
  Scalar s = sum();
  ZeroTest z = is_zero(s);
  if (z == ZeroTest::Zero) throw Error(ErrorCode::PointAtInfinity, "coordinate sum is zero");
  if (z == ZeroTest::Undecided) throw Error(ErrorCode::Undecided, "coordinate sum straddles zero");
  return TetraPoint{{x[0] / s, x[1] / s, x[2] / s, x[3] / s}};
}

Scalar TetraPlane::eval(const TetraPoint& p) const { return dot(c, p.x); }

EdgeMetric::EdgeMetric(std::array<Rational, 6> squares) : sq_(std::move(squares)) {
  for (const auto& s : sq_)
    if (s.sign() <= 0) throw Error(ErrorCode::InvalidInstance, "squared edge lengths must be positive");
}

const Rational& EdgeMetric::d2(int i, int j) const { return sq_[pair_index(i, j)]; }

Rational EdgeMetric::cayley_menger() const {
  Matrix m(5, std::vector<Scalar>(5, Scalar(0)));
  for (int i = 1; i < 5; ++i) {
    m[0][i] = Scalar(1);
    m[i][0] = Scalar(1);
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m[i + 1][j + 1] = Scalar(d2(i, j));
  return det(m).rational();
}

Rational EdgeMetric::face_area_squared(int i) const {
  int v[3], k = 0;
  for (int j = 0; j < 4; ++j)
    if (j != i) v[k++] = j;
  const Rational &p = d2(v[0], v[1]), &q = d2(v[0], v[2]), &r = d2(v[1], v[2]);
  return Rational(2) * (p * q + q * r + r * p) - p * p - q * q - r * r;
}

Quad operator+(const Quad& p, const Quad& q) { return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]}; }
Quad operator-(const Quad& p, const Quad& q) { return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]}; }
Quad operator*(const Scalar& s, const Quad& p) { return {s * p[0], s * p[1], s * p[2], s * p[3]}; }

Scalar coplanar_residual(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3, const TetraPoint& p4) {
  Matrix m;
  for (const auto* p : {&p1, &p2, &p3, &p4}) m.push_back({p->x.begin(), p->x.end()});
  return det(m);
}

bool coplanar4(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3, const TetraPoint& p4) {
  return decide(is_zero(coplanar_residual(p1, p2, p3, p4)), "coplanarity");
}

std::vector<Scalar> collinear_residuals(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3) {
  Matrix rows = {{p1.x.begin(), p1.x.end()}, {p2.x.begin(), p2.x.end()}, {p3.x.begin(), p3.x.end()}};
  return null_vector(rows);
}

bool collinear3(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3) {
  return decide(all_zero(collinear_residuals(p1, p2, p3)), "collinearity");
}

Scalar bilinear(const Quad& u, const Quad& v, const EdgeMetric& m) {
  Scalar total(0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) total += Scalar(m.d2(i, j)) * (u[i] * v[j] + u[j] * v[i]);
  return -total / Scalar(2);
}

Scalar squared_distance(const TetraPoint& p, const TetraPoint& q, const EdgeMetric& m) {
  Quad d = p.normalized().x - q.normalized().x;
  Scalar total(0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) total += Scalar(m.d2(i, j)) * d[i] * d[j];
  return -total;
}

TetraLine line_through(const TetraPoint& p, const TetraPoint& q) {
  TetraPoint np = p.normalized(), nq = q.normalized();
  Quad d = nq.x - np.x;
  if (is_zero_tuple(d)) throw Error(ErrorCode::IdenticalPoints, "line through a single point");
  return TetraLine{np, TetraDirection{d}};
}

TetraPoint divide_segment(const TetraPoint& p, const TetraPoint& q, const Rational& mu, const Rational& lambda) {
  Rational s = mu + lambda;
  if (s.is_zero()) throw Error(ErrorCode::DegenerateRatio, "mu + lambda = 0");
  Quad r = Scalar(lambda / s) * p.normalized().x + Scalar(mu / s) * q.normalized().x;
  return TetraPoint{r};
}

std::vector<Scalar> point_on_line_residuals(const TetraPoint& p, const TetraLine& l) {
  // p lies on the line iff p, base and base + dir are dependent.
  TetraPoint second{l.base.x + l.dir.d};
  return collinear_residuals(p, l.base, second);
}

std::vector<Scalar> parallel_residuals(const TetraDirection& d1, const TetraDirection& d2) {
  return cross_residuals(d1.d, d2.d);
}

bool lines_parallel(const TetraLine& l1, const TetraLine& l2) {
  return decide(all_zero(parallel_residuals(l1.dir, l2.dir)), "parallel test");
}

Scalar perpendicular_form(const TetraDirection& d1, const TetraDirection& d2, const EdgeMetric& m) {
  return Scalar(-2) * bilinear(d1.d, d2.d, m);
}

bool lines_perpendicular(const TetraLine& l1, const TetraLine& l2, const EdgeMetric& m) {
  return decide(is_zero(perpendicular_form(l1.dir, l2.dir, m)), "perpendicularity");
}

Scalar intersect_residual(const TetraLine& l1, const TetraLine& l2) {
  Matrix rows = {{l1.base.x.begin(), l1.base.x.end()},
                 {l1.dir.d.begin(), l1.dir.d.end()},
                 {l2.base.x.begin(), l2.base.x.end()},
                 {l2.dir.d.begin(), l2.dir.d.end()}};
  return det(rows);
}

bool lines_intersect(const TetraLine& l1, const TetraLine& l2) {
  return decide(is_zero(intersect_residual(l1, l2)), "intersection test");
}

TetraPoint intersection_point(const TetraLine& l1, const TetraLine& l2, bool verify) {
  // base1 + s dir1 = base2 + u dir2
  Quad w = l2.base.x - l1.base.x;
  const Quad &d1 = l1.dir.d, &d2 = l2.dir.d;
  int bi = -1, bj = -1;
  bool undecided = false;
  for (int i = 0; i < 4 && bi < 0; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      ZeroTest z = is_zero(d1[j] * d2[i] - d1[i] * d2[j]);
      if (z == ZeroTest::NonZero) {
        bi = i;
        bj = j;
        break;
      }
      if (z == ZeroTest::Undecided) undecided = true;
    }
  }
  if (bi < 0) {
    if (undecided) throw Error(ErrorCode::Undecided, "cannot separate line directions");
    if (decide(all_zero(point_on_line_residuals(l2.base, l1)), "identical-line test"))
      throw Error(ErrorCode::IdenticalLines, "lines coincide");
    throw Error(ErrorCode::ParallelLines, "lines are parallel");
  }
  // s d1_i - u d2_i = w_i for i in {bi, bj}
  Scalar den = d1[bj] * d2[bi] - d1[bi] * d2[bj];
  Scalar s = (w[bj] * d2[bi] - w[bi] * d2[bj]) / den;
  Quad p = l1.base.x + s * d1;
  TetraPoint out{p};
  if (verify && !decide(all_zero(point_on_line_residuals(out, l2)), "intersection membership"))
    throw Error(ErrorCode::SkewLines, "lines do not meet");
  return out;
}

std::array<Scalar, 4> direction_cosines(const TetraLine& l, const EdgeMetric& m, int bits) {
  EvalContext ctx = EvalContext::mixed(bits);
  Scalar sigma2 = bilinear(l.dir.d, l.dir.d, m);
  auto s = sign_of(sigma2);
  if (!s || *s <= 0) throw Error(ErrorCode::ImaginarySigma, "direction has non-positive squared length");
  Scalar sigma = sigma2.is_rational() ? ctx.root(sigma2.rational()) : Scalar(sigma2.interval().sqrt());
  Scalar vol = ctx.root(m.volume_squared());
  std::array<Scalar, 4> out;
  for (int i = 0; i < 4; ++i) {
    Scalar area = ctx.root(m.face_area_squared(i) / Rational(16));
    out[i] = Scalar(3) * vol * l.dir.d[i] / (area * sigma);
  }
  return out;
}

TetraPlane plane_through_3(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3) {
  Matrix rows = {{p1.x.begin(), p1.x.end()}, {p2.x.begin(), p2.x.end()}, {p3.x.begin(), p3.x.end()}};
  auto v = null_vector(rows);
  Quad c{v[0], v[1], v[2], v[3]};
  if (is_zero_tuple(c)) throw Error(ErrorCode::CollinearPoints, "plane through collinear points");
  return TetraPlane{c};
}

std::vector<Scalar> planes_parallel_residuals(const TetraPlane& e1, const TetraPlane& e2) {
  std::array<Scalar, 3> u{e1.c[0] - e1.c[3], e1.c[1] - e1.c[3], e1.c[2] - e1.c[3]};
  std::array<Scalar, 3> v{e2.c[0] - e2.c[3], e2.c[1] - e2.c[3], e2.c[2] - e2.c[3]};
  return cross_residuals(u, v);
}

bool planes_parallel(const TetraPlane& e1, const TetraPlane& e2) {
  return decide(all_zero(planes_parallel_residuals(e1, e2)), "plane parallelism");
}

TetraPlane plane_point_line(const TetraPoint& p, const TetraLine& l) {
  Matrix rows = {{p.x.begin(), p.x.end()}, {l.base.x.begin(), l.base.x.end()}, {l.dir.d.begin(), l.dir.d.end()}};
  auto v = null_vector(rows);
  Quad c{v[0], v[1], v[2], v[3]};
  if (is_zero_tuple(c)) throw Error(ErrorCode::PointOnLine, "point lies on the line");
  return TetraPlane{c};
}

TetraPlane plane_line_parallel_line(const TetraLine& l1, const TetraDirection& d2) {
  Matrix rows = {{l1.base.x.begin(), l1.base.x.end()}, {l1.dir.d.begin(), l1.dir.d.end()}, {d2.d.begin(), d2.d.end()}};
  auto v = null_vector(rows);
  Quad c{v[0], v[1], v[2], v[3]};
  if (is_zero_tuple(c)) throw Error(ErrorCode::ParallelDirections, "directions are parallel");
  return TetraPlane{c};
}

TetraPoint line_plane_intersection(const TetraLine& l, const TetraPlane& e) {
  Scalar den = dot(e.c, as_quad(l.dir));
  ZeroTest z = is_zero(den);
  if (z == ZeroTest::Undecided) throw Error(ErrorCode::Undecided, "line/plane incidence straddles zero");
  if (z == ZeroTest::Zero) throw Error(ErrorCode::LineParallelToPlane, "AK + BL + CM + DN = 0");
  TetraPoint base = l.base.normalized();
  Scalar r = e.eval(base) / den;
  return TetraPoint{base.x - r * l.dir.d};
}

}  // namespace tc
