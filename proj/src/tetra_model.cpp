#include "tetracenters/tetra_model.hpp"

#include <random>

namespace tc {

namespace {

// Pair index into (a1,a2,a3,b1,b2,b3) for vertices i<j, 0-based.
int edge_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int table[4][4] = {{-1, 2, 1, 3}, {2, -1, 0, 4}, {1, 0, -1, 5}, {3, 4, 5, -1}};
  if (i < 0 || j > 3 || i == j) throw Error(ErrorCode::InvalidArgument, "bad vertex pair");
  return table[i][j];
}

std::array<Rational, 6> flat(const EdgeLengths& e) { return {e.a[0], e.a[1], e.a[2], e.b[0], e.b[1], e.b[2]}; }

Rational cayley_menger_of(const EdgeLengths& e) {
  std::array<Rational, 6> sq;
  auto f = flat(e);
  for (int i = 0; i < 6; ++i) sq[i] = f[i] * f[i];
  Matrix m(5, std::vector<Scalar>(5, Scalar(0)));
  for (int i = 1; i < 5; ++i) m[0][i] = m[i][0] = Scalar(1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) m[i + 1][j + 1] = Scalar(sq[edge_slot(i, j)]);
  return det(m).rational();
}

struct Draw {
  std::mt19937_64 rng;

  Draw(std::uint64_t seed, int k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    rng.seed(seq);
  }
  long integer(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational positive(long max_num, long max_den) { return Rational(integer(1, max_num), integer(1, max_den)); }
};

constexpr int kAttemptBudget = 20000;

std::optional<EdgeLengths> candidate(TetraFamily f, Draw& d) {
  auto pos = [&] { return d.positive(30, 3); };
  switch (f) {
    case TetraFamily::General:
      return EdgeLengths::of(pos(), pos(), pos(), pos(), pos(), pos());
    case TetraFamily::Isosceles: {
      Rational a1 = pos(), a2 = pos(), a3 = pos();
      return EdgeLengths::of(a1, a2, a3, a1, a2, a3);
    }
    case TetraFamily::Circumscriptible: {
      Rational t = d.positive(40, 2);
      std::array<Rational, 3> a;
      for (auto& x : a) x = t * Rational(d.integer(1, 23), 24);
      return EdgeLengths::of(a[0], a[1], a[2], t - a[0], t - a[1], t - a[2]);
    }
    case TetraFamily::Isodynamic: {
      Rational t = d.positive(200, 3);
      std::array<Rational, 3> a{pos(), pos(), pos()};
      return EdgeLengths::of(a[0], a[1], a[2], t / a[0], t / a[1], t / a[2]);
    }
    case TetraFamily::Harmonic: {
      Rational t = d.positive(10, 10);
      std::array<Rational, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        a[i] = pos();
        Rational den = t * a[i] - Rational(1);
        if (den.sign() <= 0) return std::nullopt;
        b[i] = a[i] / den;
      }
      return EdgeLengths{a, b};
    }
    case TetraFamily::Orthocentric: {
      // Second intersection of x^2+y^2 = p^2+q^2 with lines of slope m through (p, q).
      long p = d.integer(1, 12), q = d.integer(1, 12);
      std::array<Rational, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        Rational m(d.integer(-20, 20), d.integer(1, 10));
        Rational lambda = Rational(-2) * (Rational(p) + Rational(q) * m) / (Rational(1) + m * m);
        Rational x = Rational(p) + lambda, y = Rational(q) + lambda * m;
        if (x.is_zero() || y.is_zero()) return std::nullopt;
        a[i] = x.abs();
        b[i] = y.abs();
      }
      return EdgeLengths{a, b};
    }
    case TetraFamily::ProductSum: {
      Rational t = d.positive(120, 2);
      std::array<Rational, 3> a, b;
      for (int i = 0; i < 3; ++i) {
        a[i] = pos();
        b[i] = (t - a[i]) / (a[i] + Rational(1));
        if (b[i].sign() <= 0) return std::nullopt;
      }
      return EdgeLengths{a, b};
    }
  }
  return std::nullopt;
}

// Coincident face sides make some centers collapse (e.g. the Feuerbach point
// onto a vertex) and make unrelated properties hold by accident.
bool generic(const EdgeLengths& e, TetraFamily f) {
  for (const auto& s : face_sides(e))
    if (s[0] == s[1] || s[1] == s[2] || s[0] == s[2]) return false;
  if (f != TetraFamily::Isosceles)
    for (int i = 0; i < 3; ++i)
      if (e.a[i] == e.b[i]) return false;
  return true;
}

Scalar root_of(const Scalar& x, const EvalContext& ctx) {
  if (x.is_rational()) return ctx.root(x.rational());
  if (ctx.mode == EvalMode::Exact) throw Error(ErrorCode::IrrationalInExactMode, "radical of an interval");
  return sqrt(x, ctx.precision_bits);
}

// 16 F^2 from squared sides.
template <class T>
T heron16(const T& p, const T& q, const T& r) {
  return T(2) * (p * q + q * r + r * p) - p * p - q * q - r * r;
}

TetraPoint combine(const TetraPoint& p, const Scalar& s, const TetraPoint& q, const Scalar& t) {
  return TetraPoint{s * p.x + t * q.x}.normalized();
}

std::array<int, 3> others(int k) {
  std::array<int, 3> o{};
  int n = 0;
  for (int j = 0; j < 4; ++j)
    if (j != k) o[n++] = j;
  return o;
}

}  // namespace

EdgeMetric EdgeLengths::metric() const {
  Validation v = validate(*this);
  if (!v) throw Error(ErrorCode::InvalidInstance, v.reason);
  auto f = flat(*this);
  std::array<Rational, 6> sq;
  for (int i = 0; i < 6; ++i) sq[i] = f[i] * f[i];
  return EdgeMetric(sq);
}

const Rational& EdgeLengths::edge(int i, int j) const {
  int s = edge_slot(i, j);
  return s < 3 ? a[s] : b[s - 3];
}

std::string EdgeLengths::str() const {
  std::string out = "(";
  auto f = flat(*this);
  for (int i = 0; i < 6; ++i) out += (i ? "," : "") + f[i].str();
  return out + ")";
}

Validation validate(const EdgeLengths& e) {
  for (const auto& x : flat(e))
    if (x.sign() <= 0) return {false, "edge lengths must be positive"};
  auto faces = face_sides(e);
  for (int i = 0; i < 4; ++i)
    if (!TriangleSides::is_valid(faces[i][0], faces[i][1], faces[i][2]))
      return {false, "face " + std::to_string(i + 1) + " violates the triangle inequality"};
  if (cayley_menger_of(e).sign() <= 0) return {false, "Cayley-Menger determinant is not positive (no volume)"};
  return {};
}

std::string to_string(TetraFamily f) {
  switch (f) {
    case TetraFamily::General: return "general";
    case TetraFamily::Isosceles: return "isosceles";
    case TetraFamily::Circumscriptible: return "circumscriptible";
    case TetraFamily::Isodynamic: return "isodynamic";
    case TetraFamily::Orthocentric: return "orthocentric";
    case TetraFamily::Harmonic: return "harmonic";
    case TetraFamily::ProductSum: return "productsum";
  }
  return "?";
}

const std::vector<TetraFamily>& all_families() {
  static const std::vector<TetraFamily> v{TetraFamily::General,    TetraFamily::Isosceles,
                                          TetraFamily::Circumscriptible, TetraFamily::Isodynamic,
                                          TetraFamily::Orthocentric,     TetraFamily::Harmonic,
                                          TetraFamily::ProductSum};
  return v;
}

TetraFamily parse_family(const std::string& name) {
  for (auto f : all_families())
    if (to_string(f) == name) return f;
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + name + "'");
}

Rational family_value(const EdgeLengths& e, TetraFamily f, int i) {
  const Rational &a = e.a[i], &b = e.b[i];
  switch (f) {
    case TetraFamily::General: return Rational(0);
    case TetraFamily::Isosceles: return a - b;
    case TetraFamily::Circumscriptible: return a + b;
    case TetraFamily::Isodynamic: return a * b;
    case TetraFamily::Orthocentric: return a * a + b * b;
    case TetraFamily::Harmonic: return a.reciprocal() + b.reciprocal();
    case TetraFamily::ProductSum: return a * b + a + b;
  }
  return Rational(0);
}

bool family_predicate(const EdgeLengths& e, TetraFamily f) {
  if (f == TetraFamily::Isosceles) return e.a == e.b;
  Rational t = family_value(e, f, 0);
  return family_value(e, f, 1) == t && family_value(e, f, 2) == t;
}

std::vector<EdgeLengths> generate(TetraFamily f, std::uint64_t seed, int count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  std::vector<EdgeLengths> out;
  for (int k = 0; k < count; ++k) {
    Draw d(seed, k);
    bool found = false;
    for (int attempt = 0; attempt < kAttemptBudget && !found; ++attempt) {
      auto c = candidate(f, d);
      if (c && generic(*c, f) && validate(*c) && family_predicate(*c, f)) {
        out.push_back(*c);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::GenerationExhausted, "no valid " + to_string(f) + " instance within budget");
  }
  return out;
}

std::array<std::array<Rational, 3>, 4> face_sides(const EdgeLengths& e) {
  return {{{e.a[0], e.b[1], e.b[2]}, {e.b[0], e.a[1], e.b[2]}, {e.b[0], e.b[1], e.a[2]}, {e.a[0], e.a[1], e.a[2]}}};
}

TetraPoint embed_face_point(int face, const Triple& x) {
  Scalar z(0);
  switch (face) {
    case 0: return TetraPoint{{z, x[2], x[1], x[0]}};
    case 1: return TetraPoint{{x[2], z, x[0], x[1]}};
    case 2: return TetraPoint{{x[1], x[0], z, x[2]}};
    case 3: return TetraPoint{{x[0], x[1], x[2], z}};
  }
  throw Error(ErrorCode::InvalidArgument, "face index out of range");
}

std::array<TetraPoint, 4> face_points(const EdgeLengths& e, const CatalogEntry& entry,
                                      const std::optional<Rational>& r, const EvalContext& ctx) {
  CenterExpr f = entry.areal();
  auto sides = face_sides(e);
  std::array<TetraPoint, 4> out;
  for (int i = 0; i < 4; ++i) {
    TriangleSides s(sides[i][0], sides[i][1], sides[i][2]);
    try {
      out[i] = embed_face_point(i, eval_center(f, CoordForm::Areal, s, r, ctx).c);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::EvaluationSingular || err.code() == ErrorCode::DivisionByZero)
        throw Error(ErrorCode::EvaluationSingular, entry.id + " is singular on face " + std::to_string(i + 1));
      throw;
    }
  }
  return out;
}

std::array<TetraPoint, 4> face_points(const EdgeLengths& e, const CenterRef& c, const EvalContext& ctx) {
  return face_points(e, c.entry, c.r, ctx);
}

std::string to_string(SpaceCenterKind k) {
  switch (k) {
    case SpaceCenterKind::Centroid: return "centroid";
    case SpaceCenterKind::Circumcenter: return "circumcenter";
    case SpaceCenterKind::Incenter: return "incenter";
    case SpaceCenterKind::MongePoint: return "monge";
    case SpaceCenterKind::EulerPoint: return "euler";
  }
  return "?";
}

const std::vector<SpaceCenterKind>& all_space_centers() {
  static const std::vector<SpaceCenterKind> v{SpaceCenterKind::Centroid, SpaceCenterKind::Circumcenter,
                                              SpaceCenterKind::Incenter, SpaceCenterKind::MongePoint,
                                              SpaceCenterKind::EulerPoint};
  return v;
}

TetraPoint space_center(const EdgeLengths& e, SpaceCenterKind k, const EvalContext& ctx) {
  EdgeMetric m = e.metric();
  TetraPoint g{{Scalar(Rational(1, 4)), Scalar(Rational(1, 4)), Scalar(Rational(1, 4)), Scalar(Rational(1, 4))}};
  switch (k) {
    case SpaceCenterKind::Centroid:
      return g;
    case SpaceCenterKind::Incenter: {
      TetraPoint p;
      for (int i = 0; i < 4; ++i) p.x[i] = root_of(Scalar(m.face_area_squared(i)), ctx);
      return p.normalized();
    }
    default:
      break;
  }
  // O_k = sum over edges e of the opposite face of e^2 e'^2 (S - 2 e^2) - 2 prod e^2,
  // where e' is the edge opposite e and S the sum of the face's squared edges.
  TetraPoint o;
  for (int k4 = 0; k4 < 4; ++k4) {
    auto f = others(k4);
    std::array<std::pair<int, int>, 3> edges{{{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}}};
    std::array<int, 3> opposite_far{f[2], f[1], f[0]};
    Rational s(0), prod(1), total(0);
    for (auto [i, j] : edges) {
      s += m.d2(i, j);
      prod *= m.d2(i, j);
    }
    for (int n = 0; n < 3; ++n) {
      const Rational& e2 = m.d2(edges[n].first, edges[n].second);
      total += e2 * m.d2(k4, opposite_far[n]) * (s - Rational(2) * e2);
    }
    o.x[k4] = Scalar(total - Rational(2) * prod);
  }
  o = o.normalized();
  if (k == SpaceCenterKind::Circumcenter) return o;
  TetraPoint monge = combine(g, Scalar(2), o, Scalar(-1));
  if (k == SpaceCenterKind::MongePoint) return monge;
  return combine(g, Scalar(2), monge, Scalar(1));
}

TetraPoint space_center_of_points(const std::array<TetraPoint, 4>& p, const EdgeMetric& m, SpaceCenterKind k,
                                  const EvalContext& ctx) {
  std::array<TetraPoint, 4> n;
  for (int i = 0; i < 4; ++i) n[i] = p[i].normalized();
  if (decide(is_zero(coplanar_residual(n[0], n[1], n[2], n[3])), "coplanarity of central tetrahedron"))
    throw Error(ErrorCode::CoplanarPoints, "the four points are coplanar");

  TetraPoint g{p[0].x + p[1].x + p[2].x + p[3].x};
  g = g.normalized();
  if (k == SpaceCenterKind::Centroid) return g;

  if (k == SpaceCenterKind::Incenter) {
    Matrix d2(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) d2[i][j] = d2[j][i] = squared_distance(n[i], n[j], m);
    TetraPoint out{{Scalar(0), Scalar(0), Scalar(0), Scalar(0)}};
    Scalar total(0);
    for (int i = 0; i < 4; ++i) {
      auto f = others(i);
      Scalar area = root_of(heron16(d2[f[0]][f[1]], d2[f[0]][f[2]], d2[f[1]][f[2]]), ctx);
      out.x = out.x + area * n[i].x;
      total += area;
    }
    return TetraPoint{Scalar(1) / total * out.x};
  }

  // B(X, P_k - P_0) = (Q(P_k) - Q(P_0)) / 2 for k = 1..3, and sum X = 1.
  Matrix rows;
  std::vector<Scalar> rhs;
  Scalar q0 = bilinear(n[0].x, n[0].x, m);
  for (int k3 = 1; k3 < 4; ++k3) {
    Quad d = n[k3].x - n[0].x;
    std::vector<Scalar> row;
    for (int c = 0; c < 4; ++c) {
      Quad unit{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
      unit[c] = Scalar(1);
      row.push_back(bilinear(unit, d, m));
    }
    rows.push_back(row);
    rhs.push_back((bilinear(n[k3].x, n[k3].x, m) - q0) / Scalar(2));
  }
  rows.push_back({Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  rhs.push_back(Scalar(1));
  auto x = solve(rows, rhs);
  TetraPoint o{{x[0], x[1], x[2], x[3]}};
  if (k == SpaceCenterKind::Circumcenter) return o;
  TetraPoint monge = combine(g, Scalar(2), o, Scalar(-1));
  if (k == SpaceCenterKind::MongePoint) return monge;
  return combine(g, Scalar(2), monge, Scalar(1));
}

Scalar line_param(const TetraPoint& o, const TetraPoint& g, const TetraPoint& p) {
  TetraPoint on = o.normalized(), gn = g.normalized();
  Quad d = gn.x - on.x;
  std::vector<Scalar> dv(d.begin(), d.end());
  if (decide(all_zero(dv), "Euler line direction")) throw Error(ErrorCode::EulerLineDegenerate, "G = O");
  Quad v = p.normalized().x - on.x;
  if (!decide(all_zero(cross_residuals(v, d)), "Euler line membership"))
    throw Error(ErrorCode::NotOnLine, "point is not on the line");
  for (int i = 0; i < 4; ++i)
    if (is_zero(d[i]) == ZeroTest::NonZero) return v[i] / d[i];
  throw Error(ErrorCode::Undecided, "no provably nonzero direction component");
}

Scalar euler_param(const EdgeLengths& e, const TetraPoint& p) {
  return line_param(space_center(e, SpaceCenterKind::Circumcenter), space_center(e, SpaceCenterKind::Centroid), p);
}

}  // namespace tc
