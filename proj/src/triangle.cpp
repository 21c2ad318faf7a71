#include "tetracenters/triangle.hpp"

namespace tc {

bool TriangleSides::is_valid(const Rational& a, const Rational& b, const Rational& c) {
  return a.sign() > 0 && b.sign() > 0 && c.sign() > 0 && a < b + c && b < c + a && c < a + b;
}

TriangleSides::TriangleSides(Rational a, Rational b, Rational c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (!is_valid(a_, b_, c_))
    throw Error(ErrorCode::DegenerateTriangle, "sides " + a_.str() + ", " + b_.str() + ", " + c_.str());
}

Rational heron_area_squared(const Rational& a, const Rational& b, const Rational& c) {
  Rational a2 = a * a, b2 = b * b, c2 = c * c;
  return (Rational(2) * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2) / Rational(16);
}

Rational TriangleSides::area_squared() const { return heron_area_squared(a_, b_, c_); }

Areal trilinear_to_areal(const Trilinear& t, const TriangleSides& s) {
  return Areal{{t.c[0] * Scalar(s.a()), t.c[1] * Scalar(s.b()), t.c[2] * Scalar(s.c())}};
}

Trilinear areal_to_trilinear(const Areal& p, const TriangleSides& s) {
  return Trilinear{{p.c[0] / Scalar(s.a()), p.c[1] / Scalar(s.b()), p.c[2] / Scalar(s.c())}};
}

namespace {

void require_off_sidelines(const Areal& p) {
  for (const auto& x : p.c)
    if (is_zero(x) != ZeroTest::NonZero) throw Error(ErrorCode::OnSideline, "zero areal coordinate");
}

}  // namespace

Areal isotomic_conjugate(const Areal& p) {
  require_off_sidelines(p);
  return Areal{{Scalar(1) / p.c[0], Scalar(1) / p.c[1], Scalar(1) / p.c[2]}};
}

Areal isogonal_conjugate(const Areal& p, const TriangleSides& s) {
  require_off_sidelines(p);
  return Areal{{Scalar(s.a() * s.a()) / p.c[0], Scalar(s.b() * s.b()) / p.c[1],
                Scalar(s.c() * s.c()) / p.c[2]}};
}

}  // namespace tc
