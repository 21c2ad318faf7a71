#pragma once

#include <array>

#include "tetracenters/projective.hpp"
#include "tetracenters/scalar.hpp"

namespace tc {

// Side lengths of a nondegenerate triangle; construction rejects degenerate input.
class TriangleSides {
 public:
  TriangleSides(Rational a, Rational b, Rational c);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  // K^2 from Heron: (2a^2b^2 + 2b^2c^2 + 2c^2a^2 - a^4 - b^4 - c^4) / 16
  Rational area_squared() const;

  static bool is_valid(const Rational& a, const Rational& b, const Rational& c);

 private:
  Rational a_, b_, c_;
};

Rational heron_area_squared(const Rational& a, const Rational& b, const Rational& c);

using Triple = std::array<Scalar, 3>;

struct Trilinear {
  Triple c;
};

struct Areal {
  Triple c;
};

Areal trilinear_to_areal(const Trilinear& t, const TriangleSides& s);
Trilinear areal_to_trilinear(const Areal& p, const TriangleSides& s);

// (1/x, 1/y, 1/z)
Areal isotomic_conjugate(const Areal& p);
// (a^2/x, b^2/y, c^2/z): trilinear reciprocal expressed in areal coordinates
Areal isogonal_conjugate(const Areal& p, const TriangleSides& s);

inline bool projectively_equal(const Areal& p, const Areal& q) { return projectively_equal(p.c, q.c); }
inline bool projectively_equal(const Trilinear& p, const Trilinear& q) {
  return projectively_equal(p.c, q.c);
}

}  // namespace tc
