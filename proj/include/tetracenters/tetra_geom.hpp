#pragma once

#include <array>
#include <vector>

#include "tetracenters/linalg.hpp"
#include "tetracenters/projective.hpp"

namespace tc {

using Quad = std::array<Scalar, 4>;

// Projective tetrahedral coordinates; the exact form sums to 1.
struct TetraPoint {
  Quad x;

  static TetraPoint vertex(int i);  // 0-based: A1 = vertex(0)
  Scalar sum() const { return x[0] + x[1] + x[2] + x[3]; }
  // Divides by the coordinate sum; PointAtInfinity when it vanishes.
  TetraPoint normalized() const;
};

// Direction vector (K, L, M, N) with K + L + M + N = 0.
struct TetraDirection {
  Quad d;
};

struct TetraLine {
  TetraPoint base;  // normalized
  TetraDirection dir;
};

// A x + B y + C z + D w = 0
struct TetraPlane {
  Quad c;
  Scalar eval(const TetraPoint& p) const;
};

// Squared edge lengths indexed by vertex pair:
// d(2,3)=a1, d(1,3)=a2, d(1,2)=a3, d(1,4)=b1, d(2,4)=b2, d(3,4)=b3.
class EdgeMetric {
 public:
  // Squares in the order a1^2, a2^2, a3^2, b1^2, b2^2, b3^2.
  explicit EdgeMetric(std::array<Rational, 6> squares);
  const Rational& d2(int i, int j) const;  // 0-based vertices, i != j
  const std::array<Rational, 6>& squares() const { return sq_; }
  // 5x5 Cayley-Menger determinant; 288 V^2.
  Rational cayley_menger() const;
  Rational volume_squared() const { return cayley_menger() / Rational(288); }
  // 16 F_i^2 for the face opposite vertex i.
  Rational face_area_squared(int i) const;

 private:
  std::array<Rational, 6> sq_;
};

Quad operator+(const Quad& p, const Quad& q);
Quad operator-(const Quad& p, const Quad& q);
Quad operator*(const Scalar& s, const Quad& p);

// Coplanarity residual: the 4x4 determinant of the coordinates.
Scalar coplanar_residual(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3, const TetraPoint& p4);
bool coplanar4(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3, const TetraPoint& p4);

// Collinearity: the 3x4 coordinate matrix has rank <= 2 (its four 3x3 minors vanish).
std::vector<Scalar> collinear_residuals(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3);
bool collinear3(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3);

// -sum over edges of d_ij^2 u_i u_j, with u = normalized(p) - normalized(q).
Scalar squared_distance(const TetraPoint& p, const TetraPoint& q, const EdgeMetric& m);
// -sum d_ij^2 u_i v_j over i<j, symmetrised; Q(u) = bilinear(u,u) is the squared length of a direction.
Scalar bilinear(const Quad& u, const Quad& v, const EdgeMetric& m);

TetraLine line_through(const TetraPoint& p, const TetraPoint& q);
TetraPoint divide_segment(const TetraPoint& p, const TetraPoint& q, const Rational& mu, const Rational& lambda);
std::vector<Scalar> point_on_line_residuals(const TetraPoint& p, const TetraLine& l);

std::vector<Scalar> parallel_residuals(const TetraDirection& d1, const TetraDirection& d2);
bool lines_parallel(const TetraLine& l1, const TetraLine& l2);

// Perpendicularity expression a1^2(L1M2+L2M1) + ... + b3^2(M1N2+M2N1).
Scalar perpendicular_form(const TetraDirection& d1, const TetraDirection& d2, const EdgeMetric& m);
bool lines_perpendicular(const TetraLine& l1, const TetraLine& l2, const EdgeMetric& m);

// Intersection test: determinant of (base1; dir1; base2; dir2); parallel lines count as intersecting.
Scalar intersect_residual(const TetraLine& l1, const TetraLine& l2);
bool lines_intersect(const TetraLine& l1, const TetraLine& l2);
// verify=false skips the membership test on l2 (for interval inputs known to meet).
TetraPoint intersection_point(const TetraLine& l1, const TetraLine& l2, bool verify = true);

// Cosines of the angles between l and the inward face normals: 3V K_i / (F_i sigma).
// Always returns intervals (or rationals when every radical happens to be rational).
std::array<Scalar, 4> direction_cosines(const TetraLine& l, const EdgeMetric& m, int bits = kRadicalBits);

TetraPlane plane_through_3(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3);
std::vector<Scalar> planes_parallel_residuals(const TetraPlane& e1, const TetraPlane& e2);
bool planes_parallel(const TetraPlane& e1, const TetraPlane& e2);
TetraPlane plane_point_line(const TetraPoint& p, const TetraLine& l);
TetraPlane plane_line_parallel_line(const TetraLine& l1, const TetraDirection& d2);
// Line-plane meet; LineParallelToPlane when AK+BL+CM+DN = 0.
TetraPoint line_plane_intersection(const TetraLine& l, const TetraPlane& e);

}  // namespace tc
