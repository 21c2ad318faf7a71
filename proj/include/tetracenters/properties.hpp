#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tetracenters/tetra_model.hpp"

namespace tc {

enum class PropertyId {
  Concur = 1,
  Hyperbolic,
  Coplanar,
  Collinear,
  NormalsConcur,
  FacesParallel,
  CentralIsosceles,
  CentralRegular,
  CentralIsodynamic,
  CentralCircumscriptible,
  CentralOrthocentric,
  SimilarToReference,
  EqualCevians,
  SharedSpaceCenter,
  CentralCenterOnRefEuler,
  RefCenterOnCentralEuler,
};

std::string to_string(PropertyId p);
// Accepts "1".."16" or the alias ("Concur", case-insensitive).
PropertyId parse_property(const std::string& s);
const std::vector<PropertyId>& all_properties();

enum class VerdictKind { HoldsExact, HoldsNumeric, Fails, Undecided };
std::string to_string(VerdictKind k);

struct SharedCenter {
  SpaceCenterKind central;
  SpaceCenterKind reference;
};

struct EulerMembership {
  SpaceCenterKind kind;  // the center lying on the other tetrahedron's Euler line
  Scalar t;              // p = O + t (G - O) on that line
};

struct Verdict {
  VerdictKind kind = VerdictKind::Undecided;
  double width = 0.0;   // widest interval on a HoldsNumeric path
  std::string witness;  // Fails: the evaluated nonzero quantity
  bool degenerate = false;
  std::optional<TetraPoint> point;               // concurrence / normal intersection
  std::optional<TetraPoint> hyperboloid_center;
  std::optional<Scalar> ratio;                   // similarity ratio of squared lengths
  std::vector<SharedCenter> shared;
  std::vector<EulerMembership> euler;
  std::vector<std::string> notes;

  bool holds() const { return kind == VerdictKind::HoldsExact || kind == VerdictKind::HoldsNumeric; }
};

// Zero residuals give HoldsExact (all rational) or HoldsNumeric (some interval
// contains zero); any provably nonzero residual gives Fails with that residual as witness.
Verdict verdict_from_residuals(const std::vector<Scalar>& residuals, const std::string& what);

// --- cevians and concurrence -------------------------------------------------

TetraLine cevian(int i, const TetraPoint& p);  // DegenerateCevian
// Cevians A_iP_i and A_jP_j meet (or are parallel) iff P_i[k] P_j[l] - P_i[l] P_j[k] = 0,
// {k, l} the two remaining indices.
Scalar pair_concurrence_residual(int i, const TetraPoint& pi, int j, const TetraPoint& pj);
// Faces 1 and 2: z1 w2 - z2 w1 = 0.
bool pair_concurrence_condition(const TetraPoint& p1, const TetraPoint& p2);
// All six pairwise conditions; the four cevians then share a point.
Verdict check_concurrence(const std::array<TetraPoint, 4>& p);

// --- spears and hyperbolic groups --------------------------------------------

// Spear through A_k meeting the cevians from the other three vertices. For k = 4:
// z1 x2 y3 - y1 z2 x3.
Scalar spear_residual(int k, const std::array<TetraPoint, 4>& p);
bool spear_condition(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3);
// Trace of the spear through A4 on face 4: (x3 y1, y1 y3, y3 z1, 0).
TetraPoint spear_trace(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3);
// Constructive check: the plane through A4 and cevian 3 meets cevians 1 and 2 in
// points collinear with A4.
bool spear_constructive(const TetraPoint& p1, const TetraPoint& p2, const TetraPoint& p3);

// Midpoint of X = L3 ∩ plane(L1 ∥ L2) and Y = L2 ∩ plane(L1 ∥ L3); uses the first three lines.
TetraPoint hyperboloid_center(const std::array<TetraLine, 4>& lines);
Verdict check_hyperbolic(const std::array<TetraPoint, 4>& p);

// --- planarity ---------------------------------------------------------------

Verdict check_coplanar(const std::array<TetraPoint, 4>& p);
Verdict check_collinear(const std::array<TetraPoint, 4>& p);
// det [a_i + b_i ; a_i b_i ; 1] = 0
bool feuerbach_planarity_condition(const EdgeLengths& e);
// The Lemoine axes of the four faces lie in one plane.
Verdict check_lemoine_axes_coplanar(const EdgeLengths& e);

// --- face normals ------------------------------------------------------------

TetraLine face_normal_line(const EdgeMetric& m, int i, const TetraPoint& p);
// Faces i, j with remaining vertices k, l: |P_j A_k|^2 + |P_i A_l|^2 - |P_j A_l|^2 - |P_i A_k|^2.
Scalar tabov_residual(const EdgeMetric& m, int i, const TetraPoint& pi, int j, const TetraPoint& pj);
bool tabov_pair_condition(const EdgeMetric& m, const TetraPoint& p1, const TetraPoint& p2);
Verdict check_normals_concur(const EdgeMetric& m, const std::array<TetraPoint, 4>& p);

// --- central tetrahedron -----------------------------------------------------

// Squared central edge lengths in the order a1..a3, b1..b3 (P_i <-> A_i).
std::array<Scalar, 6> central_squared_edges(const EdgeMetric& m, const std::array<TetraPoint, 4>& p);
// Properties 7-12 only.
Verdict check_central_class(PropertyId id, const EdgeMetric& m, const std::array<TetraPoint, 4>& p);
std::set<PropertyId> classify_central(const EdgeMetric& m, const std::array<TetraPoint, 4>& p);
Verdict check_faces_parallel(const std::array<TetraPoint, 4>& p);
Verdict check_equal_cevians(const EdgeMetric& m, const std::array<TetraPoint, 4>& p);

// Properties 14-16.
struct SpaceCenterRelations {
  Verdict shared;
  Verdict central_on_reference_euler;
  Verdict reference_on_central_euler;
};
SpaceCenterRelations check_space_center_relations(const EdgeLengths& e, const std::array<TetraPoint, 4>& p,
                                                  const EvalContext& ctx);

// Face points for (e, center) followed by the property check. Errors from the
// center evaluation or from a geometric construction propagate.
Verdict check_property(PropertyId id, const EdgeLengths& e, const std::array<TetraPoint, 4>& p,
                       const EvalContext& ctx);
Verdict check_property(PropertyId id, const EdgeLengths& e, const CenterRef& c, const EvalContext& ctx);

}  // namespace tc
