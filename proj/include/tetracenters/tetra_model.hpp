#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetracenters/catalog.hpp"
#include "tetracenters/tetra_geom.hpp"
#include "tetracenters/triangle.hpp"

namespace tc {

// Edge lengths: A2A3=a1, A3A1=a2, A1A2=a3, A1A4=b1, A2A4=b2, A3A4=b3.
// Opposite pairs are (a_i, b_i).
struct EdgeLengths {
  std::array<Rational, 3> a;
  std::array<Rational, 3> b;

  static EdgeLengths of(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                        const Rational& b2, const Rational& b3) {
    return EdgeLengths{{a1, a2, a3}, {b1, b2, b3}};
  }
  // Throws InvalidInstance unless validate() passes.
  EdgeMetric metric() const;
  // Length of edge A_iA_j, 0-based vertices.
  const Rational& edge(int i, int j) const;
  std::string str() const;
  friend bool operator==(const EdgeLengths&, const EdgeLengths&) = default;
};

struct Validation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Total: four strict face triangle inequalities, then Cayley-Menger > 0.
Validation validate(const EdgeLengths& e);

// ProductSum (a_i b_i + a_i + b_i constant) is an extra family used only to
// probe converses; it is not part of the classical six.
enum class TetraFamily { General, Isosceles, Circumscriptible, Isodynamic, Orthocentric, Harmonic, ProductSum };

std::string to_string(TetraFamily f);
TetraFamily parse_family(const std::string& name);  // InvalidArgument on unknown names
const std::vector<TetraFamily>& all_families();

// Value of the family expression for pair i (isosceles: a_i - b_i).
Rational family_value(const EdgeLengths& e, TetraFamily f, int i);
bool family_predicate(const EdgeLengths& e, TetraFamily f);

// Deterministic per seed; instance k draws from its own stream seeded by (seed, k).
// Outputs have scalene faces and, outside the isosceles family, a_i != b_i.
std::vector<EdgeLengths> generate(TetraFamily f, std::uint64_t seed, int count);

// Side triples (opposite A, B, C) of the faces opposite A1..A4, in the order the
// face displays use: (a1,b2,b3), (b1,a2,b3), (b1,b2,a3), (a1,a2,a3).
std::array<std::array<Rational, 3>, 4> face_sides(const EdgeLengths& e);

// Embeds a local areal triple of face i into tetrahedral coordinates.
TetraPoint embed_face_point(int face, const Triple& local);

// Face points P_1..P_4, each with a zero in its own coordinate. Coordinates are
// the unnormalized representatives of the areal center function.
std::array<TetraPoint, 4> face_points(const EdgeLengths& e, const CatalogEntry& entry,
                                      const std::optional<Rational>& r, const EvalContext& ctx);
std::array<TetraPoint, 4> face_points(const EdgeLengths& e, const CenterRef& c, const EvalContext& ctx);

enum class SpaceCenterKind { Centroid, Circumcenter, Incenter, MongePoint, EulerPoint };

std::string to_string(SpaceCenterKind k);
const std::vector<SpaceCenterKind>& all_space_centers();

// Normalized. Incenter needs a non-exact context unless every face area is rational.
TetraPoint space_center(const EdgeLengths& e, SpaceCenterKind k, const EvalContext& ctx = EvalContext::mixed());

// Space centers of the tetrahedron p1..p4. The centroid is the normalized sum of the
// tuples as given; pass normalized points for the geometric centroid.
TetraPoint space_center_of_points(const std::array<TetraPoint, 4>& p, const EdgeMetric& m, SpaceCenterKind k,
                                  const EvalContext& ctx = EvalContext::mixed());

// t with p = o + t (g - o); NotOnLine when p is off the line, EulerLineDegenerate when g = o.
Scalar line_param(const TetraPoint& o, const TetraPoint& g, const TetraPoint& p);
Scalar euler_param(const EdgeLengths& e, const TetraPoint& p);

}  // namespace tc
