#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "tetracenters/triangle.hpp"

namespace tc {

// u + v*K where K is the triangle area (K^2 rational). Center functions are
// evaluated in this field so that even powers of K and divisions by
// y + zK stay exact.
struct Surd {
  Rational u;
  Rational v;
  bool is_rational() const { return v.is_zero(); }
};

enum class CoordForm { Trilinear, Areal };
const char* to_string(CoordForm f);

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Affine degree c0 + c1*r (r is the family parameter).
struct Degree {
  Rational c0;
  Rational c1;
  Rational at(const Rational& r) const { return c0 + c1 * r; }
};

struct ExprNode {
  enum class Kind { Const, SymA, SymB, SymC, SymK, SymR, Neg, Add, Sub, Mul, Div, PowInt, PowR };
  Kind kind;
  Rational value;      // Const
  long exponent = 0;   // PowInt
  int r_sign = 1;      // PowR: base^(r_sign * r)
  ExprPtr lhs, rhs;
};

class CenterExpr {
 public:
  CenterExpr() = default;

  // Parses and validates homogeneity (C1) and b<->c symmetry (C2).
  static CenterExpr parse(const std::string& text);
  // Parses without the semantic checks (used for composition and tests).
  static CenterExpr parse_unchecked(const std::string& text);
  static CenterExpr from_node(ExprPtr node);

  // Runs the C1/C2 checks on random triangles; throws NotHomogeneous/NotSymmetric.
  void validate() const;

  const std::string& text() const { return text_; }
  const ExprPtr& root() const { return root_; }
  bool uses_r() const { return uses_r_; }
  bool uses_k() const { return uses_k_; }
  // K only in even powers, so exact evaluation never needs sqrt(K^2).
  bool rational_only() const { return !needs_k_; }
  Degree degree() const { return degree_; }

  // Value at sides (a, b, c). Exact when possible; otherwise a Scalar per ctx.
  Scalar evaluate(const Rational& a, const Rational& b, const Rational& c,
                  const std::optional<Rational>& r, const EvalContext& ctx) const;
  // The same, but stays in Q(K); returns nullopt when a non-integral power of a
  // K-dependent value forces leaving the field.
  std::optional<Surd> evaluate_surd(const Rational& a, const Rational& b, const Rational& c,
                                    const std::optional<Rational>& r) const;

 private:
  void analyse();

  ExprPtr root_;
  std::string text_;
  bool uses_r_ = false;
  bool uses_k_ = false;
  bool needs_k_ = false;
  Degree degree_;
};

// Composition helpers for derived centers (conjugates, powers, a^r F^q).
ExprPtr expr_const(const Rational& q);
ExprPtr expr_symbol(ExprNode::Kind k);
ExprPtr expr_binary(ExprNode::Kind k, ExprPtr l, ExprPtr r);
ExprPtr expr_pow(ExprPtr base, long e);
std::string expr_to_string(const ExprPtr& e);

struct CenterCoords {
  CoordForm form;
  Triple c;
};

// Coordinates (f(a,b,c), f(b,c,a), f(c,a,b)) in the given form.
CenterCoords eval_center(const CenterExpr& expr, CoordForm form, const TriangleSides& s,
                         const std::optional<Rational>& r, const EvalContext& ctx);

}  // namespace tc
