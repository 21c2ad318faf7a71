#include "doctest.h"

#include "tetracenters/catalog.hpp"
#include "tetracenters/center_expr.hpp"
#include "tetracenters/triangle.hpp"
#include "test_support.hpp"

using namespace tc;

namespace {

TriangleSides random_triangle(std::mt19937_64& rng) {
  for (;;) {
    Rational a = testing::random_positive(rng, 60, 7), b = testing::random_positive(rng, 60, 7),
             c = testing::random_positive(rng, 60, 7);
    if (TriangleSides::is_valid(a, b, c) && a != b && b != c && a != c) return TriangleSides(a, b, c);
  }
}

Triple rationals(long x, long y, long z) { return {Scalar(x), Scalar(y), Scalar(z)}; }

Areal areal_of(const CatalogEntry& e, const TriangleSides& s, std::optional<Rational> r = std::nullopt) {
  return Areal{eval_center(e.areal(), CoordForm::Areal, s, r, EvalContext::exact()).c};
}

}  // namespace

TEST_CASE("triangle sides reject degenerate input") {
  CHECK_NOTHROW(TriangleSides(Rational(3), Rational(4), Rational(5)));
  CHECK_THROWS_AS(TriangleSides(Rational(1), Rational(2), Rational(3)), Error);
  CHECK_THROWS_AS(TriangleSides(Rational(0), Rational(2), Rational(2)), Error);
  CHECK(TriangleSides(Rational(3), Rational(4), Rational(5)).area_squared() == Rational(36));
}

TEST_CASE("coordinate conversions") {
  TriangleSides s(Rational(3), Rational(4), Rational(5));
  Areal inc = trilinear_to_areal(Trilinear{rationals(1, 1, 1)}, s);
  CHECK(projectively_equal(inc, Areal{rationals(3, 4, 5)}));
  Trilinear cen{{Scalar(Rational(1, 3)), Scalar(Rational(1, 4)), Scalar(Rational(1, 5))}};
  CHECK(projectively_equal(trilinear_to_areal(cen, s), Areal{rationals(1, 1, 1)}));
  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) {
    TriangleSides t = random_triangle(rng);
    Areal p{{Scalar(testing::random_rational(rng)), Scalar(testing::random_rational(rng)),
             Scalar(testing::random_positive(rng))}};
    CHECK(projectively_equal(trilinear_to_areal(areal_to_trilinear(p, t), t), p));
  }
}

TEST_CASE("isotomic conjugate") {
  CHECK(projectively_equal(isotomic_conjugate(Areal{rationals(1, 1, 1)}), Areal{rationals(1, 1, 1)}));
  CHECK(projectively_equal(isotomic_conjugate(Areal{rationals(3, 2, 1)}), Areal{rationals(2, 3, 6)}));
  Areal p{rationals(5, -2, 7)};
  CHECK(projectively_equal(isotomic_conjugate(isotomic_conjugate(p)), p));
  CHECK_THROWS_AS(isotomic_conjugate(Areal{rationals(0, 1, 1)}), Error);
}

TEST_CASE("isogonal conjugate matches trilinear reciprocation") {
  TriangleSides s(Rational(3), Rational(4), Rational(5));
  Areal inc{rationals(3, 4, 5)};
  CHECK(projectively_equal(isogonal_conjugate(inc, s), inc));
  // The centroid maps to the symmedian point (a^2, b^2, c^2).
  CHECK(projectively_equal(isogonal_conjugate(Areal{rationals(1, 1, 1)}, s), Areal{rationals(9, 16, 25)}));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    TriangleSides t = random_triangle(rng);
    Areal p{{Scalar(testing::random_positive(rng)), Scalar(testing::random_positive(rng)),
             Scalar(-testing::random_positive(rng))}};
    Trilinear tri = areal_to_trilinear(p, t);
    Trilinear recip{{Scalar(1) / tri.c[0], Scalar(1) / tri.c[1], Scalar(1) / tri.c[2]}};
    CHECK(projectively_equal(isogonal_conjugate(p, t), trilinear_to_areal(recip, t)));
    CHECK(projectively_equal(isogonal_conjugate(isogonal_conjugate(p, t), t), p));
  }
}

TEST_CASE("expression parsing") {
  CenterExpr e = CenterExpr::parse("b + c - a");
  CHECK(e.degree().c0 == Rational(1));
  CHECK(!e.uses_r());
  CenterExpr z = CenterExpr::parse("a^r*(b+c)");
  CHECK(z.uses_r());
  CHECK(z.degree().c0 == Rational(1));
  CHECK(z.degree().c1 == Rational(1));
  CHECK_NOTHROW(CenterExpr::parse("a(b+c-2a)"));
  CHECK_NOTHROW(CenterExpr::parse("3/4 * a^-2 + b^(-1)*c^(-1)"));
  CHECK_NOTHROW(CenterExpr::parse("a^2 + K"));
  CHECK_NOTHROW(CenterExpr::parse("b^2+c^2−a^2"));  // Unicode minus
  try {
    CenterExpr::parse("b + a");
    FAIL("expected NotSymmetric");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotSymmetric);
  }
  try {
    CenterExpr::parse("a + b^2 + c^2");
    FAIL("expected NotHomogeneous");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotHomogeneous);
  }
  try {
    CenterExpr::parse("a + * b");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& err) {
    CHECK(err.position() == 4);
  }
  CHECK_THROWS_AS(CenterExpr::parse("a^b"), SyntaxError);
  CHECK_THROWS_AS(CenterExpr::parse("(a+b"), SyntaxError);
  CHECK_THROWS_AS(CenterExpr::parse("x"), SyntaxError);
  CHECK_THROWS_AS(CenterExpr::parse(""), SyntaxError);
}

TEST_CASE("center evaluation on the 3-4-5 triangle") {
  TriangleSides s(Rational(3), Rational(4), Rational(5));
  auto inc = eval_center(CenterExpr::parse("1"), CoordForm::Trilinear, s, std::nullopt, EvalContext::exact());
  CHECK(projectively_equal(inc.c, rationals(1, 1, 1)));
  auto nag = eval_center(CenterExpr::parse("b+c-a"), CoordForm::Areal, s, std::nullopt, EvalContext::exact());
  CHECK(nag.c[0].rational() == Rational(6));
  CHECK(nag.c[1].rational() == Rational(4));
  CHECK(nag.c[2].rational() == Rational(2));
  auto circ = eval_center(CenterExpr::parse("a^2*(b^2+c^2-a^2)"), CoordForm::Areal, s, std::nullopt,
                          EvalContext::exact());
  CHECK(circ.c[0].rational() == Rational(288));
  CHECK(circ.c[1].rational() == Rational(288));
  CHECK(circ.c[2].rational() == Rational(0));
  // Cartesian oracle: A=(0,0)... with C the right angle, circumcenter is the midpoint of AB.
  // Vertices A=(4,0), B=(0,3), C=(0,0): midpoint (2, 3/2) has areal (1/2, 1/2, 0).
  CHECK(projectively_equal(circ.c, rationals(1, 1, 0)));
}

TEST_CASE("K handling") {
  TriangleSides s(Rational(3), Rational(4), Rational(5));  // K = 6
  CenterExpr k2 = CenterExpr::parse("K^2/a^2");
  CHECK(k2.rational_only());
  CHECK(k2.evaluate(Rational(3), Rational(4), Rational(5), std::nullopt, EvalContext::exact()).rational() == Rational(4));
  CenterExpr k1 = CenterExpr::parse("a^2 + K");
  CHECK(!k1.rational_only());
  // K rational on 3-4-5, so even exact mode succeeds
  CHECK(k1.evaluate(Rational(3), Rational(4), Rational(5), std::nullopt, EvalContext::exact()).rational() == Rational(15));
  // (2,3,4): K^2 = 135/16 is not a square
  CHECK_THROWS_AS(k1.evaluate(Rational(2), Rational(3), Rational(4), std::nullopt, EvalContext::exact()), Error);
  Scalar v = k1.evaluate(Rational(2), Rational(3), Rational(4), std::nullopt, EvalContext::mixed());
  REQUIRE(v.is_interval());
  CHECK(std::fabs(v.to_double() - (4 + std::sqrt(135.0) / 4)) < 1e-12);
  // 1/(a^2 + K) is rationalised exactly: (a^2 - K)/(a^4 - K^2)
  auto sd = CenterExpr::parse("a^2/(a^2+K)").evaluate_surd(Rational(2), Rational(3), Rational(4), std::nullopt);
  REQUIRE(sd);
  Rational k2v = heron_area_squared(Rational(2), Rational(3), Rational(4));
  Rational n = Rational(16) - k2v;
  CHECK(sd->u == Rational(16) / n);
  CHECK(sd->v == Rational(-4) / n);
  // y^2 - z^2 K^2 = 0: choose y = K exactly on 3-4-5 (K = 6)
  try {
    CenterExpr::parse_unchecked("1/(K - 6*a^2/9)").evaluate_surd(Rational(3), Rational(4), Rational(5), std::nullopt);
    FAIL("expected EvaluationSingular");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::EvaluationSingular);
  }
}

TEST_CASE("fractional r uses intervals outside exact mode") {
  CenterExpr e = CenterExpr::parse("a^r");
  Scalar v = e.evaluate(Rational(2), Rational(3), Rational(4), Rational(1, 2), EvalContext::mixed());
  CHECK(v.is_interval());
  CHECK(std::fabs(v.to_double() - std::sqrt(2.0)) < 1e-15);
  CHECK(e.evaluate(Rational(4), Rational(3), Rational(4), Rational(1, 2), EvalContext::exact()).rational() == Rational(2));
  CHECK_THROWS_AS(e.evaluate(Rational(2), Rational(3), Rational(4), Rational(1, 2), EvalContext::exact()), Error);
}

TEST_CASE("builtin catalog") {
  Catalog cat = builtin_catalog();
  for (const char* id : {"X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8", "X9", "X10", "X11", "X20", "X25", "X37",
                         "X38", "X39", "X40", "X41", "X42", "X43", "X44", "X48", "X53", "X57", "X63", "X69", "X76",
                         "POW", "Z8A", "CONC1", "CONC2", "CONC3", "HYP1", "HYP2", "HYP3"})
    CHECK(cat.find(id) != nullptr);
  for (int i = 1; i <= 14; ++i) CHECK(cat.find("Y" + std::to_string(i)) != nullptr);
  for (int i = 1; i <= 11; ++i) CHECK(cat.find("Z" + std::to_string(i)) != nullptr);
  CHECK(cat.at("Y9").form == CoordForm::Trilinear);
  CHECK(cat.at("Y9").expr.text() == "a*(b+c-2*a)");
  CHECK(cat.at("X43").expr.text() == "1/b+1/c-1/a");
  CHECK(cat.at("X102N").expr.text() == "a*(1/b+1/c-1/a)");
  CHECK(cat.at("X117N").expr.text() == "(1/b+1/c-1/a)/a");
  for (const auto& e : cat.entries()) {
    CHECK(e.rational_only);
    CHECK_NOTHROW(e.expr.validate());
  }
  CHECK_THROWS_AS(cat.at("X999"), Error);
}

TEST_CASE("catalog invariants on random triangles") {
  Catalog cat = builtin_catalog();
  std::mt19937_64 rng(12);
  const auto& pow = cat.at("POW");
  for (int i = 0; i < 20; ++i) {
    TriangleSides s = random_triangle(rng);
    CHECK(projectively_equal(areal_of(pow, s, Rational(0)), areal_of(cat.at("X1"), s)));
    CHECK(projectively_equal(areal_of(pow, s, Rational(-1)), areal_of(cat.at("X2"), s)));
    CHECK(projectively_equal(areal_of(pow, s, Rational(1)), areal_of(cat.at("X6"), s)));
    CHECK(projectively_equal(isotomic_conjugate(areal_of(cat.at("X7"), s)), areal_of(cat.at("X8"), s)));
    CHECK(projectively_equal(isotomic_conjugate(areal_of(cat.at("X4"), s)), areal_of(cat.at("X69"), s)));
    CHECK(projectively_equal(isogonal_conjugate(areal_of(cat.at("X4"), s), s), areal_of(cat.at("X3"), s)));
    CHECK(projectively_equal(areal_of(isotomic_of(cat.at("X7")), s), areal_of(cat.at("X8"), s)));
    CHECK(projectively_equal(areal_of(isogonal_of(cat.at("X2")), s), areal_of(cat.at("X6"), s)));
  }
}

TEST_CASE("homogeneity and b-c symmetry of every entry") {
  Catalog cat = builtin_catalog();
  std::mt19937_64 rng(13);
  for (const auto& e : cat.entries()) {
    std::optional<Rational> r;
    if (e.takes_r) r = Rational(2);
    for (int i = 0; i < 3; ++i) {
      TriangleSides s = random_triangle(rng);
      Rational t = testing::random_positive(rng, 20, 9);
      TriangleSides st(t * s.a(), t * s.b(), t * s.c());
      TriangleSides sw(s.a(), s.c(), s.b());
      try {
        Areal p = areal_of(e, s, r);
        CHECK(projectively_equal(p, areal_of(e, st, r)));
        Areal q = areal_of(e, sw, r);
        CHECK(projectively_equal(p.c, Triple{q.c[0], q.c[2], q.c[1]}));
      } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::EvaluationSingular);
      }
    }
  }
}

TEST_CASE("catalog file import") {
  Catalog c = parse_catalog_text(
      "# user centers\n"
      "X7 | areal | 1/(b+c-a) | no\n"
      "\n"
      "U1 | trilinear | a^r*(b^2+c^2) | yes  # comment\n"
      "U2 | areal | a^2 + K | no\n");
  CHECK(c.size() == 3);
  CHECK(c.at("U1").takes_r);
  CHECK(!c.at("U2").rational_only);
  CHECK(parse_catalog_text("").empty());
  try {
    parse_catalog_text("BAD | areal | b+a | no\n");
    FAIL("expected ValidationError");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ValidationError);
  }
  CHECK_THROWS_AS(parse_catalog_text("A | areal | 1 | no\nA | areal | a | no\n"), Error);
  CHECK_THROWS_AS(parse_catalog_text("A | planar | 1 | no\n"), SyntaxError);
  CHECK_THROWS_AS(parse_catalog_text("A | areal | a^r | no\n"), Error);
}

TEST_CASE("center references") {
  Catalog cat = builtin_catalog();
  CHECK(resolve_center(cat, "X7").label() == "X7");
  CenterRef p = resolve_center(cat, "POW@-1/2");
  CHECK(*p.r == Rational(-1, 2));
  CHECK(p.label() == "POW@-1/2");
  CHECK_THROWS_AS(resolve_center(cat, "POW"), Error);
  CHECK_THROWS_AS(resolve_center(cat, "X7@2"), Error);
  CHECK_THROWS_AS(resolve_center(cat, "nope"), Error);
}
