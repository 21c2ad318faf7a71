#include "doctest.h"

#include <cmath>

#include "tetracenters/linalg.hpp"
#include "tetracenters/scalar.hpp"
#include "test_support.hpp"

using namespace tc;
using tc::testing::random_positive;
using tc::testing::random_rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK((Rational(2) * Rational(0)).is_zero());
  Rational q(6, -4);
  CHECK(q.str() == "-3/2");
  CHECK(q.value().get_den() == 2);
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational field laws on random values") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    Rational x = random_rational(rng), y = random_rational(rng);
    CHECK((x + y) - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
  }
}

TEST_CASE("exact roots") {
  CHECK(*Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK(!Rational(2).exact_sqrt());
  CHECK(*Rational(-8, 27).exact_root(3) == Rational(-2, 3));
}

TEST_CASE("interval product encloses the square") {
  Scalar x(Interval::hull(Rational(141, 100), Rational(142, 100), 64));
  CHECK((x * x).interval().contains(Rational(2)));
  Scalar sq = sqrt(Scalar(Rational(2)), 64);
  CHECK((sq * sq).interval().contains(Rational(2)));
}

TEST_CASE("sqrt") {
  CHECK(sqrt(Scalar(Rational(9, 4))).rational() == Rational(3, 2));
  CHECK(sqrt(Scalar(Rational(0))).rational().is_zero());
  Scalar r2 = sqrt(Scalar(Rational(2)), 128);
  REQUIRE(r2.is_interval());
  CHECK(r2.width() < std::ldexp(1.0, -100));
  CHECK(std::fabs(r2.to_double() - 1.4142135623730951) < 1e-15);
  // Newton oracle: the enclosure squared contains 2.
  CHECK((r2 * r2).interval().contains(Rational(2)));
  CHECK_THROWS_AS(sqrt(Scalar(Rational(-1))), Error);
}

TEST_CASE("sqrt squared recovers the input") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    Rational x = random_positive(rng);
    Scalar s = sqrt(Scalar(x));
    Scalar sq = s * s;
    if (s.is_rational()) CHECK(sq.rational() == x);
    else CHECK(sq.interval().contains(x));
    Rational y = x * x;
    CHECK(sqrt(Scalar(y)).rational() == x);
  }
}

TEST_CASE("zero tests") {
  CHECK(is_zero(Scalar(Rational(0))) == ZeroTest::Zero);
  CHECK(is_zero(Scalar(Rational(1).pow(1) / Rational(10).pow(50))) == ZeroTest::NonZero);
  Interval tiny = Interval(Rational(-1) / Rational(10).pow(80), 256);
  Interval straddle = tiny - tiny;  // [-2e-80, 2e-80]
  CHECK(is_zero(Scalar(straddle)) == ZeroTest::Undecided);
  CHECK(is_zero(Scalar(Interval(Rational(1, 3), 64))) == ZeroTest::NonZero);
}

TEST_CASE("division rules") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
  Interval z = Interval(Rational(1, 3), 64) - Interval(Rational(1, 3), 64);
  try {
    (void)(Scalar(1) / Scalar(z));
    FAIL("expected IndeterminateDivision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndeterminateDivision);
  }
}

TEST_CASE("interval soundness on composite expressions") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    Rational x = random_rational(rng), y = random_rational(rng), z = random_positive(rng);
    Rational exact = (x * y - z) / (z + Rational(1)) + x * x * z - y / z;
    Scalar ix(Interval(x, 64)), iy(Interval(y, 64)), iz(Interval(z, 64));
    Scalar approx = (ix * iy - iz) / (iz + Scalar(1)) + ix * ix * iz - iy / iz;
    CHECK(approx.interval().contains(exact));
    // mixed mode promotes the rational operand
    Scalar mixed = Scalar(x) * iy + Scalar(z);
    CHECK(mixed.interval().contains(x * y + z));
  }
}

TEST_CASE("interval powers") {
  Interval x = Interval(Rational(-3, 2), 64) + Interval(Rational(1), 64) * Interval(Rational(0), 64);
  CHECK(Scalar(x.pow(2)).interval().contains(Rational(9, 4)));
  CHECK(Scalar(x.pow(3)).interval().contains(Rational(-27, 8)));
  Interval p = Interval(Rational(8), 64).pow(Rational(2, 3));
  CHECK(p.contains(Rational(4)));
  CHECK(Interval(Rational(4), 64).pow(Rational(-1, 2)).contains(Rational(1, 2)));
}

TEST_CASE("compare_radical_sums examples") {
  CHECK(compare_radical_sums(Rational(4), Rational(9), Rational(1), Rational(16)) == std::strong_ordering::equal);
  CHECK(compare_radical_sums(Rational(2), Rational(8), Rational(9), Rational(9)) == std::strong_ordering::less);
  CHECK(compare_radical_sums(Rational(2), Rational(3), Rational(2), Rational(3)) == std::strong_ordering::equal);
  CHECK(compare_radical_sums(Rational(2), Rational(8), Rational(18), Rational(0)) == std::strong_ordering::equal);
  CHECK(compare_radical_sums(Rational(0), Rational(0), Rational(0), Rational(0)) == std::strong_ordering::equal);
}

TEST_CASE("compare_radical_sums agrees with 256-bit intervals") {
  std::mt19937_64 rng(4);
  int decisive = 0;
  for (int i = 0; i < 1000; ++i) {
    Rational p = random_positive(rng, 50, 5), q = random_positive(rng, 50, 5);
    Rational r = random_positive(rng, 50, 5), s = random_positive(rng, 50, 5);
    if (i % 3 == 0) {  // force near-ties built from squares
      Rational u = random_positive(rng, 9, 3);
      p = u * u * Rational(2);
      q = u * u * Rational(8);
      r = u * u * Rational(18);
      s = Rational(0);
    }
    Scalar lhs = sqrt(Scalar(p), 256) + sqrt(Scalar(q), 256);
    Scalar rhs = sqrt(Scalar(r), 256) + sqrt(Scalar(s), 256);
    Scalar diff = lhs - rhs;
    auto ord = compare_radical_sums(p, q, r, s);
    auto sg = sign_of(diff);
    if (sg) {
      ++decisive;
      int expect = ord < 0 ? -1 : (ord > 0 ? 1 : 0);
      CHECK(*sg == expect);
    } else {
      CHECK(ord == std::strong_ordering::equal);
    }
  }
  CHECK(decisive > 500);
}

TEST_CASE("determinants and solves") {
  Matrix m = {{Scalar(2), Scalar(1), Scalar(0)}, {Scalar(1), Scalar(3), Scalar(1)}, {Scalar(0), Scalar(1), Scalar(4)}};
  CHECK(det(m).rational() == Rational(18));
  Matrix q = {{Scalar(Rational(1, 2)), Scalar(Rational(1, 3))}, {Scalar(Rational(1, 5)), Scalar(Rational(1, 7))}};
  CHECK(det(q).rational() == Rational(1, 14) - Rational(1, 15));
  Matrix z = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  CHECK(det(z).rational() == Rational(-1));
  auto x = solve(m, {Scalar(1), Scalar(2), Scalar(3)});
  CHECK((Scalar(2) * x[0] + x[1]).rational() == Rational(1));
  CHECK((x[0] + Scalar(3) * x[1] + x[2]).rational() == Rational(2));
  CHECK((x[1] + Scalar(4) * x[2]).rational() == Rational(3));
  Matrix sing = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK_THROWS_AS(solve(sing, {Scalar(1), Scalar(1)}), Error);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    Matrix a(4, std::vector<Scalar>(4));
    Matrix ai(4, std::vector<Scalar>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rational v = random_rational(rng, 20, 5);
        a[i][j] = Scalar(v);
        ai[i][j] = Scalar(Interval(v, 128));
      }
    Scalar d = det(a);
    CHECK(det(ai).interval().contains(d.rational()));
  }
}

TEST_CASE("null vector spans the kernel") {
  Matrix rows = {{Scalar(1), Scalar(2), Scalar(3), Scalar(4)},
                 {Scalar(0), Scalar(1), Scalar(-1), Scalar(2)},
                 {Scalar(1), Scalar(1), Scalar(1), Scalar(1)}};
  auto v = null_vector(rows);
  for (const auto& r : rows) {
    Scalar s(0);
    for (int j = 0; j < 4; ++j) s += r[j] * v[j];
    CHECK(s.rational().is_zero());
  }
}

TEST_CASE("eval context") {
  CHECK(EvalContext::exact().root(Rational(16, 9)).rational() == Rational(4, 3));
  CHECK_THROWS_AS(EvalContext::exact().root(Rational(2)), Error);
  CHECK(EvalContext::mixed().root(Rational(2)).is_interval());
  CHECK(EvalContext::numeric().lift(Rational(1, 3)).is_interval());
}
