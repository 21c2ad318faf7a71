#include "tetracenters/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <functional>

namespace tc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IndeterminateDivision: return "IndeterminateDivision";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::IrrationalInExactMode: return "IrrationalInExactMode";
    case ErrorCode::EvaluationSingular: return "EvaluationSingular";
    case ErrorCode::OnSideline: return "OnSideline";
    case ErrorCode::Undecided: return "Undecided";
    case ErrorCode::IdenticalPoints: return "IdenticalPoints";
    case ErrorCode::DegenerateRatio: return "DegenerateRatio";
    case ErrorCode::SkewLines: return "SkewLines";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::IdenticalLines: return "IdenticalLines";
    case ErrorCode::ImaginarySigma: return "ImaginarySigma";
    case ErrorCode::CollinearPoints: return "CollinearPoints";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::ParallelDirections: return "ParallelDirections";
    case ErrorCode::LineParallelToPlane: return "LineParallelToPlane";
    case ErrorCode::CoplanarPoints: return "CoplanarPoints";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::PointAtInfinity: return "PointAtInfinity";
    case ErrorCode::NotOnLine: return "NotOnLine";
    case ErrorCode::EulerLineDegenerate: return "EulerLineDegenerate";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::DegenerateCevian: return "DegenerateCevian";
    case ErrorCode::DegenerateCevianConfiguration: return "DegenerateCevianConfiguration";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---- Rational ----

Rational::Rational(long n, long d) {
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "not a rational: '" + std::string(text) + "'"); };
  if (s.empty()) throw bad();
  std::size_t slash = s.find('/');
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !t.empty() && t[0] == '-') i = 1;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(mpq_class(n, d));
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) return reciprocal().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::optional<Rational> Rational::exact_root(unsigned long q) const {
  if (q == 0) return std::nullopt;
  if (sign() < 0 && q % 2 == 0) return std::nullopt;
  mpz_class n = ::abs(v_.get_num()), d = v_.get_den(), rn, rd;
  if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), q)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), d.get_mpz_t(), q)) return std::nullopt;
  if (sign() < 0) rn = -rn;
  return Rational(mpq_class(rn, rd));
}

// ---- Interval ----

void Interval::init(int bits) {
  prec_ = std::max(bits, static_cast<int>(MPFR_PREC_MIN));
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

Interval::Interval(int precision_bits) {
  init(precision_bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, int precision_bits) {
  init(precision_bits);
  mpfr_set_q(lo_, q.value().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, q.value().get_mpq_t(), MPFR_RNDU);
}

Interval Interval::hull(const Rational& lo, const Rational& hi, int precision_bits) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "interval bounds out of order");
  Interval r(precision_bits);
  mpfr_set_q(r.lo_, lo.value().get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.value().get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval::Interval(const Interval& o) {
  init(o.prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  init(o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.prec_);
  mpfr_set_prec(hi_, o.prec_);
  prec_ = o.prec_;
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  std::swap(prec_, o.prec_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.value().get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.value().get_mpq_t()) >= 0;
}

int Interval::sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, prec_);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

double Interval::midpoint() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

std::string Interval::str() const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "[%.25RDe, %.25RUe]", lo_, hi_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator+(const Interval& x, const Interval& y) {
  Interval r(std::max(x.prec_, y.prec_));
  mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& x, const Interval& y) {
  Interval r(std::max(x.prec_, y.prec_));
  mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
  return r;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Applies op to the four endpoint combinations and keeps the outward hull.
void endpoint_hull(mpfr_ptr lo, mpfr_ptr hi, mpfr_srcptr xl, mpfr_srcptr xh, mpfr_srcptr yl,
                   mpfr_srcptr yh, BinaryOp op, int prec) {
  mpfr_srcptr xs[2] = {xl, xh};
  mpfr_srcptr ys[2] = {yl, yh};
  mpfr_t t;
  mpfr_init2(t, prec);
  bool first = true;
  for (auto a : xs) {
    for (auto b : ys) {
      op(t, a, b, MPFR_RNDD);
      if (first || mpfr_less_p(t, lo)) mpfr_set(lo, t, MPFR_RNDD);
      op(t, a, b, MPFR_RNDU);
      if (first || mpfr_greater_p(t, hi)) mpfr_set(hi, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
}

}  // namespace

Interval operator*(const Interval& x, const Interval& y) {
  int prec = std::max(x.prec_, y.prec_);
  Interval r(prec);
  endpoint_hull(r.lo_, r.hi_, x.lo_, x.hi_, y.lo_, y.hi_, mpfr_mul, prec);
  return r;
}

Interval operator/(const Interval& x, const Interval& y) {
  if (y.contains_zero()) throw Error(ErrorCode::IndeterminateDivision, "interval divisor contains 0");
  int prec = std::max(x.prec_, y.prec_);
  Interval r(prec);
  endpoint_hull(r.lo_, r.hi_, x.lo_, x.hi_, y.lo_, y.hi_, mpfr_div, prec);
  return r;
}

Interval Interval::sqrt() const {
  if (mpfr_sgn(lo_) < 0) throw Error(ErrorCode::NegativeRadicand, "interval radicand " + str());
  Interval r(prec_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::pow(long e) const {
  if (e < 0) return Interval(Rational(1), prec_) / pow(-e);
  Interval r(prec_);
  if (e == 0) {
    mpfr_set_ui(r.lo_, 1, MPFR_RNDD);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  unsigned long ue = static_cast<unsigned long>(e);
  if (e % 2 == 1 || mpfr_sgn(lo_) >= 0) {
    mpfr_pow_ui(r.lo_, lo_, ue, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, ue, MPFR_RNDU);
  } else if (mpfr_sgn(hi_) <= 0) {
    mpfr_pow_ui(r.lo_, hi_, ue, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, lo_, ue, MPFR_RNDU);
  } else {
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    mpfr_pow_ui(a, lo_, ue, MPFR_RNDU);
    mpfr_pow_ui(b, hi_, ue, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_max(r.hi_, a, b, MPFR_RNDU);
    mpfr_clear(a);
    mpfr_clear(b);
  }
  return r;
}

Interval Interval::pow(const Rational& e) const {
  if (e.is_integer()) return pow(e.value().get_num().get_si());
  if (mpfr_sgn(lo_) <= 0) throw Error(ErrorCode::NegativeRadicand, "fractional power of " + str());
  unsigned long q = e.value().get_den().get_ui();
  long p = e.value().get_num().get_si();
  Interval root(prec_);
  mpfr_rootn_ui(root.lo_, lo_, q, MPFR_RNDD);
  mpfr_rootn_ui(root.hi_, hi_, q, MPFR_RNDU);
  return root.pow(p);
}

// ---- Scalar ----

const Rational& Scalar::rational() const {
  if (!is_rational()) throw Error(ErrorCode::IrrationalInExactMode, "value is an interval");
  return std::get<Rational>(v_);
}

const Interval& Scalar::interval() const { return std::get<Interval>(v_); }

Interval Scalar::to_interval(int bits) const {
  if (is_rational()) return Interval(std::get<Rational>(v_), bits);
  return interval();
}

double Scalar::to_double() const {
  return is_rational() ? rational().to_double() : interval().midpoint();
}

std::string Scalar::str() const { return is_rational() ? rational().str() : interval().str(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-rational());
  return Scalar(-interval());
}

namespace {

template <typename RatOp, typename IvOp>
Scalar combine(const Scalar& x, const Scalar& y, RatOp rop, IvOp iop) {
  if (x.is_rational() && y.is_rational()) return Scalar(rop(x.rational(), y.rational()));
  int prec = std::max(x.precision(), y.precision());
  return Scalar(iop(x.to_interval(prec), y.to_interval(prec)));
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  return combine(x, y, std::plus<Rational>(), [](const Interval& a, const Interval& b) { return a + b; });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return combine(x, y, std::minus<Rational>(), [](const Interval& a, const Interval& b) { return a - b; });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return combine(x, y, std::multiplies<Rational>(), [](const Interval& a, const Interval& b) { return a * b; });
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  return combine(x, y, std::divides<Rational>(), [](const Interval& a, const Interval& b) { return a / b; });
}

Scalar pow(const Scalar& x, long e) {
  if (x.is_rational()) return Scalar(x.rational().pow(e));
  return Scalar(x.interval().pow(e));
}

Scalar sqrt(const Scalar& x, int bits) {
  if (x.is_interval()) return Scalar(x.interval().sqrt());
  const Rational& q = x.rational();
  if (q.sign() < 0) throw Error(ErrorCode::NegativeRadicand, "sqrt of " + q.str());
  if (auto s = q.exact_sqrt()) return Scalar(*s);
  return Scalar(Interval(q, bits).sqrt());
}

ZeroTest is_zero(const Scalar& x) {
  if (x.is_rational()) return x.rational().is_zero() ? ZeroTest::Zero : ZeroTest::NonZero;
  const Interval& i = x.interval();
  if (!i.contains_zero()) return ZeroTest::NonZero;
  if (mpfr_zero_p(i.lo()) && mpfr_zero_p(i.hi())) return ZeroTest::Zero;
  return ZeroTest::Undecided;
}

std::optional<int> sign_of(const Scalar& x) {
  if (x.is_rational()) return x.rational().sign();
  const Interval& i = x.interval();
  if (mpfr_zero_p(i.lo()) && mpfr_zero_p(i.hi())) return 0;
  int s = i.sign();
  if (s == 0) return std::nullopt;
  return s;
}

namespace {

// Sign of u + v*sqrt(a) with a >= 0.
int sign_linear(const Rational& u, const Rational& v, const Rational& a) {
  int su = u.sign();
  int sv = a.is_zero() ? 0 : v.sign();
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  Rational lhs = u * u, rhs = v * v * a;
  if (lhs > rhs) return su;
  if (lhs < rhs) return sv;
  return 0;
}

}  // namespace

std::strong_ordering compare_radical_sums(const Rational& p, const Rational& q, const Rational& r,
                                          const Rational& s) {
  if (p.sign() < 0 || q.sign() < 0 || r.sign() < 0 || s.sign() < 0)
    throw Error(ErrorCode::NegativeRadicand, "compare_radical_sums needs non-negative inputs");
  // Both sides are >= 0, so compare their squares:
  //   d + sqrt(A) - sqrt(B) with d = p+q-r-s, A = 4pq, B = 4rs.
  Rational d = p + q - r - s;
  Rational A = Rational(4) * p * q;
  Rational B = Rational(4) * r * s;
  int result;
  int sx = sign_linear(d, Rational(1), A);  // sign of X = d + sqrt(A)
  if (sx < 0) {
    result = -1;
  } else if (sx == 0) {
    result = B.is_zero() ? 0 : -1;
  } else {
    // X > 0 and sqrt(B) >= 0: compare X^2 = d^2 + A + 2d sqrt(A) with B.
    result = sign_linear(d * d + A - B, Rational(2) * d, A);
  }
  if (result < 0) return std::strong_ordering::less;
  if (result > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Scalar EvalContext::lift(const Rational& q) const {
  if (mode == EvalMode::Numeric) return Scalar(Interval(q, precision_bits));
  return Scalar(q);
}

Scalar EvalContext::root(const Rational& q) const {
  if (q.sign() < 0) throw Error(ErrorCode::NegativeRadicand, "sqrt of " + q.str());
  if (auto s = q.exact_sqrt()) return lift(*s);
  if (mode == EvalMode::Exact)
    throw Error(ErrorCode::IrrationalInExactMode, "sqrt(" + q.str() + ") is irrational");
  return Scalar(Interval(q, precision_bits).sqrt());
}

}  // namespace tc
