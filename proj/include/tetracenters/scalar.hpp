#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>
#include <mpfr.h>

#include "tetracenters/error.hpp"

namespace tc {

// Exact rational, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}
  Rational(long n, long d);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  // Accepts "n", "-n", "n/d".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const;
  Rational pow(long e) const;
  // Exact q-th root when one exists in Q.
  std::optional<Rational> exact_root(unsigned long q) const;
  std::optional<Rational> exact_sqrt() const { return exact_root(2); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  friend bool operator==(const Rational& x, const Rational& y) { return x.v_ == y.v_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.v_, y.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

// Closed interval [lo, hi] with outward rounding on every operation.
class Interval {
 public:
  explicit Interval(int precision_bits = 128);
  Interval(const Rational& q, int precision_bits);
  // Smallest enclosure of [lo, hi].
  static Interval hull(const Rational& lo, const Rational& hi, int precision_bits);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  int precision() const { return prec_; }
  bool contains_zero() const;
  bool contains(const Rational& q) const;
  int sign() const;  // -1 or +1 when decided, 0 when the interval contains 0
  // hi - lo rounded up, as a double (0 for a point interval).
  double width() const;
  double midpoint() const;
  std::string str() const;
  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }

  Interval operator-() const;
  friend Interval operator+(const Interval& x, const Interval& y);
  friend Interval operator-(const Interval& x, const Interval& y);
  friend Interval operator*(const Interval& x, const Interval& y);
  friend Interval operator/(const Interval& x, const Interval& y);

  Interval sqrt() const;
  Interval pow(long e) const;
  // x^(p/q) for x > 0.
  Interval pow(const Rational& e) const;

 private:
  void init(int bits);
  mpfr_t lo_;
  mpfr_t hi_;
  int prec_ = 0;
};

enum class ZeroTest { Zero, NonZero, Undecided };

class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(Rational q) : v_(std::move(q)) {}
  Scalar(Interval i) : v_(std::move(i)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_interval() const { return !is_rational(); }
  const Rational& rational() const;
  const Interval& interval() const;
  // Interval enclosure at the given precision (exact rationals are rounded outward).
  Interval to_interval(int bits) const;
  int precision() const { return is_rational() ? 0 : interval().precision(); }
  double width() const { return is_rational() ? 0.0 : interval().width(); }
  double to_double() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

 private:
  std::variant<Rational, Interval> v_;
};

Scalar pow(const Scalar& x, long e);

// Rational result iff x is the square of a rational, otherwise an enclosure at `bits`.
Scalar sqrt(const Scalar& x, int bits = 128);

ZeroTest is_zero(const Scalar& x);
// Sign when decided; nullopt when an interval straddles zero.
std::optional<int> sign_of(const Scalar& x);

// Exact ordering of sqrt(p)+sqrt(q) against sqrt(r)+sqrt(s).
std::strong_ordering compare_radical_sums(const Rational& p, const Rational& q,
                                          const Rational& r, const Rational& s);

// How a computation treats values that are not rational.
//   Exact:   radicals are an error (IrrationalInExactMode)
//   Mixed:   rationals stay exact, radicals become intervals
//   Numeric: every leaf is promoted to an interval (cheap prefilter)
enum class EvalMode { Exact, Mixed, Numeric };

inline constexpr int kDefaultPrecisionCap = 1024;
inline constexpr int kPrefilterBits = 64;
inline constexpr int kRadicalBits = 128;

struct EvalContext {
  EvalMode mode = EvalMode::Exact;
  int precision_bits = kRadicalBits;

  static EvalContext exact() { return {EvalMode::Exact, kRadicalBits}; }
  static EvalContext mixed(int bits = kRadicalBits) { return {EvalMode::Mixed, bits}; }
  static EvalContext numeric(int bits = kPrefilterBits) { return {EvalMode::Numeric, bits}; }

  Scalar lift(const Rational& q) const;
  Scalar root(const Rational& q) const;
};

}  // namespace tc
