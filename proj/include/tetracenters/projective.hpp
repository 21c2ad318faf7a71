#pragma once

#include <array>
#include <string>
#include <vector>

#include "tetracenters/scalar.hpp"

namespace tc {

// Zero if every entry is zero, NonZero if some entry provably is not, else Undecided.
inline ZeroTest all_zero(const std::vector<Scalar>& xs) {
  bool undecided = false;
  for (const auto& x : xs) {
    ZeroTest z = is_zero(x);
    if (z == ZeroTest::NonZero) return ZeroTest::NonZero;
    if (z == ZeroTest::Undecided) undecided = true;
  }
  return undecided ? ZeroTest::Undecided : ZeroTest::Zero;
}

inline bool decide(ZeroTest z, const std::string& what) {
  if (z == ZeroTest::Undecided) throw Error(ErrorCode::Undecided, what);
  return z == ZeroTest::Zero;
}

// All 2x2 cross products p_i q_j - p_j q_i; they vanish iff p and q are proportional.
template <std::size_t N>
std::vector<Scalar> cross_residuals(const std::array<Scalar, N>& p, const std::array<Scalar, N>& q) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) out.push_back(p[i] * q[j] - p[j] * q[i]);
  return out;
}

template <std::size_t N>
bool projectively_equal(const std::array<Scalar, N>& p, const std::array<Scalar, N>& q) {
  return decide(all_zero(cross_residuals(p, q)), "projective comparison");
}

template <std::size_t N>
bool is_zero_tuple(const std::array<Scalar, N>& p) {
  std::vector<Scalar> v(p.begin(), p.end());
  return decide(all_zero(v), "zero-tuple test");
}

}  // namespace tc
