#include "tetracenters/linalg.hpp"

#include <cmath>

namespace tc {

namespace {

bool all_rational(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_rational()) return false;
  return true;
}

Rational bareiss(const Matrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpq_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m[i][j].rational().value().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = m[i][j].rational().value();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
    scale *= l;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  mpq_class d(a[n - 1][n - 1] * sign, 1);
  d /= scale;
  return Rational(d);
}

Scalar cofactor(const Matrix& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Scalar total(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (is_zero(m[0][c]) == ZeroTest::Zero) continue;
    Matrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    Scalar term = m[0][c] * cofactor(minor);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

double magnitude(const Scalar& x) { return std::fabs(x.to_double()); }

}  // namespace

Scalar det(const Matrix& m) {
  if (m.empty()) return Scalar(1);
  if (all_rational(m)) return Scalar(bareiss(m));
  return cofactor(m);
}

std::vector<Scalar> solve(Matrix m, std::vector<Scalar> rhs) {
  std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    bool undecided = false;
    for (std::size_t i = k; i < n; ++i) {
      ZeroTest z = is_zero(m[i][k]);
      if (z == ZeroTest::Undecided) undecided = true;
      if (z != ZeroTest::NonZero) continue;
      if (best == n) {
        best = i;
        if (m[i][k].is_rational()) break;
      } else if (magnitude(m[i][k]) > magnitude(m[best][k])) {
        best = i;
      }
    }
    if (best == n) {
      if (undecided) throw Error(ErrorCode::Undecided, "pivot straddles zero");
      throw Error(ErrorCode::SingularSystem, "linear system is singular");
    }
    std::swap(m[k], m[best]);
    std::swap(rhs[k], rhs[best]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m[i][k]) == ZeroTest::Zero) continue;
      Scalar f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  std::vector<Scalar> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Scalar s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
    x[k] = s / m[k][k];
  }
  return x;
}

std::vector<Scalar> null_vector(const Matrix& rows) {
  std::size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<Scalar> v(n);
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (const auto& r : rows) {
      std::vector<Scalar> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(r[j]);
      minor.push_back(std::move(row));
    }
    Scalar d = det(minor);
    v[c] = (c % 2 == 0) ? d : -d;
  }
  return v;
}

}  // namespace tc
