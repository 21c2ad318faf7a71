#pragma once

#include <vector>

#include "tetracenters/scalar.hpp"

namespace tc {

using Matrix = std::vector<std::vector<Scalar>>;

// Rational matrices use fraction-free elimination on denominator-cleared rows;
// anything containing an interval falls back to cofactor expansion (no division).
Scalar det(const Matrix& m);

// Solves m x = rhs. Pivots must be provably nonzero; a fully zero column throws
// SingularSystem, an undecidable one throws Undecided.
std::vector<Scalar> solve(Matrix m, std::vector<Scalar> rhs);

// For an (n-1) x n matrix, the vector of signed maximal minors; it spans the
// null space whenever the rows are independent.
std::vector<Scalar> null_vector(const Matrix& rows);

}  // namespace tc
