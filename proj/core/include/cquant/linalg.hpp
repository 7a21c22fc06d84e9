#pragma once

// Small exact linear-algebra kernels shared by the cone checks and the
// polyhedral code.

#include <cstddef>
#include <vector>

#include "cquant/rational.hpp"

namespace cquant::linalg {

/// Rank by exact Gaussian elimination.
std::size_t rank(Matrix rows);

/// Reduced row echelon form with zero rows removed; pivot entries are 1.
Matrix rref(Matrix rows);

/// Scale so the vector consists of coprime integers (zero stays zero).
Vector primitive(const Vector& v);

/// Scale so the first nonzero entry has absolute value 1.
Vector normalize_first(const Vector& v);

bool is_zero(const Vector& v);

}  // namespace cquant::linalg
