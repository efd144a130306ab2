#pragma once

#include <gmpxx.h>

#include <vector>

// Exact linear algebra over the rationals for small dense systems.
namespace qe::linalg {

using Vec = std::vector<mpz_class>;
using Mat = std::vector<Vec>;

int rank(Mat m);

/// Primitive integer basis of {x : m x = 0}; `cols` is the number of
/// columns (needed when m has no rows).
std::vector<Vec> nullspace(const Mat& m, size_t cols);

/// Solve m x = rhs exactly over Q. Returns true and fills x when the system
/// is consistent with a unique solution on the column span; false when
/// inconsistent. m must have full column rank.
bool solve_full_column_rank(const Mat& m, const Vec& rhs, std::vector<mpq_class>& x);

}  // namespace qe::linalg
