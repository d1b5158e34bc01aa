#pragma once

#include <vector>

#include "polycal/rat.hpp"

namespace polycal {

/// In-place reduced row echelon form. Returns the pivot column of each
/// pivot row, in order.
std::vector<int> rref(RatMat& M);

int rank(const RatMat& M);

/// Exact basis of {v | Mv = 0}. Vectors are linearly independent and span
/// the kernel; deterministic (one basis vector per free column, in column
/// order, free coordinate set to 1).
std::vector<RatVec> nullspace_basis(const RatMat& M);

/// Solve M x = b exactly. Returns false if inconsistent; otherwise writes
/// one solution (free coordinates set to 0).
bool solve_linear(const RatMat& M, const RatVec& b, RatVec& x);

} // namespace polycal
