#pragma once
// Exact integer linear algebra (Hermite/Smith-style column reduction) used for
// subgroup-membership and torsion decisions in the character model.

#include <vector>

#include "hwb/rational.hpp"

namespace hwb {

using IntMat = std::vector<std::vector<Int>>; // row-major

// Does A x = b have an integer solution x?  A is m x n (rows x cols).
bool int_solve(const IntMat& A, const std::vector<Int>& b);

// Basis (as columns, returned row-major n x k) of {x in Z^n : A x = 0}.
IntMat int_kernel_basis(const IntMat& A);

// Rank of an integer matrix (over Q).
int int_rank(IntMat A);

} // namespace hwb
