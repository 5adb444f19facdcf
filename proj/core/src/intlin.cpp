#include "hwb/intlin.hpp"

#include <stdexcept>

namespace hwb {

namespace {

struct ColumnReduction {
  IntMat W;          // m x n, column-reduced (echelon by rows)
  IntMat U;          // n x n unimodular with W = A U
  std::vector<std::pair<int, int>> pivots; // (row, col)
  int num_pivot_cols = 0;
};

ColumnReduction column_reduce(const IntMat& A) {
  const int m = static_cast<int>(A.size());
  const int n = m == 0 ? 0 : static_cast<int>(A[0].size());
  ColumnReduction R;
  R.W = A;
  R.U.assign(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) R.U[i][i] = 1;

  auto colop = [&](int c1, int c2, const Int& a, const Int& b, const Int& c,
                   const Int& d) {
    // (col c1, col c2) <- (a*c1 + b*c2, c*c1 + d*c2)
    for (int r = 0; r < m; ++r) {
      Int x = R.W[r][c1], y = R.W[r][c2];
      R.W[r][c1] = a * x + b * y;
      R.W[r][c2] = c * x + d * y;
    }
    for (int r = 0; r < n; ++r) {
      Int x = R.U[r][c1], y = R.U[r][c2];
      R.U[r][c1] = a * x + b * y;
      R.U[r][c2] = c * x + d * y;
    }
  };

  int col = 0;
  for (int row = 0; row < m && col < n; ++row) {
    // Clear row entries right of `col` into column `col` by gcd steps.
    int first = -1;
    for (int c = col; c < n; ++c)
      if (R.W[row][c] != 0) { first = c; break; }
    if (first < 0) continue;
    if (first != col) colop(col, first, 0, 1, 1, 0); // swap
    for (int c = col + 1; c < n; ++c) {
      while (R.W[row][c] != 0) {
        Int a = R.W[row][col], b = R.W[row][c];
        Int q = b / a; // truncated division
        // c <- c - q*col
        for (int r = 0; r < m; ++r) R.W[r][c] -= q * R.W[r][col];
        for (int r = 0; r < n; ++r) R.U[r][c] -= q * R.U[r][col];
        if (R.W[row][c] != 0) colop(col, c, 0, 1, 1, 0);
      }
    }
    if (R.W[row][col] < 0) {
      for (int r = 0; r < m; ++r) R.W[r][col] = -R.W[r][col];
      for (int r = 0; r < n; ++r) R.U[r][col] = -R.U[r][col];
    }
    R.pivots.emplace_back(row, col);
    ++col;
  }
  R.num_pivot_cols = col;
  return R;
}

} // namespace

bool int_solve(const IntMat& A, const std::vector<Int>& b) {
  const int m = static_cast<int>(A.size());
  if (m == 0) return true;
  auto R = column_reduce(A);
  std::vector<Int> res = b;
  for (auto [row, col] : R.pivots) {
    if (R.W[row][col] == 0) throw std::logic_error("bad pivot");
    if (res[row] % R.W[row][col] != 0) return false;
    Int t = res[row] / R.W[row][col];
    for (int r = 0; r < m; ++r) res[r] -= t * R.W[r][col];
  }
  for (const auto& v : res)
    if (v != 0) return false;
  return true;
}

IntMat int_kernel_basis(const IntMat& A) {
  const int m = static_cast<int>(A.size());
  const int n = m == 0 ? 0 : static_cast<int>(A[0].size());
  if (m == 0) {
    // Everything is in the kernel.
    IntMat U(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) U[i][i] = 1;
    return U;
  }
  auto R = column_reduce(A);
  const int k = n - R.num_pivot_cols;
  IntMat out(n, std::vector<Int>(k, 0));
  for (int j = 0; j < k; ++j)
    for (int r = 0; r < n; ++r) out[r][j] = R.U[r][R.num_pivot_cols + j];
  return out;
}

int int_rank(IntMat A) {
  if (A.empty()) return 0;
  auto R = column_reduce(A);
  return static_cast<int>(R.pivots.size());
}

} // namespace hwb
