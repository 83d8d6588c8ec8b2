#include "polyprobe/linear.hpp"

#include <algorithm>
#include <cassert>

namespace polyprobe {

LinearSystemSolution solve_linear(RatMatrix matrix, std::vector<Rational> rhs) {
  const size_t rows = matrix.size();
  assert(rows == rhs.size());
  assert(rows >= 1);
  const size_t cols = matrix[0].size();
  for (const auto& row : matrix) assert(row.size() == cols);

  std::vector<int> pivot_col_of_row;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t found = pivot_row;
    while (found < rows && matrix[found][col] == 0) ++found;
    if (found == rows) continue;
    std::swap(matrix[found], matrix[pivot_row]);
    std::swap(rhs[found], rhs[pivot_row]);

    const Rational inv = matrix[pivot_row][col];
    for (size_t c = col; c < cols; ++c) matrix[pivot_row][c] /= inv;
    rhs[pivot_row] /= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || matrix[r][col] == 0) continue;
      const Rational factor = matrix[r][col];
      for (size_t c = col; c < cols; ++c) matrix[r][c] -= factor * matrix[pivot_row][c];
      rhs[r] -= factor * rhs[pivot_row];
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++pivot_row;
  }

  for (size_t r = pivot_row; r < rows; ++r) {
    if (rhs[r] != 0) return {};  // 0 == nonzero: infeasible
  }

  LinearSystemSolution out;
  out.feasible = true;
  out.particular.assign(cols, Rational(0));
  for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
    out.particular[static_cast<size_t>(pivot_col_of_row[r])] = rhs[r];
  }

  std::vector<bool> is_pivot(cols, false);
  for (int col : pivot_col_of_row) is_pivot[static_cast<size_t>(col)] = true;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rational> basis(cols, Rational(0));
    basis[free_col] = 1;
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      basis[static_cast<size_t>(pivot_col_of_row[r])] = -matrix[r][free_col];
    }
    out.nullspace.push_back(std::move(basis));
  }
  return out;
}

}  // namespace polyprobe
