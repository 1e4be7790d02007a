#pragma once

#include <utility>
#include <vector>

namespace kfin {

// Fraction-free determinant over an integral domain. The ring type supplies
// copy, +, -, *, is_zero(x), and divide_exact(a, b) for divisions that are
// known to be exact. The matrix is consumed.
template <class T, class IsZero, class DivExact>
T bareiss_determinant(std::vector<std::vector<T>> m, const T& one, const T& zero, IsZero is_zero,
                      DivExact divide_exact) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return zero;
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = divide_exact(num, prev);
      }
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = zero - det;
  return det;
}

}  // namespace kfin
