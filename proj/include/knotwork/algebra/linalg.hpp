#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "knotwork/algebra/numeric.hpp"

namespace knotwork {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Determinant by Bareiss fraction-free elimination.
inline Integer determinant(IntegerMatrix m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace knotwork
