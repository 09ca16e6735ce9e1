#include "ader/linalg.hpp"

namespace ader {

std::optional<DenseMatrix> invert(const DenseMatrix& a) {
  assert(a.rows == a.cols);
  const int n = a.rows;
  DenseMatrix m = a;
  DenseMatrix inv(n, n);
  for (int i = 0; i < n; ++i) inv(i, i) = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) < 1e-300) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m(col, j), m(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    const double p = m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) /= p;
      inv(col, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace ader
