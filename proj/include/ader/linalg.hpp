#pragma once

// Small fixed-capacity dense vectors and matrices for per-node algebra.
// The number of unknowns m is a runtime value bounded by kMaxVars, so the
// hot predictor loops never touch the heap.

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace ader {

inline constexpr int kMaxVars = 4;

class Vec {
 public:
  Vec() = default;
  explicit Vec(int n, double fill = 0.0) : n_(n) {
    assert(n >= 0 && n <= kMaxVars);
    v_.fill(0.0);
    std::fill_n(v_.begin(), n, fill);
  }
  Vec(std::initializer_list<double> values) : n_(static_cast<int>(values.size())) {
    assert(n_ <= kMaxVars);
    v_.fill(0.0);
    std::copy(values.begin(), values.end(), v_.begin());
  }

  int size() const { return n_; }
  double& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  double* data() { return v_.data(); }
  const double* data() const { return v_.data(); }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < n_; ++i) v_[i] += o.v_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < n_; ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < n_; ++i) v_[i] *= s;
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  double max_abs() const {
    double r = 0.0;
    for (int i = 0; i < n_; ++i) r = std::max(r, std::abs(v_[i]));
    return r;
  }
  bool all_finite() const {
    for (int i = 0; i < n_; ++i)
      if (!std::isfinite(v_[i])) return false;
    return true;
  }

 private:
  std::array<double, kMaxVars> v_{};
  int n_ = 0;
};

class Mat {
 public:
  Mat() = default;
  explicit Mat(int n, double fill = 0.0) : n_(n) {
    assert(n >= 0 && n <= kMaxVars);
    a_.fill(0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) (*this)(i, j) = fill;
  }
  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat diagonal(int n, double d) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = d;
    return m;
  }

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * kMaxVars + j)]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * kMaxVars + j)]; }

  Mat& operator+=(const Mat& o) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) (*this)(i, j) += o(i, j);
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) (*this)(i, j) -= o(i, j);
    return *this;
  }
  Mat& operator*=(double s) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) (*this)(i, j) *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, double s) { return a *= s; }
  friend Mat operator*(double s, Mat a) { return a *= s; }
  friend Mat operator-(Mat a) { return a *= -1.0; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    const int n = a.n_;
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const double aik = a(i, k);
        for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend Vec operator*(const Mat& a, const Vec& x) {
    const int n = a.n_;
    Vec r(n);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += a(i, j) * x[j];
      r[i] = s;
    }
    return r;
  }

  double max_abs() const {
    double r = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) r = std::max(r, std::abs((*this)(i, j)));
    return r;
  }

 private:
  std::array<double, kMaxVars * kMaxVars> a_{};
  int n_ = 0;
};

/// Integer power of a square matrix; p = 0 gives the identity.
inline Mat matrix_power(const Mat& a, int p) {
  Mat r = Mat::identity(a.size());
  for (int i = 0; i < p; ++i) r = r * a;
  return r;
}

/// Solves a x = b by LU with partial pivoting. Returns nullopt when a pivot
/// falls below `singular_tol` relative to the largest entry of `a`.
inline std::optional<Vec> lu_solve(Mat a, Vec b, double singular_tol = 1e-14) {
  const int n = a.size();
  const double scale = std::max(a.max_abs(), 1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= singular_tol * scale) return std::nullopt;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

/// Row-major dynamic dense matrix used for setup-time tables
/// (Vandermonde solves, quadrature and interpolation weights).
struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r * c), fill) {}
  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
};

/// Inverse of a square dense matrix by Gauss-Jordan with partial pivoting.
/// Returns nullopt for a numerically singular matrix.
std::optional<DenseMatrix> invert(const DenseMatrix& a);

}  // namespace ader
