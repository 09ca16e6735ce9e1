#pragma once

// Simplified Cauchy-Kowalewskaya recursion. The Jacobians A = dF/dQ and
// B = dS/dQ are treated as given space-time fields, which turns the time
// derivatives of Q into closed recursions:
//
//   d_x^l (d_t Q) = sum_{k=1}^{l+1} D(l+1, k) d_x^k Q
//   D(l+1, k)     = binom(l-1, l-k) B_x^(l-k) - binom(l, l+1-k) A_x^(l+1-k)
//   C(1,1) = -A,  C(k,k) = C(k-1,k-1) D(k,k),
//   C(k,l) = d_t C(k-1,l) + sum_{m=l-1}^{k-1} C(k-1,m) D(m+1,l)   (l < k)
//   M_k    = sum_{l=1}^{k} C(k,l) d_x^l Q
//            + sum_{l=1}^{k-2} binom(k-2, l-1) B_t^(k-1-l) d_t^l Q
//   d_t Q = -A d_x Q + S,   d_t^k Q = M_k + B d_t^(k-1) Q.

#include <array>
#include <cstdint>
#include <span>

#include "ader/linalg.hpp"
#include "ader/nodal.hpp"

namespace ader {

/// Per-node data for the recursion. Index 0 of each derivative array holds
/// the underived quantity (dxQ[0] = Q, dxA[0] = A, ...). All derivatives are
/// in physical units.
struct NodeDerivativeStack {
  int m = 0;
  std::array<Vec, kMaxDegree + 1> dxQ{};
  std::array<Vec, kMaxDegree + 1> dtQ{};
  std::array<Mat, kMaxDegree + 1> dxA{};
  std::array<Mat, kMaxDegree + 1> dxB{};
  std::array<Mat, kMaxDegree + 1> dtB{};

  explicit NodeDerivativeStack(int vars = 0);
  const Vec& q() const { return dxQ[0]; }
  const Mat& a() const { return dxA[0]; }
  const Mat& b() const { return dxB[0]; }
};

/// C(k, l) for 1 <= l <= k <= M; C(k, 0) is the zero matrix.
struct CKCoefficients {
  std::array<std::array<Mat, kMaxDegree + 1>, kMaxDegree + 1> c{};

  explicit CKCoefficients(int vars = 0);
  Mat& operator()(int k, int l) { return c[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; }
  const Mat& operator()(int k, int l) const { return c[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)]; }
};

/// Which closed form of the CK functional to use.
///  kRecursive: d_t^k Q = sum_{r=1}^{k} B^{k-r} M_r + B^{k-1} S (unrolled recursion).
///  kLiteral:   d_t Q = M_1 + S, d_t^k Q = sum_{r=2}^{k} M_r + B^{k-1} S (k >= 2),
///              kept for comparison.
enum class CkVariant { kRecursive, kLiteral };

/// Binomial coefficient; zero when k < 0 or k > n.
std::int64_t binom(int n, int k);

/// Pascal-triangle weights of d_x^l (d_t Q), k = 1..l+1:
///   sum_k (b[k-1] B_x^(l+1-k) d_x^(k-1) Q - a[k-1] A_x^(l+1-k) d_x^k Q).
/// b[0] is always zero; the b-row is indexed by the B derivative order.
struct PascalRow {
  std::array<std::int64_t, kMaxDegree + 3> a{};
  std::array<std::int64_t, kMaxDegree + 3> b{};
  int size = 0;
};
PascalRow pascal_coeffs(int l);

/// D(l, k) with 2 <= l and 1 <= k <= l, read from the stack's spatial
/// derivatives of A and B.
Mat matrix_D(int l, int k, const NodeDerivativeStack& stack);

/// C(k, l) at every node of one cell for k <= M. `stacks` and `out` are
/// indexed by grid.node(space, time); d_t C is taken from the interpolant
/// through the Gauss time nodes at fixed space node.
void matrix_C(std::span<const NodeDerivativeStack> stacks, const NodeGrid& grid,
              std::span<CKCoefficients> out);

/// M_k; needs dtQ[1..k-2] already filled.
Vec m_vector(int k, const NodeDerivativeStack& stack, const CKCoefficients& c);

/// Fills stack.dtQ[1..M] in increasing order. If `explicit_part` is
/// non-empty, entry k receives d_t^k Q minus its B^{k-1} S term.
void time_derivatives(NodeDerivativeStack& stack, const CKCoefficients& c, const Vec& source,
                      int degree, CkVariant variant = CkVariant::kRecursive,
                      std::span<Vec> explicit_part = {});

/// d^l/dt^l (A B) = sum_k binom(l,k) A^(l-k) B^(k) from the derivative
/// stacks of both factors (index 0 = the factor itself).
Mat leibniz_expand(int l, std::span<const Mat> a_t, std::span<const Mat> b_t);
Vec leibniz_expand(int l, std::span<const Mat> a_t, std::span<const Vec> b_t);

}  // namespace ader
