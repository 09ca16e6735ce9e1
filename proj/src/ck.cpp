#include "ader/ck.hpp"

#include <cassert>

#include "ader/errors.hpp"

namespace ader {

NodeDerivativeStack::NodeDerivativeStack(int vars) : m(vars) {
  for (auto& v : dxQ) v = Vec(vars);
  for (auto& v : dtQ) v = Vec(vars);
  for (auto& a : dxA) a = Mat(vars);
  for (auto& a : dxB) a = Mat(vars);
  for (auto& a : dtB) a = Mat(vars);
}

CKCoefficients::CKCoefficients(int vars) {
  for (auto& row : c)
    for (auto& entry : row) entry = Mat(vars);
}

std::int64_t binom(int n, int k) {
  assert(n >= 0);
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PascalRow pascal_coeffs(int l) {
  assert(l >= 1 && l <= kMaxDegree + 1);
  PascalRow row;
  row.size = l + 1;
  for (int k = 1; k <= l + 1; ++k) {
    row.a[static_cast<std::size_t>(k - 1)] = binom(l, l + 1 - k);
    row.b[static_cast<std::size_t>(k - 1)] = binom(l - 1, l + 1 - k);
  }
  return row;
}

Mat matrix_D(int l, int k, const NodeDerivativeStack& stack) {
  assert(l >= 2 && k >= 1 && k <= l);
  // With l -> l+1 this is binom(l-2, l-1-k) B_x^(l-1-k) - binom(l-1, l-k) A_x^(l-k).
  Mat d = stack.dxA[static_cast<std::size_t>(l - k)] * static_cast<double>(-binom(l - 1, l - k));
  const int b_order = l - 1 - k;
  if (b_order >= 0) {
    const auto cb = binom(l - 2, b_order);
    if (cb != 0) d += stack.dxB[static_cast<std::size_t>(b_order)] * static_cast<double>(cb);
  }
  return d;
}

void matrix_C(std::span<const NodeDerivativeStack> stacks, const NodeGrid& grid,
              std::span<CKCoefficients> out) {
  const int degree = grid.degree();
  const int ns = grid.n_space();
  const int nt = grid.n_time();
  assert(static_cast<int>(stacks.size()) == grid.n_nodes());
  assert(out.size() == stacks.size());
  const int m = stacks[0].m;

  for (int n = 0; n < grid.n_nodes(); ++n) {
    out[static_cast<std::size_t>(n)] = CKCoefficients(m);
    out[static_cast<std::size_t>(n)](1, 1) = -stacks[static_cast<std::size_t>(n)].a();
  }
  if (degree < 2) return;

  const DerivativeOperator& dt_op = grid.time_operator(1);
  for (int k = 2; k <= degree; ++k) {
    for (int n = 0; n < grid.n_nodes(); ++n) {
      auto& cn = out[static_cast<std::size_t>(n)];
      cn(k, k) = cn(k - 1, k - 1) * matrix_D(k, k, stacks[static_cast<std::size_t>(n)]);
    }
    for (int l = 1; l < k; ++l) {
      for (int sp = 0; sp < ns; ++sp) {
        for (int j = 0; j < nt; ++j) {
          const int n = grid.node(sp, j);
          const auto& st = stacks[static_cast<std::size_t>(n)];
          Mat acc(m);
          for (int jj = 0; jj < nt; ++jj) {
            const double w = dt_op.weights(j, jj);
            if (w != 0.0) acc += out[static_cast<std::size_t>(grid.node(sp, jj))](k - 1, l) * w;
          }
          auto& cn = out[static_cast<std::size_t>(n)];
          for (int mm = std::max(l - 1, 1); mm <= k - 1; ++mm)
            acc += cn(k - 1, mm) * matrix_D(mm + 1, l, st);
          cn(k, l) = acc;
        }
      }
    }
  }
}

Vec m_vector(int k, const NodeDerivativeStack& stack, const CKCoefficients& c) {
  assert(k >= 1);
  Vec r(stack.m);
  for (int l = 1; l <= k; ++l) r += c(k, l) * stack.dxQ[static_cast<std::size_t>(l)];
  for (int l = 1; l <= k - 2; ++l) {
    const double w = static_cast<double>(binom(k - 2, l - 1));
    r += (stack.dtB[static_cast<std::size_t>(k - 1 - l)] * stack.dtQ[static_cast<std::size_t>(l)]) * w;
  }
  return r;
}

void time_derivatives(NodeDerivativeStack& stack, const CKCoefficients& c, const Vec& source,
                      int degree, CkVariant variant, std::span<Vec> explicit_part) {
  const Mat& b = stack.b();
  stack.dtQ[0] = stack.q();
  if (degree < 1) return;

  if (variant == CkVariant::kRecursive) {
    Vec e = m_vector(1, stack, c);
    stack.dtQ[1] = e + source;
    if (!explicit_part.empty()) explicit_part[1] = e;
    for (int k = 2; k <= degree; ++k) {
      const Vec mk = m_vector(k, stack, c);
      e = mk + b * e;
      stack.dtQ[static_cast<std::size_t>(k)] = mk + b * stack.dtQ[static_cast<std::size_t>(k - 1)];
      if (!explicit_part.empty()) explicit_part[static_cast<std::size_t>(k)] = e;
    }
    return;
  }

  // Literal form: M_1 + S for k = 1, sum_{r=2}^{k} M_r + B^{k-1} S beyond.
  Vec sum_m = m_vector(1, stack, c);
  Vec b_pow_s = source;
  for (int k = 1; k <= degree; ++k) {
    if (k == 2) sum_m = Vec(stack.m);
    if (k >= 2) {
      sum_m += m_vector(k, stack, c);
      b_pow_s = b * b_pow_s;
    }
    stack.dtQ[static_cast<std::size_t>(k)] = sum_m + b_pow_s;
    if (!explicit_part.empty()) explicit_part[static_cast<std::size_t>(k)] = sum_m;
  }
}

Mat leibniz_expand(int l, std::span<const Mat> a_t, std::span<const Mat> b_t) {
  assert(static_cast<int>(a_t.size()) > l && static_cast<int>(b_t.size()) > l);
  Mat r(a_t[0].size());
  for (int k = 0; k <= l; ++k)
    r += (a_t[static_cast<std::size_t>(l - k)] * b_t[static_cast<std::size_t>(k)]) *
         static_cast<double>(binom(l, k));
  return r;
}

Vec leibniz_expand(int l, std::span<const Mat> a_t, std::span<const Vec> b_t) {
  assert(static_cast<int>(a_t.size()) > l && static_cast<int>(b_t.size()) > l);
  Vec r(a_t[0].size());
  for (int k = 0; k <= l; ++k)
    r += (a_t[static_cast<std::size_t>(l - k)] * b_t[static_cast<std::size_t>(k)]) *
         static_cast<double>(binom(l, k));
  return r;
}

}  // namespace ader
