#include <random>
#include <vector>

#include "ader/ck.hpp"
#include "ader/nodal.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ader;

namespace {

// Stacks at every node of a grid with the same constant A, B and the given
// spatial derivatives of Q.
std::vector<NodeDerivativeStack> constant_stacks(const NodeGrid& g, const Mat& a, const Mat& b,
                                                 const std::vector<Vec>& dxq) {
  const int m = a.size();
  NodeDerivativeStack st(m);
  for (std::size_t l = 0; l < dxq.size(); ++l) st.dxQ[l] = dxq[l];
  st.dxA[0] = a;
  st.dxB[0] = b;
  st.dtB[0] = b;
  return std::vector<NodeDerivativeStack>(static_cast<std::size_t>(g.n_nodes()), st);
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binom(4, 2) == 6);
  CHECK(binom(5, 0) == 1);
  CHECK(binom(3, 4) == 0);
  CHECK(binom(3, -1) == 0);
}

TEST_CASE("Pascal weights reproduce the coefficient tables") {
  for (int l = 1; l <= 5; ++l) {
    const PascalRow row = pascal_coeffs(l);
    const auto& a = oracle::kTableA[static_cast<std::size_t>(l - 1)];
    const auto& b = oracle::kTableB[static_cast<std::size_t>(l - 1)];
    REQUIRE(row.size == static_cast<int>(a.size()));
    for (int k = 0; k < row.size; ++k) {
      CHECK(row.a[static_cast<std::size_t>(k)] == a[static_cast<std::size_t>(k)]);
      CHECK(row.b[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("D matrix identities") {
  std::mt19937_64 rng(3);
  NodeDerivativeStack st(3);
  for (auto& a : st.dxA) a = oracle::random_mat(rng, 3);
  for (auto& b : st.dxB) b = oracle::random_mat(rng, 3);
  CHECK((matrix_D(2, 2, st) + st.dxA[0]).max_abs() == 0.0);
  CHECK((matrix_D(2, 1, st) - (st.dxB[0] - st.dxA[1])).max_abs() == 0.0);
  // D(3,1) = B_x - A_xx, D(3,2) = B - 2 A_x.
  CHECK((matrix_D(3, 1, st) - (st.dxB[1] - st.dxA[2])).max_abs() < 1e-15);
  CHECK((matrix_D(3, 2, st) - (st.dxB[0] - st.dxA[1] * 2.0)).max_abs() < 1e-15);
}

TEST_CASE("constant-coefficient time derivatives match the operator expansion") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 4; ++trial) {
    const int m = 2 + trial % 2;
    const Mat a = oracle::random_mat(rng, m);
    const Mat b = oracle::random_mat(rng, m, 0.5);
    std::vector<Vec> dxq;
    for (int l = 0; l <= kMaxDegree; ++l) dxq.push_back(oracle::random_vec(rng, m));
    const NodeGrid g(kMaxDegree, 0.1, 0.05);
    auto stacks = constant_stacks(g, a, b, dxq);
    std::vector<CKCoefficients> c(stacks.size(), CKCoefficients(m));
    matrix_C(stacks, g, c);
    NodeDerivativeStack st = stacks[0];
    time_derivatives(st, c[0], b * dxq[0], kMaxDegree);
    for (int k = 1; k <= kMaxDegree; ++k) {
      const Vec ref = oracle::constant_coefficient_dt(k, a, b, dxq);
      CHECK((st.dtQ[static_cast<std::size_t>(k)] - ref).max_abs() <= 1e-8 * std::max(1.0, ref.max_abs()));
    }
  }
}

TEST_CASE("C(2,.) for a linear flux Jacobian") {
  // Scalar A(x) = a0 + a1 x, B = 0: d_t^2 Q = A (A Q_x)_x = A^2 Q_xx + A A_x Q_x.
  const NodeGrid g(2, 0.1, 0.05);
  NodeDerivativeStack st(1);
  st.dxA[0](0, 0) = 0.7;
  st.dxA[1](0, 0) = 0.3;
  std::vector<NodeDerivativeStack> stacks(static_cast<std::size_t>(g.n_nodes()), st);
  std::vector<CKCoefficients> c(stacks.size(), CKCoefficients(1));
  matrix_C(stacks, g, c);
  CHECK(c[0](1, 1)(0, 0) == doctest::Approx(-0.7));
  CHECK(c[0](2, 2)(0, 0) == doctest::Approx(0.49));
  CHECK(c[0](2, 1)(0, 0) == doctest::Approx(0.21));
}

TEST_CASE("recursive and literal variants agree for k = 1 and differ beyond") {
  std::mt19937_64 rng(9);
  const Mat a = oracle::random_mat(rng, 2);
  const Mat b = oracle::random_mat(rng, 2, 0.5);
  std::vector<Vec> dxq;
  for (int l = 0; l <= 3; ++l) dxq.push_back(oracle::random_vec(rng, 2));
  const NodeGrid g(3, 0.1, 0.05);
  auto stacks = constant_stacks(g, a, b, dxq);
  std::vector<CKCoefficients> c(stacks.size(), CKCoefficients(2));
  matrix_C(stacks, g, c);
  NodeDerivativeStack r = stacks[0], lit = stacks[0];
  std::vector<Vec> er(4, Vec(2)), el(4, Vec(2));
  time_derivatives(r, c[0], b * dxq[0], 3, CkVariant::kRecursive, er);
  time_derivatives(lit, c[0], b * dxq[0], 3, CkVariant::kLiteral, el);
  CHECK((r.dtQ[1] - lit.dtQ[1]).max_abs() < 1e-15);
  CHECK((r.dtQ[2] - lit.dtQ[2]).max_abs() > 1e-6);
  // The explicit part excludes only the B^{k-1} S term.
  CHECK((r.dtQ[2] - er[2] - b * (b * dxq[0])).max_abs() < 1e-14);
}

TEST_CASE("Leibniz expansion matches polynomial products") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const auto pa = oracle::random_poly(rng, 3, 4);
    const auto pb = oracle::random_poly(rng, 3, 3);
    const auto prod = oracle::multiply(pa, pb);
    const double t = 0.3 * trial - 0.5;
    std::vector<Mat> at, bt;
    std::vector<Vec> vt;
    const Vec e{1.0, -2.0, 0.5};
    for (int l = 0; l <= 4; ++l) {
      at.push_back(pa.derivative(l, t));
      bt.push_back(pb.derivative(l, t));
      vt.push_back(pb.derivative(l, t) * e);
    }
    for (int l = 0; l <= 4; ++l) {
      const Mat ref = prod.derivative(l, t);
      const double scale = std::max(1.0, ref.max_abs());
      CHECK((leibniz_expand(l, at, bt) - ref).max_abs() <= 1e-12 * scale);
      CHECK((leibniz_expand(l, at, vt) - ref * e).max_abs() <= 1e-12 * scale * 4.0);
    }
  }
}
