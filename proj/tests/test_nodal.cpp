#include <cmath>
#include <random>
#include <vector>

#include "ader/errors.hpp"
#include "ader/nodal.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ader;

namespace {

double falling(int k, int l) {
  double f = 1.0;
  for (int r = 0; r < l; ++r) f *= (k - r);
  return f;
}

}  // namespace

TEST_CASE("Gauss-Legendre nodes and weights") {
  const auto g2 = gauss_legendre_unit(2);
  CHECK(g2.nodes[0] == doctest::Approx((3.0 - std::sqrt(3.0)) / 6.0).epsilon(1e-15));
  CHECK(g2.nodes[1] == doctest::Approx((3.0 + std::sqrt(3.0)) / 6.0).epsilon(1e-15));
  for (int n = 1; n <= 5; ++n) {
    const auto g = gauss_legendre_unit(n);
    // Exact for degree 2n - 1 on [0, 1].
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[static_cast<std::size_t>(i)] * std::pow(g.nodes[static_cast<std::size_t>(i)], p);
      CHECK(s == doctest::Approx(1.0 / (p + 1)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(gauss_legendre_unit(0), ConfigError);
}

TEST_CASE("space nodes") {
  const NodeGrid g(4, 0.1, 0.01);
  const double expect[] = {-0.5, -0.25, 0.0, 0.25, 0.5};
  for (int i = 0; i < 5; ++i) CHECK(g.xi()[static_cast<std::size_t>(i)] == doctest::Approx(expect[i]));
  CHECK(g.n_time() == 4);
  CHECK(NodeGrid(1, 0.1, 0.01).n_time() == 1);
  CHECK_THROWS_AS(NodeGrid(5, 0.1, 0.01), ConfigError);
  CHECK_THROWS_AS(NodeGrid(2, 0.0, 0.01), ConfigError);
}

TEST_CASE("derivative operators are exact on monomials") {
  for (int degree = 1; degree <= 4; ++degree) {
    const NodeGrid g(degree, 0.1, 0.02);
    for (int p = 0; p <= degree; ++p) {
      std::vector<double> f(static_cast<std::size_t>(g.n_space())), out(f.size());
      for (int i = 0; i < g.n_space(); ++i) f[static_cast<std::size_t>(i)] = std::pow(g.xi()[static_cast<std::size_t>(i)], p);
      for (int l = 0; l <= degree + 1; ++l) {
        g.space_derivative(f, l, out);
        for (int i = 0; i < g.n_space(); ++i) {
          const double xi = g.xi()[static_cast<std::size_t>(i)];
          const double exact = l > p ? 0.0 : falling(p, l) * std::pow(xi, p - l);
          CHECK(std::abs(out[static_cast<std::size_t>(i)] - exact) < 1e-11);
        }
        if (l <= degree) {
          // Physical operator carries dx^-l.
          const auto& op = g.space_operator(l);
          for (int i = 0; i < g.n_space(); ++i) {
            double s = 0.0;
            for (int j = 0; j < g.n_space(); ++j) s += op.weights(i, j) * f[static_cast<std::size_t>(j)];
            CHECK(std::abs(s * std::pow(0.1, l) - out[static_cast<std::size_t>(i)]) < 1e-9);
          }
        }
      }
    }
    if (degree < 2) continue;
    for (int p = 0; p < g.n_time(); ++p) {
      std::vector<double> f(static_cast<std::size_t>(g.n_time())), out(f.size());
      for (int j = 0; j < g.n_time(); ++j) f[static_cast<std::size_t>(j)] = std::pow(g.tau()[static_cast<std::size_t>(j)], p);
      for (int l = 0; l < g.n_time(); ++l) {
        g.time_derivative(f, l, out);
        for (int j = 0; j < g.n_time(); ++j) {
          const double tau = g.tau()[static_cast<std::size_t>(j)];
          const double exact = l > p ? 0.0 : falling(p, l) * std::pow(tau, p - l);
          CHECK(std::abs(out[static_cast<std::size_t>(j)] - exact) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("time derivative contract") {
  const NodeGrid g1(1, 0.1, 0.01);
  std::vector<double> f{1.0}, out(1);
  CHECK_THROWS_AS(g1.time_derivative(f, 1, out), ConfigError);
  const NodeGrid g3(3, 0.1, 0.01);
  std::vector<double> f3{1.0, 2.0, 3.0}, out3(3);
  CHECK_THROWS_AS(g3.time_derivative(f3, 3, out3), ConfigError);
}

TEST_CASE("interpolation coefficients match the hand-derived tables") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int degree = 2; degree <= 4; ++degree) {
    const NodeGrid g(degree, 1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> fs(static_cast<std::size_t>(degree + 1)), ft(static_cast<std::size_t>(degree));
      for (double& v : fs) v = u(rng);
      for (double& v : ft) v = u(rng);
      const auto as = oracle::space_table(degree, fs);
      const auto at = oracle::time_table(degree, ft);
      for (int k = 0; k <= degree; ++k) {
        double s = 0.0;
        for (int j = 0; j <= degree; ++j) s += g.space_coefficients()(k, j) * fs[static_cast<std::size_t>(j)];
        CHECK(std::abs(s - as[static_cast<std::size_t>(k)]) < 1e-10);
      }
      for (int k = 0; k < degree; ++k) {
        double s = 0.0;
        for (int j = 0; j < degree; ++j) s += g.time_coefficients()(k, j) * ft[static_cast<std::size_t>(j)];
        CHECK(std::abs(s - at[static_cast<std::size_t>(k)]) < 1e-10);
      }
    }
  }
}

TEST_CASE("Newton-Cotes weights") {
  const int exact_degree[] = {0, 0, 1, 3, 3, 5};
  for (int n = 2; n <= 5; ++n) {
    const auto w = newton_cotes_weights(n);
    const auto ref = oracle::newton_cotes_table(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(w[static_cast<std::size_t>(i)] == doctest::Approx(ref[static_cast<std::size_t>(i)]).epsilon(1e-13));
      sum += w[static_cast<std::size_t>(i)];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    for (int p = 0; p <= exact_degree[n]; ++p) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += w[static_cast<std::size_t>(i)] * std::pow(-0.5 + double(i) / (n - 1), p);
      const double mean = (p % 2 == 1) ? 0.0 : std::pow(0.5, p) / (p + 1);
      CHECK(std::abs(s - mean) < 1e-14);
    }
  }
}
