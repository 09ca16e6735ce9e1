#include "ader/nodal.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ader/errors.hpp"

namespace ader {

QuadratureRule gauss_legendre_unit(int n) {
  if (n < 1) throw ConfigError("Gauss-Legendre rule needs at least one point");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Newton on P_n from the standard cosine guess; roots come out descending.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      const double pn = (n == 1) ? x : p1;
      const double pnm1 = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pnm1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Map [-1, 1] -> [0, 1], ascending order.
    const int j = n - 1 - i;
    rule.nodes[static_cast<std::size_t>(j)] = 0.5 * (x + 1.0);
    rule.weights[static_cast<std::size_t>(j)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

DenseMatrix interpolation_coefficients(std::span<const double> nodes) {
  const int n = static_cast<int>(nodes.size());
  DenseMatrix v(n, n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
      v(i, k) = p;
      p *= nodes[static_cast<std::size_t>(i)];
    }
  }
  auto inv = invert(v);
  if (!inv) throw ConfigError("interpolation nodes are not distinct");
  return *inv;
}

std::vector<double> newton_cotes_weights(int n) {
  std::vector<double> nodes(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) nodes[static_cast<std::size_t>(i)] = n == 1 ? 0.0 : -0.5 + double(i) / (n - 1);
  const DenseMatrix coeffs = interpolation_coefficients(nodes);
  // Mean of xi^k over [-1/2, 1/2] is 0 for odd k and 2^-k/(k+1) for even k.
  std::vector<double> w(static_cast<std::size_t>(n), 0.0);
  for (int k = 0; k < n; k += 2) {
    const double moment = std::pow(0.5, k) / (k + 1);
    for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] += moment * coeffs(k, j);
  }
  return w;
}

void DerivativeOperator::apply(std::span<const double> values, std::span<double> out) const {
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += weights(i, j) * values[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
}

std::vector<DerivativeOperator> derivative_operators(std::span<const double> nodes) {
  const int n = static_cast<int>(nodes.size());
  const DenseMatrix coeffs = interpolation_coefficients(nodes);
  std::vector<DerivativeOperator> ops;
  ops.reserve(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    DerivativeOperator op{l, n, DenseMatrix(n, n)};
    for (int i = 0; i < n; ++i) {
      const double x = nodes[static_cast<std::size_t>(i)];
      for (int k = l; k < n; ++k) {
        // d^l/dx^l x^k = k!/(k-l)! x^(k-l)
        double factor = 1.0;
        for (int r = 0; r < l; ++r) factor *= (k - r);
        const double basis = factor * std::pow(x, k - l);
        for (int j = 0; j < n; ++j) op.weights(i, j) += basis * coeffs(k, j);
      }
    }
    if (l == 0) {
      // Interpolation reproduces nodal values exactly.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op.weights(i, j) = (i == j) ? 1.0 : 0.0;
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

namespace {

std::vector<DerivativeOperator> scaled(const std::vector<DerivativeOperator>& ref, double h) {
  std::vector<DerivativeOperator> out = ref;
  for (auto& op : out) {
    const double s = std::pow(h, -op.order);
    for (double& w : op.weights.data) w *= s;
  }
  return out;
}

}  // namespace

NodeGrid::NodeGrid(int degree, double dx, double dt) : degree_(degree), dx_(dx), dt_(dt) {
  if (degree < 1 || degree > kMaxDegree) {
    std::ostringstream msg;
    msg << "unsupported reconstruction degree M=" << degree << " (orders 2..5 only)";
    throw ConfigError(msg.str());
  }
  if (!(dx > 0.0) || !(dt > 0.0)) throw ConfigError("node grid needs dx > 0 and dt > 0");

  xi_.resize(static_cast<std::size_t>(degree + 1));
  for (int m = 0; m <= degree; ++m) xi_[static_cast<std::size_t>(m)] = -0.5 + double(m) / degree;

  const QuadratureRule gauss = gauss_legendre_unit(std::max(degree, 1));
  tau_ = gauss.nodes;
  omega_ = gauss.weights;
  space_weights_ = newton_cotes_weights(degree + 1);

  space_coeffs_ = interpolation_coefficients(xi_);
  time_coeffs_ = interpolation_coefficients(tau_);
  space_ref_ = derivative_operators(xi_);
  time_ref_ = derivative_operators(tau_);
  space_ops_ = scaled(space_ref_, dx_);
  time_ops_ = scaled(time_ref_, dt_);
}

void NodeGrid::space_derivative(std::span<const double> values, int l, std::span<double> out) const {
  assert(l >= 0);
  if (l > degree_) {
    std::fill(out.begin(), out.begin() + n_space(), 0.0);
    return;
  }
  space_ref_[static_cast<std::size_t>(l)].apply(values, out);
}

void NodeGrid::time_derivative(std::span<const double> values, int l, std::span<double> out) const {
  if (degree_ < 2 || l < 0 || l >= n_time())
    throw ConfigError("time derivative needs M >= 2 and order below the number of time nodes");
  time_ref_[static_cast<std::size_t>(l)].apply(values, out);
}

}  // namespace ader
