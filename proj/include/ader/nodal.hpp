#pragma once

// Space-time node grid of one cell: M+1 equidistant space nodes on the
// reference cell [-1/2, 1/2] and max(M, 1) Gauss-Legendre time nodes on
// [0, 1], plus interpolation-based derivative operators on both node sets.

#include <span>
#include <vector>

#include "ader/linalg.hpp"

namespace ader {

inline constexpr int kMaxDegree = 4;

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [0, 1]; weights sum to 1.
QuadratureRule gauss_legendre_unit(int n);

/// Closed Newton-Cotes weights for n equidistant nodes, normalised to sum 1.
std::vector<double> newton_cotes_weights(int n);

/// Differentiates the interpolant through `nodes`: row i of `weights` maps
/// nodal samples to the order-th derivative at nodes[i] (reference units).
struct DerivativeOperator {
  int order = 0;
  int n = 0;
  DenseMatrix weights;

  void apply(std::span<const double> values, std::span<double> out) const;
};

/// Monomial coefficients c_k of the interpolant through (nodes, f), as a
/// matrix acting on f: c = coefficients * f.
DenseMatrix interpolation_coefficients(std::span<const double> nodes);

/// Operators of orders 0..nodes.size()-1 on the given node set.
std::vector<DerivativeOperator> derivative_operators(std::span<const double> nodes);

class NodeGrid {
 public:
  /// Throws ConfigError for M outside 1..4 or non-positive scales.
  NodeGrid(int degree, double dx, double dt);

  int degree() const { return degree_; }
  int n_space() const { return degree_ + 1; }
  int n_time() const { return static_cast<int>(tau_.size()); }
  int n_nodes() const { return n_space() * n_time(); }
  /// Flat node index; space index varies fastest.
  int node(int space, int time) const { return time * n_space() + space; }

  double dx() const { return dx_; }
  double dt() const { return dt_; }

  std::span<const double> xi() const { return xi_; }
  std::span<const double> tau() const { return tau_; }
  std::span<const double> time_weights() const { return omega_; }
  std::span<const double> space_weights() const { return space_weights_; }

  /// Table of a_{M+1,k}: row k gives the weights of f_1..f_{M+1}.
  const DenseMatrix& space_coefficients() const { return space_coeffs_; }
  /// Table of b_{M+1,k} on the Gauss time nodes.
  const DenseMatrix& time_coefficients() const { return time_coeffs_; }

  /// l-th derivative in reference units, 0 <= l <= M. Orders above M give zeros.
  void space_derivative(std::span<const double> values, int l, std::span<double> out) const;
  /// l-th time derivative in reference units; requires M >= 2 and l <= n_T - 1.
  void time_derivative(std::span<const double> values, int l, std::span<double> out) const;

  /// Physical-unit operators (reference operator times dx^-l or dt^-l).
  const DerivativeOperator& space_operator(int l) const { return space_ops_[static_cast<std::size_t>(l)]; }
  const DerivativeOperator& time_operator(int l) const { return time_ops_[static_cast<std::size_t>(l)]; }

 private:
  int degree_;
  double dx_;
  double dt_;
  std::vector<double> xi_;
  std::vector<double> tau_;
  std::vector<double> omega_;
  std::vector<double> space_weights_;
  DenseMatrix space_coeffs_;
  DenseMatrix time_coeffs_;
  std::vector<DerivativeOperator> space_ref_;
  std::vector<DerivativeOperator> time_ref_;
  std::vector<DerivativeOperator> space_ops_;
  std::vector<DerivativeOperator> time_ops_;
};

}  // namespace ader
