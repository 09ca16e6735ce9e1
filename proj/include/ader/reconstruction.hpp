#pragma once

// Component-wise WENO reconstruction of a degree-M polynomial per cell from
// cell averages, on the reference coordinate xi in [-1/2, 1/2].

#include <array>
#include <vector>

#include "ader/cell_field.hpp"
#include "ader/kernels/kernels.hpp"
#include "ader/linalg.hpp"
#include "ader/nodal.hpp"

namespace ader {

struct WenoConfig {
  double lambda_central = 1e5;
  double lambda_sided = 1.0;
  double epsilon = 1e-14;
  int power = 8;
};

/// W_i(xi) = sum_k c_k xi^k, one coefficient set per component.
struct ReconstructionPoly {
  int degree = 0;
  int m = 0;
  std::array<double, (kMaxDegree + 1) * kMaxVars> coeffs{};

  double& coef(int k, int comp) { return coeffs[static_cast<std::size_t>(k * kMaxVars + comp)]; }
  double coef(int k, int comp) const { return coeffs[static_cast<std::size_t>(k * kMaxVars + comp)]; }
};

/// l-th xi-derivative of the polynomial at xi (reference units; the caller
/// scales by dx^-l). Returns zeros for l > degree.
Vec evaluate(const ReconstructionPoly& poly, double xi, int l = 0);

class WenoReconstructor {
 public:
  /// Throws ConfigError for degree outside 1..4.
  explicit WenoReconstructor(int degree, WenoConfig config = {});

  int degree() const { return tables_.degree; }
  const kernels::WenoTables& tables() const { return tables_; }

  /// Polynomials for cells first..last-1; indices outside [0, N) are ghost
  /// cells resolved through the field's boundary rule.
  void reconstruct(const CellField& field, int first, int last,
                   std::vector<ReconstructionPoly>& out) const;
  std::vector<ReconstructionPoly> reconstruct(const CellField& field) const;

 private:
  kernels::WenoTables tables_;
};

std::vector<ReconstructionPoly> reconstruct(const CellField& field, int degree);

}  // namespace ader
