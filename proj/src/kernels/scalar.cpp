#include "ader/kernels/kernels.hpp"

namespace ader::kernels {

void weno_scalar(const WenoTables& t, const double* center, std::size_t n, double* out,
                 std::size_t out_stride) {
  const int nc = t.degree + 1;
  const int ns = t.n_stencils;
  for (std::size_t c = 0; c < n; ++c) {
    const double* v = center + c;
    double poly[kMaxStencils][kMaxCoeffs];
    double weight[kMaxStencils];
    for (int s = 0; s < ns; ++s) {
      const double* cells = v + t.start[s];
      for (int k = 0; k < nc; ++k) {
        double acc = 0.0;
        for (int j = 0; j < nc; ++j) acc = acc + t.coeff[s][k][j] * cells[j];
        poly[s][k] = acc;
      }
      double sigma = 0.0;
      for (int a = 0; a < nc; ++a)
        for (int b = 0; b < nc; ++b) sigma = sigma + (t.smoothness[a][b] * poly[s][a]) * poly[s][b];
      const double base = sigma + t.epsilon;
      double denom = 1.0;
      for (int r = 0; r < t.power; ++r) denom = denom * base;
      weight[s] = t.linear_weight[s] / denom;
    }
    double total = 0.0;
    for (int s = 0; s < ns; ++s) total = total + weight[s];
    for (int k = 0; k < nc; ++k) {
      double acc = 0.0;
      for (int s = 0; s < ns; ++s) acc = acc + (weight[s] / total) * poly[s][k];
      out[static_cast<std::size_t>(k) * out_stride + c] = acc;
    }
  }
}

void fv_update_scalar(const double* q, const double* flux, const double* src, std::size_t len,
                      std::size_t m, double dt_dx, double dt, double* out) {
  for (std::size_t j = 0; j < len; ++j)
    out[j] = (q[j] - dt_dx * (flux[j + m] - flux[j])) + dt * src[j];
}

}  // namespace ader::kernels
