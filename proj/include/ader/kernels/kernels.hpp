#pragma once

// Data-parallel inner loops over cells. Each kernel has a scalar reference
// version and an AVX2 version; the active one is chosen at runtime from the
// CPU features and the ADER_SIMD environment variable (scalar|avx2|auto).
//
// The AVX2 variants perform the same IEEE operations in the same order as
// the scalar ones (no FMA contraction), so their results are bitwise equal.

#include <array>
#include <cstddef>
#include <string_view>

namespace ader::kernels {

enum class Isa { kScalar, kAvx2 };

inline constexpr int kMaxStencils = 4;
inline constexpr int kMaxCoeffs = 5;

/// Precomputed WENO data for one polynomial degree. Stencil s covers cells
/// i + start[s] .. i + start[s] + degree.
struct WenoTables {
  int degree = 0;
  int n_stencils = 0;
  std::array<int, kMaxStencils> start{};
  std::array<double, kMaxStencils> linear_weight{};
  /// coeff[s][k][j]: monomial coefficient k from the j-th stencil average.
  std::array<std::array<std::array<double, kMaxCoeffs>, kMaxCoeffs>, kMaxStencils> coeff{};
  /// Oscillation indicator as a quadratic form in the monomial coefficients.
  std::array<std::array<double, kMaxCoeffs>, kMaxCoeffs> smoothness{};
  double epsilon = 1e-14;
  int power = 8;
};

/// Reconstructs n consecutive cells of one component. `center` points at the
/// average of the first output cell inside a padded array that holds at
/// least `degree` extra cells on both sides. Monomial coefficient k of cell c
/// is written to out[k * out_stride + c].
void weno_scalar(const WenoTables& t, const double* center, std::size_t n, double* out,
                 std::size_t out_stride);
void weno_avx2(const WenoTables& t, const double* center, std::size_t n, double* out,
               std::size_t out_stride);
void weno(const WenoTables& t, const double* center, std::size_t n, double* out,
          std::size_t out_stride);

/// Conservative update on cell-major data of `len` values with m components
/// per cell: out[j] = q[j] - dt_dx (flux[j + m] - flux[j]) + dt src[j].
/// `flux` holds len + m values (interface fluxes, left interface first).
void fv_update_scalar(const double* q, const double* flux, const double* src, std::size_t len,
                      std::size_t m, double dt_dx, double dt, double* out);
void fv_update_avx2(const double* q, const double* flux, const double* src, std::size_t len,
                    std::size_t m, double dt_dx, double dt, double* out);
void fv_update(const double* q, const double* flux, const double* src, std::size_t len,
               std::size_t m, double dt_dx, double dt, double* out);

bool avx2_supported();
Isa active_isa();
/// Forces a kernel set; throws ConfigError if the CPU lacks it.
void set_isa(Isa isa);
std::string_view isa_name(Isa isa);

}  // namespace ader::kernels
