#pragma once

// One-step ADER finite-volume update
//
//   Q_i^{n+1} = Q_i^n - dt/dx (F_{i+1/2} - F_{i-1/2}) + dt S_i
//
// with Rusanov fluxes averaged over the Gauss time nodes of the predictor
// and a Newton-Cotes space-time source average.

#include <iosfwd>
#include <span>
#include <vector>

#include "ader/cell_field.hpp"
#include "ader/models.hpp"
#include "ader/nodal.hpp"
#include "ader/predictor.hpp"
#include "ader/reconstruction.hpp"

namespace ader {

struct RunConfig {
  SystemPtr system;
  /// Polynomial degree M; the scheme has order M + 1.
  int degree = 1;
  int n_cells = 0;
  double x_left = 0.0;
  double x_right = 1.0;
  double cfl = 0.9;
  double t_out = 1.0;
  Boundary boundary = Boundary::kPeriodic;
  WenoConfig weno{};
  PredictorConfig predictor{};
  /// <= 0 means default_thread_count().
  int threads = 0;
  /// Per-step `t dt lambda_abs` lines go here when non-null.
  std::ostream* log = nullptr;

  /// Throws ConfigError on invalid settings.
  void validate() const;
};

struct RunDiagnostics {
  int steps = 0;
  /// Largest final Newton residual over all cells and steps.
  double max_residual = 0.0;
  /// Cells whose stiff starting guess fell back to W.
  long long initial_fallbacks = 0;
  /// Predictor + flux + update time, excluding projection and output.
  double seconds = 0.0;
};

struct RunResult {
  CellField field;
  double t = 0.0;
  RunDiagnostics diagnostics;
};

/// F_h = (F(QL) + F(QR))/2 - s/2 (QR - QL), s the largest |eigenvalue| of
/// both states. Throws PhysicsError for inadmissible states.
Vec rusanov_flux(const Vec& ql, const Vec& qr, const HyperbolicSystem& system);

/// Time-averaged flux between a left and a right predictor node set.
Vec interface_flux(std::span<const Vec> left, std::span<const Vec> right, const NodeGrid& grid,
                   const HyperbolicSystem& system);

/// Space-time average of S over one predictor node set.
Vec cell_source(std::span<const Vec> nodes, const NodeGrid& grid, const HyperbolicSystem& system);

/// Largest |eigenvalue| over all cells.
double max_wave_speed(const CellField& field, const HyperbolicSystem& system);

/// dt = cfl dx / lambda_abs, clipped so that t + dt does not pass t_out.
/// Throws ConfigError when lambda_abs = 0.
double cfl_timestep(const CellField& field, const HyperbolicSystem& system, double cfl,
                    double t = 0.0, double t_out = 0.0);

/// Cell averages of the initial condition by 5-point Gauss quadrature.
CellField project_initial(const RunConfig& config);

class Solver {
 public:
  explicit Solver(RunConfig config);

  const RunConfig& config() const { return config_; }

  /// Advances `field` by dt in place.
  void step(CellField& field, double dt, RunDiagnostics* diag = nullptr) const;

  /// Projects the initial data and marches to t_out.
  RunResult run() const;

 private:
  RunConfig config_;
  WenoReconstructor weno_;
  int threads_;
};

}  // namespace ader
