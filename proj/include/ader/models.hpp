#pragma once

// Balance laws  dQ/dt + dF(Q)/dx = S(Q)  used by the solver and the test
// harness: flux, source, both Jacobians, wave speeds and, where available,
// closed-form solutions.

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "ader/linalg.hpp"

namespace ader {

class HyperbolicSystem {
 public:
  virtual ~HyperbolicSystem() = default;

  virtual std::string name() const = 0;
  virtual int num_vars() const = 0;

  virtual Vec flux(const Vec& q) const = 0;
  virtual Vec source(const Vec& q) const = 0;
  virtual Mat flux_jacobian(const Vec& q) const = 0;
  virtual Mat source_jacobian(const Vec& q) const = 0;
  /// Eigenvalues of the flux Jacobian, ascending.
  virtual Vec eigenvalues(const Vec& q) const = 0;

  /// False when S is identically zero; lets callers skip source work.
  virtual bool has_source() const { return true; }
  /// Throws PhysicsError if q is outside the admissible set.
  virtual void check_admissible(const Vec& /*q*/) const {}

  virtual Vec initial_condition(double x) const = 0;
  /// Closed-form (or reference) solution, nullopt when none exists.
  virtual std::optional<Vec> exact_solution(double x, double t) const = 0;

  std::map<std::string, double> params() const { return params_; }

 protected:
  std::map<std::string, double> params_;
};

using SystemPtr = std::shared_ptr<const HyperbolicSystem>;

/// Linear 2x2 system with A = [[0, lambda], [lambda, 0]], B = beta I and
/// initial data (sin 2 pi x, cos 2 pi x).
SystemPtr linear_system(double lambda, double beta);

/// Nonlinear 2x2 system that decouples into Burgers' equation and Burgers'
/// equation with a quadratic source. Requires beta <= 0.
SystemPtr nonlinear_system(double beta);

/// Exact solution of the nonlinear system by characteristic root finding.
/// Throws SolverError if the foot-point iteration fails to converge.
Vec nonlinear_exact(double x, double t, double beta);

/// Scalar advection with the bistable source beta q (q - 1)(q - 1/2),
/// initial step at x = 0.3.
SystemPtr leveque_yee_system(double beta);

// --- Euler equations -------------------------------------------------------

struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double p = 0.0;
};

/// Throws PhysicsError unless rho > 0 and p > 0.
Vec primitive_to_conserved(const PrimitiveState& w, double gamma);
PrimitiveState conserved_to_primitive(const Vec& q, double gamma);

enum class EulerCase { kSmoothWave, kShuOsher };

/// Ideal-gas Euler equations. kSmoothWave advects a density sine wave
/// (exact solution available); kShuOsher uses the shock/entropy-wave data
/// with the given density-wave amplitude.
SystemPtr euler_system(double gamma, EulerCase which = EulerCase::kSmoothWave,
                       double shu_osher_amplitude = 1.0);

/// (3.8571, 2.6294, 10.333) left of x = -0.8, (1 + a sin(5 pi x), 0, 1)
/// elsewhere. With a = 1 the density touches zero at x = -0.1 + 0.4 k; the
/// classical data uses a = 0.2.
PrimitiveState shu_osher_initial(double x, double amplitude = 1.0);

}  // namespace ader
