#pragma once

// Cell-local space-time predictor. Nodal values Q(xi_m, tau_j) solve the
// implicit Taylor expansion
//
//   Q = W(xi_m) - sum_{k=1}^{M} (-tau)^k / k! G^(k)(Q),   tau = tau_j dt,
//
// with G^(k) the simplified CK functional. The stiff part B^{k-1} S(Q) is
// treated implicitly by one Newton step per sweep, everything else is
// frozen at the previous iterate. M sweeps are performed.

#include <array>
#include <span>
#include <vector>

#include "ader/ck.hpp"
#include "ader/models.hpp"
#include "ader/nodal.hpp"
#include "ader/reconstruction.hpp"

namespace ader {

/// Starting value at each node.
///  kSourceConsistent: W + tau [I - tau B(W)]^{-1} (S(W) - A(W) dW/dx).
///  kLinearSource:     [I - tau B(W)]^{-1} (W - tau A(W) dW/dx).
/// Both agree when S(Q) = B Q; only the first keeps equilibria of nonlinear
/// sources (S(W) = 0) fixed.
enum class StartingGuess { kSourceConsistent, kLinearSource };

struct PredictorConfig {
  CkVariant variant = CkVariant::kRecursive;
  StartingGuess guess = StartingGuess::kSourceConsistent;
  /// Number of outer sweeps; <= 0 means M. At most kMaxSweeps.
  int sweeps = 0;
  /// Stop early once max |H| falls below this value; <= 0 disables.
  double residual_tol = 1e-12;
};

inline constexpr int kMaxSweeps = 64;

struct PredictorStats {
  int sweeps_done = 0;
  /// max-norm of H over the nodes, one entry per sweep.
  std::array<double, kMaxSweeps> residual{};
  /// The stiff starting guess was singular at some node and fell back to W.
  bool initial_fallback = false;

  double final_residual() const { return sweeps_done > 0 ? residual[static_cast<std::size_t>(sweeps_done - 1)] : 0.0; }
};

/// Residual, Jacobian and correction of the per-node algebraic system.
struct NewtonSystem {
  Vec residual;
  Mat jacobian;
  Vec correction;
};

/// Holds the workspace for one cell at a time; use one instance per thread.
class Predictor {
 public:
  Predictor(const HyperbolicSystem& system, const NodeGrid& grid, PredictorConfig config = {});

  const NodeGrid& grid() const { return grid_; }

  /// Runs the full iteration for one cell. `nodal_q` has grid.n_nodes()
  /// entries indexed by grid.node(space, time).
  PredictorStats solve(const ReconstructionPoly& w, std::span<Vec> nodal_q);

  /// Second-order stiff starting value at node (space, time), see
  /// StartingGuess. Sets *fallback and returns W when I - tau B(W) is singular.
  Vec initial_guess(const ReconstructionPoly& w, int space, int time, bool* fallback = nullptr) const;

  /// Evaluates A, B, S at the nodes and fills spatial derivatives of Q, A, B
  /// and time derivatives of B by nodal interpolation.
  void populate_stacks(std::span<const Vec> nodal_q);

  /// C(k, l) at all nodes from the populated stacks.
  void compute_coefficients();

  /// Newton system at one node for the current iterate (stacks and C must
  /// be up to date). Throws SolverError if the Jacobian is singular.
  NewtonSystem newton_system(int space, int time);

  /// One Newton step at every node; returns max |H| before the update.
  double newton_sweep(std::span<Vec> nodal_q);

  std::span<const NodeDerivativeStack> stacks() const { return stacks_; }
  std::span<const CKCoefficients> coefficients() const { return coeffs_; }
  std::span<const Vec> sources() const { return source_; }
  std::span<const Vec> reconstruction_values() const { return w_nodes_; }

 private:
  const HyperbolicSystem& system_;
  const NodeGrid& grid_;
  PredictorConfig config_;
  int m_;
  bool has_source_;
  std::vector<NodeDerivativeStack> stacks_;
  std::vector<CKCoefficients> coeffs_;
  std::vector<Vec> source_;
  std::vector<Vec> w_nodes_;
};

}  // namespace ader
