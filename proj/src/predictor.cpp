#include "ader/predictor.hpp"

#include <sstream>

#include "ader/errors.hpp"

namespace ader {

Predictor::Predictor(const HyperbolicSystem& system, const NodeGrid& grid, PredictorConfig config)
    : system_(system),
      grid_(grid),
      config_(config),
      m_(system.num_vars()),
      has_source_(system.has_source()),
      stacks_(static_cast<std::size_t>(grid.n_nodes()), NodeDerivativeStack(system.num_vars())),
      coeffs_(static_cast<std::size_t>(grid.n_nodes()), CKCoefficients(system.num_vars())),
      source_(static_cast<std::size_t>(grid.n_nodes()), Vec(system.num_vars())),
      w_nodes_(static_cast<std::size_t>(grid.n_space()), Vec(system.num_vars())) {}

Vec Predictor::initial_guess(const ReconstructionPoly& w, int space, int time, bool* fallback) const {
  const double xi = grid_.xi()[static_cast<std::size_t>(space)];
  const double tau = grid_.tau()[static_cast<std::size_t>(time)] * grid_.dt();
  const Vec wv = evaluate(w, xi, 0);
  const Vec dw = evaluate(w, xi, 1) * (1.0 / grid_.dx());
  const Vec adw = system_.flux_jacobian(wv) * dw;
  if (!has_source_) return wv - adw * tau;
  const Mat lhs = Mat::identity(m_) - system_.source_jacobian(wv) * tau;
  if (config_.guess == StartingGuess::kLinearSource) {
    if (auto q = lu_solve(lhs, wv - adw * tau)) return *q;
  } else if (auto d = lu_solve(lhs, (system_.source(wv) - adw) * tau)) {
    return wv + *d;
  }
  if (fallback) *fallback = true;
  return wv;
}

void Predictor::populate_stacks(std::span<const Vec> nodal_q) {
  const int ns = grid_.n_space();
  const int nt = grid_.n_time();
  const int degree = grid_.degree();

  for (int n = 0; n < grid_.n_nodes(); ++n) {
    auto& st = stacks_[static_cast<std::size_t>(n)];
    const Vec& q = nodal_q[static_cast<std::size_t>(n)];
    st.dxQ[0] = q;
    st.dtQ[0] = q;
    st.dxA[0] = system_.flux_jacobian(q);
    if (has_source_) {
      st.dxB[0] = system_.source_jacobian(q);
      st.dtB[0] = st.dxB[0];
      source_[static_cast<std::size_t>(n)] = system_.source(q);
    }
  }

  // Spatial derivatives along each time level: Q up to M, A and B up to M-1.
  for (int j = 0; j < nt; ++j) {
    for (int l = 1; l <= degree; ++l) {
      const DerivativeOperator& op = grid_.space_operator(l);
      for (int sp = 0; sp < ns; ++sp) {
        auto& st = stacks_[static_cast<std::size_t>(grid_.node(sp, j))];
        Vec dq(m_);
        Mat da(m_), db(m_);
        for (int s2 = 0; s2 < ns; ++s2) {
          const double w = op.weights(sp, s2);
          const auto& src = stacks_[static_cast<std::size_t>(grid_.node(s2, j))];
          dq += src.dxQ[0] * w;
          if (l < degree) {
            da += src.dxA[0] * w;
            if (has_source_) db += src.dxB[0] * w;
          }
        }
        st.dxQ[static_cast<std::size_t>(l)] = dq;
        if (l < degree) {
          st.dxA[static_cast<std::size_t>(l)] = da;
          st.dxB[static_cast<std::size_t>(l)] = db;
        }
      }
    }
  }

  // Time derivatives of B along each space node, up to M-2.
  if (has_source_ && degree >= 3) {
    for (int sp = 0; sp < ns; ++sp)
      for (int l = 1; l <= degree - 2; ++l) {
        const DerivativeOperator& op = grid_.time_operator(l);
        for (int j = 0; j < nt; ++j) {
          Mat acc(m_);
          for (int j2 = 0; j2 < nt; ++j2)
            acc += stacks_[static_cast<std::size_t>(grid_.node(sp, j2))].dxB[0] * op.weights(j, j2);
          stacks_[static_cast<std::size_t>(grid_.node(sp, j))].dtB[static_cast<std::size_t>(l)] = acc;
        }
      }
  }
}

void Predictor::compute_coefficients() { matrix_C(stacks_, grid_, coeffs_); }

NewtonSystem Predictor::newton_system(int space, int time) {
  const int degree = grid_.degree();
  const int n = grid_.node(space, time);
  auto& st = stacks_[static_cast<std::size_t>(n)];
  const Vec& src = source_[static_cast<std::size_t>(n)];
  const double tau = grid_.tau()[static_cast<std::size_t>(time)] * grid_.dt();

  std::array<Vec, kMaxDegree + 1> explicit_part{};
  time_derivatives(st, coeffs_[static_cast<std::size_t>(n)], has_source_ ? src : Vec(m_), degree,
                   config_.variant, explicit_part);

  // H(Y) = Y - W + sum_k c_k E_k + sum_k c_k B^{k-1}(Q^s) S(Y), c_k = (-tau)^k / k!
  NewtonSystem sys;
  Vec h = st.q() - w_nodes_[static_cast<std::size_t>(space)];
  Mat implicit_weight(m_);
  Mat b_pow = Mat::identity(m_);
  double ck = 1.0;
  for (int k = 1; k <= degree; ++k) {
    ck *= -tau / k;
    h += explicit_part[static_cast<std::size_t>(k)] * ck;
    if (has_source_) {
      if (k > 1) b_pow = b_pow * st.b();
      implicit_weight += b_pow * ck;
    }
  }
  sys.jacobian = Mat::identity(m_);
  if (has_source_) {
    h += implicit_weight * src;
    sys.jacobian += implicit_weight * st.b();
  }
  sys.residual = h;
  if (!has_source_) {
    sys.correction = h;
    return sys;
  }
  auto delta = lu_solve(sys.jacobian, h);
  if (!delta) {
    std::ostringstream msg;
    msg << "singular predictor Jacobian at node (space " << space << ", time " << time << ")";
    throw SolverError(msg.str());
  }
  sys.correction = *delta;
  return sys;
}

double Predictor::newton_sweep(std::span<Vec> nodal_q) {
  double res = 0.0;
  // All corrections use the stacks of the current iterate, then update.
  std::array<Vec, (kMaxDegree + 1) * kMaxDegree> corr{};
  for (int j = 0; j < grid_.n_time(); ++j)
    for (int sp = 0; sp < grid_.n_space(); ++sp) {
      const NewtonSystem sys = newton_system(sp, j);
      res = std::max(res, sys.residual.max_abs());
      corr[static_cast<std::size_t>(grid_.node(sp, j))] = sys.correction;
    }
  for (int n = 0; n < grid_.n_nodes(); ++n) nodal_q[static_cast<std::size_t>(n)] -= corr[static_cast<std::size_t>(n)];
  return res;
}

PredictorStats Predictor::solve(const ReconstructionPoly& w, std::span<Vec> nodal_q) {
  PredictorStats stats;
  for (int sp = 0; sp < grid_.n_space(); ++sp)
    w_nodes_[static_cast<std::size_t>(sp)] = evaluate(w, grid_.xi()[static_cast<std::size_t>(sp)], 0);
  for (int j = 0; j < grid_.n_time(); ++j)
    for (int sp = 0; sp < grid_.n_space(); ++sp)
      nodal_q[static_cast<std::size_t>(grid_.node(sp, j))] = initial_guess(w, sp, j, &stats.initial_fallback);

  const int sweeps = config_.sweeps > 0 ? config_.sweeps : grid_.degree();
  for (int s = 0; s < sweeps && s < kMaxSweeps; ++s) {
    populate_stacks(nodal_q);
    compute_coefficients();
    const double res = newton_sweep(nodal_q);
    stats.residual[static_cast<std::size_t>(s)] = res;
    stats.sweeps_done = s + 1;
    if (config_.residual_tol > 0.0 && res <= config_.residual_tol) break;
  }
  return stats;
}

}  // namespace ader
