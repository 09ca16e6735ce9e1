#include "ader/scheme.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "ader/errors.hpp"
#include "ader/kernels/kernels.hpp"
#include "ader/parallel.hpp"

namespace ader {

void RunConfig::validate() const {
  if (!system) throw ConfigError("run config has no system");
  if (degree < 1 || degree > kMaxDegree) throw ConfigError("order must be between 2 and 5");
  if (n_cells < 3) throw ConfigError("need at least 3 cells");
  if (!(x_right > x_left)) throw ConfigError("domain must satisfy x_left < x_right");
  if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("CFL number must lie in (0, 1)");
  if (!(t_out >= 0.0)) throw ConfigError("t_out must be non-negative");
}

Vec rusanov_flux(const Vec& ql, const Vec& qr, const HyperbolicSystem& system) {
  system.check_admissible(ql);
  system.check_admissible(qr);
  const double s = std::max(system.eigenvalues(ql).max_abs(), system.eigenvalues(qr).max_abs());
  return (system.flux(ql) + system.flux(qr)) * 0.5 - (qr - ql) * (0.5 * s);
}

Vec interface_flux(std::span<const Vec> left, std::span<const Vec> right, const NodeGrid& grid,
                   const HyperbolicSystem& system) {
  const int last = grid.n_space() - 1;
  Vec f(system.num_vars());
  for (int j = 0; j < grid.n_time(); ++j) {
    const Vec& ql = left[static_cast<std::size_t>(grid.node(last, j))];
    const Vec& qr = right[static_cast<std::size_t>(grid.node(0, j))];
    f += rusanov_flux(ql, qr, system) * grid.time_weights()[static_cast<std::size_t>(j)];
  }
  return f;
}

Vec cell_source(std::span<const Vec> nodes, const NodeGrid& grid, const HyperbolicSystem& system) {
  Vec s(system.num_vars());
  if (!system.has_source()) return s;
  for (int j = 0; j < grid.n_time(); ++j) {
    Vec level(system.num_vars());
    for (int sp = 0; sp < grid.n_space(); ++sp)
      level += system.source(nodes[static_cast<std::size_t>(grid.node(sp, j))]) *
               grid.space_weights()[static_cast<std::size_t>(sp)];
    s += level * grid.time_weights()[static_cast<std::size_t>(j)];
  }
  return s;
}

double max_wave_speed(const CellField& field, const HyperbolicSystem& system) {
  double lambda = 0.0;
  for (int i = 0; i < field.n_cells; ++i) {
    const Vec q = field.cell(i);
    try {
      lambda = std::max(lambda, system.eigenvalues(q).max_abs());
    } catch (const PhysicsError& e) {
      std::ostringstream msg;
      msg << "cell " << i << ": " << e.what();
      throw PhysicsError(msg.str());
    }
  }
  return lambda;
}

double cfl_timestep(const CellField& field, const HyperbolicSystem& system, double cfl, double t,
                    double t_out) {
  const double lambda = max_wave_speed(field, system);
  if (!(lambda > 0.0)) throw ConfigError("all wave speeds are zero; CFL time step undefined");
  double dt = cfl * field.dx / lambda;
  if (t_out > 0.0 && t + dt > t_out) dt = t_out - t;
  return dt;
}

CellField project_initial(const RunConfig& config) {
  config.validate();
  const auto& sys = *config.system;
  CellField field(config.n_cells, sys.num_vars(), config.x_left, config.x_right, config.boundary);
  const QuadratureRule rule = gauss_legendre_unit(5);
  for (int i = 0; i < field.n_cells; ++i) {
    Vec avg(field.m);
    const double x0 = field.x_left + i * field.dx;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g)
      avg += sys.initial_condition(x0 + rule.nodes[g] * field.dx) * rule.weights[g];
    field.set_cell(i, avg);
  }
  return field;
}

Solver::Solver(RunConfig config)
    : config_(std::move(config)),
      weno_(config_.degree, config_.weno),
      threads_(config_.threads > 0 ? config_.threads : default_thread_count()) {
  config_.validate();
}

namespace {

template <class Error>
[[noreturn]] void rethrow_at(const char* what, int index, const Error& e) {
  std::ostringstream msg;
  msg << what << ' ' << index << ": " << e.what();
  throw Error(msg.str());
}

}  // namespace

void Solver::step(CellField& field, double dt, RunDiagnostics* diag) const {
  const auto& sys = *config_.system;
  const int n = field.n_cells;
  const int m = field.m;
  const int count = n + 2;  // cells -1 .. n
  const NodeGrid grid(config_.degree, field.dx, dt);
  const auto nodes_per_cell = static_cast<std::size_t>(grid.n_nodes());

  std::vector<ReconstructionPoly> polys;
  weno_.reconstruct(field, -1, n + 1, polys);

  std::vector<Vec> nodal(static_cast<std::size_t>(count) * nodes_per_cell, Vec(m));
  std::vector<double> chunk_residual(static_cast<std::size_t>(threads_), 0.0);
  std::vector<long long> chunk_fallbacks(static_cast<std::size_t>(threads_), 0);
  auto cell_nodes = [&](int c) {
    return std::span<Vec>(nodal.data() + static_cast<std::size_t>(c) * nodes_per_cell, nodes_per_cell);
  };

  parallel_for(count, threads_, [&](int begin, int end, int chunk) {
    Predictor pred(sys, grid, config_.predictor);
    for (int c = begin; c < end; ++c) {
      try {
        const PredictorStats st = pred.solve(polys[static_cast<std::size_t>(c)], cell_nodes(c));
        for (const Vec& q : cell_nodes(c))
          if (!q.all_finite()) throw SolverError("predictor diverged (non-finite nodal value)");
        auto& r = chunk_residual[static_cast<std::size_t>(chunk)];
        r = std::max(r, st.final_residual());
        if (st.initial_fallback) ++chunk_fallbacks[static_cast<std::size_t>(chunk)];
      } catch (const PhysicsError& e) {
        rethrow_at("predictor, cell", c - 1, e);
      } catch (const SolverError& e) {
        rethrow_at("predictor, cell", c - 1, e);
      }
    }
  });

  std::vector<double> flux(static_cast<std::size_t>((n + 1) * m));
  parallel_for(n + 1, threads_, [&](int begin, int end, int) {
    for (int f = begin; f < end; ++f) {
      try {
        const Vec fl = interface_flux(cell_nodes(f), cell_nodes(f + 1), grid, sys);
        for (int k = 0; k < m; ++k) flux[static_cast<std::size_t>(f * m + k)] = fl[k];
      } catch (const PhysicsError& e) {
        rethrow_at("interface", f, e);
      }
    }
  });

  std::vector<double> source(static_cast<std::size_t>(n * m));
  if (sys.has_source()) {
    parallel_for(n, threads_, [&](int begin, int end, int) {
      for (int i = begin; i < end; ++i) {
        const Vec s = cell_source(cell_nodes(i + 1), grid, sys);
        for (int k = 0; k < m; ++k) source[static_cast<std::size_t>(i * m + k)] = s[k];
      }
    });
  }

  std::vector<double> next(field.averages.size());
  kernels::fv_update(field.averages.data(), flux.data(), source.data(), field.averages.size(),
                     static_cast<std::size_t>(m), dt / field.dx, dt, next.data());
  field.averages.swap(next);

  for (int i = 0; i < n; ++i) {
    try {
      sys.check_admissible(field.cell(i));
    } catch (const PhysicsError& e) {
      rethrow_at("update, cell", i, e);
    }
  }

  if (diag) {
    for (double r : chunk_residual) diag->max_residual = std::max(diag->max_residual, r);
    for (long long f : chunk_fallbacks) diag->initial_fallbacks += f;
  }
}

RunResult Solver::run() const {
  RunResult result;
  result.field = project_initial(config_);
  const auto& sys = *config_.system;
  double t = 0.0;
  while (t < config_.t_out) {
    double dt = cfl_timestep(result.field, sys, config_.cfl, t, config_.t_out);
    // Avoid a round-off sized extra step at the end.
    const bool last = t + dt >= config_.t_out * (1.0 - 1e-14);
    if (last) dt = config_.t_out - t;
    if (config_.log) {
      *config_.log << t << ' ' << dt << ' ' << max_wave_speed(result.field, sys) << '\n';
    }
    const auto start = std::chrono::steady_clock::now();
    try {
      step(result.field, dt, &result.diagnostics);
    } catch (const PhysicsError& e) {
      rethrow_at("step", result.diagnostics.steps, e);
    } catch (const SolverError& e) {
      rethrow_at("step", result.diagnostics.steps, e);
    }
    result.diagnostics.seconds +=
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ++result.diagnostics.steps;
    t = last ? config_.t_out : t + dt;
  }
  result.t = t;
  return result;
}

}  // namespace ader
