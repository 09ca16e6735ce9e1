#include <cmath>
#include <cstring>
#include <vector>

#include "ader/errors.hpp"
#include "ader/scheme.hpp"
#include "doctest.h"

using namespace ader;

namespace {

RunConfig base_config(SystemPtr sys, int degree, int cells) {
  RunConfig cfg;
  cfg.system = std::move(sys);
  cfg.degree = degree;
  cfg.n_cells = cells;
  cfg.t_out = 0.1;
  cfg.threads = 1;
  return cfg;
}

std::vector<double> totals(const CellField& f) {
  std::vector<double> s(static_cast<std::size_t>(f.m), 0.0);
  for (int i = 0; i < f.n_cells; ++i)
    for (int c = 0; c < f.m; ++c) s[static_cast<std::size_t>(c)] += f.cell(i)[c] * f.dx;
  return s;
}

}  // namespace

TEST_CASE("Rusanov flux") {
  const auto lin = linear_system(1.0, 0.0);
  const Vec f = rusanov_flux({1.0, 0.0}, {0.0, 1.0}, *lin);
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[1] == doctest::Approx(0.0));
  const auto eu = euler_system(1.4);
  const Vec q = primitive_to_conserved({1.1, 0.3, 0.9}, 1.4);
  CHECK((rusanov_flux(q, q, *eu) - eu->flux(q)).max_abs() < 1e-15);
  // Scalar advection: upwinding.
  const auto ly = leveque_yee_system(-1.0);
  CHECK(rusanov_flux({0.8}, {0.1}, *ly)[0] == doctest::Approx(0.8));
  CHECK_THROWS_AS(rusanov_flux(q, {1.0, 0.0, -1.0}, *eu), PhysicsError);
}

TEST_CASE("cell source average") {
  const auto lin = linear_system(1.0, -1.0);
  for (int degree = 1; degree <= 4; ++degree) {
    const NodeGrid g(degree, 0.1, 0.05);
    std::vector<Vec> nodes(static_cast<std::size_t>(g.n_nodes()), Vec(2));
    for (int j = 0; j < g.n_time(); ++j)
      for (int s = 0; s < g.n_space(); ++s) {
        const double xi = g.xi()[static_cast<std::size_t>(s)], tau = g.tau()[static_cast<std::size_t>(j)];
        nodes[static_cast<std::size_t>(g.node(s, j))] = {0.5 + 2.0 * xi + 0.6 * tau, -1.0 + xi};
      }
    const Vec avg = cell_source(nodes, g, *lin);
    CHECK(avg[0] == doctest::Approx(-(0.5 + 0.3)).epsilon(1e-14));
    CHECK(avg[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  const auto free = linear_system(1.0, 0.0);
  const NodeGrid g(2, 0.1, 0.05);
  std::vector<Vec> nodes(static_cast<std::size_t>(g.n_nodes()), Vec{1.0, 1.0});
  CHECK(cell_source(nodes, g, *free).max_abs() == 0.0);
}

TEST_CASE("CFL time step") {
  const auto lin = linear_system(1.0, -1.0);
  const CellField f(100, 2, 0.0, 1.0, Boundary::kPeriodic);
  CHECK(cfl_timestep(f, *lin, 0.9) == doctest::Approx(9e-3));
  CHECK(cfl_timestep(f, *lin, 0.9, 0.995, 1.0) == doctest::Approx(5e-3));
  const auto still = linear_system(0.0, -1.0);
  CHECK_THROWS_AS(cfl_timestep(f, *still, 0.9), ConfigError);
}

TEST_CASE("run configuration validation") {
  auto cfg = base_config(linear_system(1.0, -1.0), 2, 16);
  CHECK_NOTHROW(cfg.validate());
  auto bad = cfg;
  bad.degree = 5;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.cfl = 1.2;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.n_cells = 2;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.t_out = -1.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("periodic zero-source runs conserve") {
  for (int degree = 1; degree <= 4; ++degree) {
    auto cfg = base_config(euler_system(1.4), degree, 32);
    const CellField start = project_initial(cfg);
    const RunResult r = Solver(cfg).run();
    CHECK(r.t == doctest::Approx(0.1).epsilon(1e-14));
    const auto a = totals(start), b = totals(r.field);
    for (std::size_t c = 0; c < a.size(); ++c) CHECK(std::abs(a[c] - b[c]) < 1e-12);
  }
}

TEST_CASE("equilibria are preserved") {
  for (int degree = 1; degree <= 4; ++degree) {
    for (double v : {0.0, 1.0}) {
      auto cfg = base_config(leveque_yee_system(-10000.0), degree, 20);
      cfg.boundary = Boundary::kTransmissive;
      CellField f(20, 1, 0.0, 1.0, Boundary::kTransmissive);
      for (int i = 0; i < 20; ++i) f.set_cell(i, {v});
      const Solver s(cfg);
      for (int n = 0; n < 5; ++n) s.step(f, 0.01);
      for (int i = 0; i < 20; ++i) CHECK(std::abs(f.cell(i)[0] - v) <= 1e-14);
    }
  }
}

TEST_CASE("t_out = 0 returns the projection") {
  auto cfg = base_config(linear_system(1.0, -1.0), 3, 16);
  cfg.t_out = 0.0;
  const RunResult r = Solver(cfg).run();
  CHECK(r.diagnostics.steps == 0);
  CHECK(r.field.averages == project_initial(cfg).averages);
}

TEST_CASE("results do not depend on the thread count") {
  auto cfg = base_config(nonlinear_system(-1.0), 4, 40);
  cfg.t_out = 0.05;
  const RunResult a = Solver(cfg).run();
  cfg.threads = 3;
  const RunResult b = Solver(cfg).run();
  REQUIRE(a.field.averages.size() == b.field.averages.size());
  CHECK(std::memcmp(a.field.averages.data(), b.field.averages.data(),
                    sizeof(double) * a.field.averages.size()) == 0);
}

TEST_CASE("inadmissible states abort with context") {
  auto cfg = base_config(euler_system(1.4), 2, 10);
  CellField f = project_initial(cfg);
  f.set_cell(4, {1.0, 0.0, -1.0});
  try {
    Solver(cfg).step(f, 1e-3);
    FAIL("expected PhysicsError");
  } catch (const PhysicsError& e) {
    CHECK(std::string(e.what()).find("cell") != std::string::npos);
  }
}
