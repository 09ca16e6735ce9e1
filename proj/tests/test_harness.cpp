#include <cmath>
#include <string>

#include "ader/errors.hpp"
#include "ader/harness.hpp"
#include "doctest.h"

using namespace ader;

TEST_CASE("empirical order") {
  CHECK(empirical_order(4e-2, 1e-2) == doctest::Approx(2.0));
  CHECK(empirical_order(2.18e-5, 6.99e-7) == doctest::Approx(4.96).epsilon(1e-3));
  CHECK(empirical_order(3e-3, 3e-3) == 0.0);
  CHECK(std::isnan(empirical_order(0.0, 1e-3)));
  CHECK(std::isnan(empirical_order(1e-3, std::nan(""))));
}

TEST_CASE("norms of a constant offset") {
  RunConfig cfg;
  cfg.system = linear_system(1.0, -1.0);
  cfg.degree = 4;
  cfg.n_cells = 64;
  CellField f = project_initial(cfg);
  const NormSet base = error_norms(f, *cfg.system, 0.0, 4);
  CHECK(base.l1 < 1e-7);
  for (int i = 0; i < f.n_cells; ++i) f.averages[static_cast<std::size_t>(i * 2)] += 1e-3;
  const NormSet n = error_norms(f, *cfg.system, 0.0, 4);
  CHECK(n.l1 == doctest::Approx(1e-3).epsilon(1e-3));
  CHECK(n.l2 == doctest::Approx(1e-3).epsilon(1e-3));
  CHECK(n.linf == doctest::Approx(1e-3).epsilon(1e-3));
  const NormSet d = reference_distance(f, 4, project_initial(cfg), 4);
  CHECK(d.l1 == doctest::Approx(1e-3).epsilon(1e-9));
  const auto so = euler_system(1.4, EulerCase::kShuOsher, 0.2);
  CHECK_THROWS_AS(error_norms(f, *so, 0.0, 4), ConfigError);
}

TEST_CASE("orders only between doubled meshes") {
  ConvergenceReport rep{"linear", 3, {}};
  for (int n : {8, 16, 32, 50}) {
    ConvergenceRow row;
    row.cells = n;
    row.error = {1.0 / (n * n * n), 1.0 / (n * n * n), 1.0 / (n * n * n)};
    rep.rows.push_back(row);
  }
  empirical_orders(rep);
  CHECK(std::isnan(rep.rows[0].order.l1));
  CHECK(rep.rows[1].order.l1 == doctest::Approx(3.0));
  CHECK(rep.rows[2].order.linf == doctest::Approx(3.0));
  CHECK(std::isnan(rep.rows[3].order.l2));
  const std::string table = format_report(rep, false);
  CHECK(table.find("3.00") != std::string::npos);
  CHECK(table.find(" - ") != std::string::npos);
  CHECK(format_report_csv(rep, false).find(',') != std::string::npos);
}

TEST_CASE("argument parsing helpers") {
  CHECK(parse_int_list("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_int_list("8,16,32") == std::vector<int>{8, 16, 32});
  CHECK_THROWS_AS(parse_int_list("a,b"), ConfigError);
  CHECK(parse_boundary("periodic") == Boundary::kPeriodic);
  CHECK(parse_boundary("transmissive") == Boundary::kTransmissive);
  CHECK_THROWS_AS(parse_boundary("wall"), ConfigError);
  CHECK_THROWS_AS(preset("nope"), ConfigError);
}

TEST_CASE("presets") {
  const Preset ly = preset("leveque-yee");
  CHECK(ly.beta == -10000.0);
  CHECK(ly.cfl == 0.2);
  CHECK(ly.cells == 300);
  Overrides o;
  o.beta = -1000.0;
  o.cells = 150;
  const Preset p = apply_overrides(ly, o);
  CHECK(p.beta == -1000.0);
  CHECK(make_config(p, 3, 150, o).degree == 2);
  CHECK_THROWS_AS(make_config(p, 6, 150, o), ConfigError);
  const Preset so = preset("shu-osher");
  CHECK(so.x_left == -1.0);
  CHECK(so.t_out == doctest::Approx(0.47));
  CHECK(preset_names().size() == 5);
}
