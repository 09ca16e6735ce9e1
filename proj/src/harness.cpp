#include "ader/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ader/errors.hpp"

namespace ader {

namespace {

const QuadratureRule& gauss5() {
  static const QuadratureRule rule = gauss_legendre_unit(5);
  return rule;
}

// Accumulates |e| samples into the three norms.
struct NormAccumulator {
  NormSet n;
  void add(double err, double weight) {
    const double a = std::abs(err);
    n.linf = std::isfinite(a) ? std::max(n.linf, a) : a;
    n.l1 += weight * a;
    n.l2 += weight * a * a;
  }
  NormSet finish() const {
    if (!std::isfinite(n.l1)) return {std::nan(""), std::nan(""), std::nan("")};
    return {n.linf, n.l1, std::sqrt(n.l2)};
  }
};

std::string format_value(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string format_order(double v) { return std::isfinite(v) ? format_value("%.2f", v) : "-"; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
}

}  // namespace

NormSet error_norms(const CellField& field, const HyperbolicSystem& system, double t, int degree,
                    int component, const WenoConfig& weno) {
  if (!system.exact_solution(field.x_left, t))
    throw ConfigError("system '" + system.name() + "' has no exact solution");
  const auto polys = WenoReconstructor(degree, weno).reconstruct(field);
  const auto& rule = gauss5();
  NormAccumulator acc;
  for (int i = 0; i < field.n_cells; ++i) {
    const double x0 = field.x_left + i * field.dx;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double xi = rule.nodes[g] - 0.5;
      const double w = evaluate(polys[static_cast<std::size_t>(i)], xi)[component];
      const double e = (*system.exact_solution(x0 + rule.nodes[g] * field.dx, t))[component];
      acc.add(w - e, rule.weights[g] * field.dx);
    }
  }
  return acc.finish();
}

NormSet reference_distance(const CellField& field, int degree, const CellField& reference,
                           int reference_degree, int component) {
  const auto polys = reconstruct(field, degree);
  const auto ref = reconstruct(reference, reference_degree);
  const auto& rule = gauss5();
  NormAccumulator acc;
  for (int i = 0; i < field.n_cells; ++i) {
    const double x0 = field.x_left + i * field.dx;
    for (std::size_t g = 0; g < rule.nodes.size(); ++g) {
      const double x = x0 + rule.nodes[g] * field.dx;
      const int j = std::clamp(static_cast<int>(std::floor((x - reference.x_left) / reference.dx)), 0,
                               reference.n_cells - 1);
      const double xi_ref = (x - reference.x_left) / reference.dx - j - 0.5;
      const double w = evaluate(polys[static_cast<std::size_t>(i)], rule.nodes[g] - 0.5)[component];
      const double r = evaluate(ref[static_cast<std::size_t>(j)], xi_ref)[component];
      acc.add(w - r, rule.weights[g] * field.dx);
    }
  }
  return acc.finish();
}

double empirical_order(double coarse, double fine) {
  if (!(coarse > 0.0) || !(fine > 0.0) || !std::isfinite(coarse) || !std::isfinite(fine))
    return std::nan("");
  return std::log2(coarse / fine);
}

void empirical_orders(ConvergenceReport& report) {
  for (std::size_t r = 0; r < report.rows.size(); ++r) {
    auto& row = report.rows[r];
    row.order = {std::nan(""), std::nan(""), std::nan("")};
    if (r == 0 || report.rows[r - 1].cells * 2 != row.cells) continue;
    const auto& prev = report.rows[r - 1].error;
    row.order = {empirical_order(prev.linf, row.error.linf), empirical_order(prev.l1, row.error.l1),
                 empirical_order(prev.l2, row.error.l2)};
  }
}

std::string format_report(const ConvergenceReport& report, bool with_timing) {
  std::ostringstream out;
  out << report.system << ", theoretical order " << report.order << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%6s %13s %7s %13s %7s %13s %7s", "Mesh", "Linf-err", "Linf-ord",
                "L1-err", "L1-ord", "L2-err", "L2-ord");
  out << line << (with_timing ? "       CPU" : "") << '\n';
  for (const auto& row : report.rows) {
    std::snprintf(line, sizeof line, "%6d %13.6e %7s %13.6e %7s %13.6e %7s", row.cells, row.error.linf,
                  format_order(row.order.linf).c_str(), row.error.l1, format_order(row.order.l1).c_str(),
                  row.error.l2, format_order(row.order.l2).c_str());
    out << line;
    if (with_timing) out << format_value(" %9.4f", row.seconds);
    out << '\n';
  }
  return out.str();
}

std::string format_report_csv(const ConvergenceReport& report, bool with_timing) {
  std::ostringstream out;
  out << "system,order,cells,linf_err,linf_ord,l1_err,l1_ord,l2_err,l2_ord" << (with_timing ? ",cpu" : "")
      << '\n';
  for (const auto& row : report.rows) {
    out << report.system << ',' << report.order << ',' << row.cells << ','
        << format_value("%.9e", row.error.linf) << ',' << format_order(row.order.linf) << ','
        << format_value("%.9e", row.error.l1) << ',' << format_order(row.order.l1) << ','
        << format_value("%.9e", row.error.l2) << ',' << format_order(row.order.l2);
    if (with_timing) out << ',' << format_value("%.6f", row.seconds);
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> preset_names() {
  return {"linear", "nonlinear", "leveque-yee", "euler-smooth", "shu-osher"};
}

Preset preset(const std::string& name) {
  Preset p;
  p.name = name;
  p.orders = {2, 3, 4, 5};
  if (name == "linear") {
    p.beta = -1.0;
    p.meshes = {8, 16, 32, 64, 128};
    p.cells = 128;
  } else if (name == "nonlinear") {
    p.beta = -1.0;
    p.t_out = 0.1;
    p.meshes = {32, 64, 128, 256, 512};
    p.cells = 128;
  } else if (name == "leveque-yee") {
    p.beta = -10000.0;
    p.cfl = 0.2;
    p.t_out = 0.3;
    p.boundary = Boundary::kTransmissive;
    p.meshes = {75, 150, 300};
    p.cells = 300;
  } else if (name == "euler-smooth") {
    p.meshes = {8, 16, 32, 64, 128};
    p.cells = 128;
  } else if (name == "shu-osher") {
    p.x_left = -1.0;
    p.cfl = 0.5;
    p.t_out = 0.47;
    p.boundary = Boundary::kTransmissive;
    p.orders = {2, 3};
    p.meshes = {300};
    p.cells = 300;
  } else {
    throw ConfigError("unknown preset '" + name + "'");
  }
  return p;
}

Preset apply_overrides(Preset p, const Overrides& o) {
  if (o.orders) p.orders = *o.orders;
  if (o.meshes) p.meshes = *o.meshes;
  if (o.cells) p.cells = *o.cells;
  if (o.cfl) p.cfl = *o.cfl;
  if (o.t_out) p.t_out = *o.t_out;
  if (o.beta) p.beta = *o.beta;
  if (o.amplitude) p.amplitude = *o.amplitude;
  if (o.boundary) p.boundary = *o.boundary;
  return p;
}

SystemPtr make_system(const Preset& p) {
  if (p.name == "linear") return linear_system(1.0, p.beta);
  if (p.name == "nonlinear") return nonlinear_system(p.beta);
  if (p.name == "leveque-yee") return leveque_yee_system(p.beta);
  if (p.name == "euler-smooth") return euler_system(1.4, EulerCase::kSmoothWave);
  if (p.name == "shu-osher") return euler_system(1.4, EulerCase::kShuOsher, p.amplitude);
  throw ConfigError("unknown preset '" + p.name + "'");
}

RunConfig make_config(const Preset& p, int order, int cells, const Overrides& o) {
  if (order < 2 || order > kMaxDegree + 1) throw ConfigError("order must be between 2 and 5");
  RunConfig c;
  c.system = make_system(p);
  c.degree = order - 1;
  c.n_cells = cells;
  c.x_left = p.x_left;
  c.x_right = p.x_right;
  c.cfl = p.cfl;
  c.t_out = p.t_out;
  c.boundary = p.boundary;
  c.predictor = o.predictor;
  if (o.threads) c.threads = *o.threads;
  return c;
}

ConvergenceReport run_convergence(const Preset& p, int order, const Overrides& o) {
  ConvergenceReport report;
  report.system = p.name;
  report.order = order;
  for (int cells : p.meshes) {
    const RunConfig cfg = make_config(p, order, cells, o);
    const RunResult res = Solver(cfg).run();
    ConvergenceRow row;
    row.cells = cells;
    row.error = error_norms(res.field, *cfg.system, res.t, cfg.degree);
    row.seconds = res.diagnostics.seconds;
    row.steps = res.diagnostics.steps;
    report.rows.push_back(row);
  }
  empirical_orders(report);
  return report;
}

std::string format_profile(const CellField& field) {
  std::ostringstream out;
  for (int i = 0; i < field.n_cells; ++i) {
    out << format_value("%.10e", field.center(i));
    const Vec q = field.cell(i);
    for (int c = 0; c < field.m; ++c) out << ' ' << format_value("%.15e", q[c]);
    out << '\n';
  }
  return out.str();
}

Boundary parse_boundary(const std::string& s) {
  if (s == "periodic") return Boundary::kPeriodic;
  if (s == "transmissive") return Boundary::kTransmissive;
  throw ConfigError("unknown boundary '" + s + "' (periodic|transmissive)");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  try {
    while (std::getline(in, item, ',')) {
      if (item.empty()) continue;
      const auto dots = item.find("..");
      if (dots == std::string::npos) {
        out.push_back(std::stoi(item));
        continue;
      }
      const int a = std::stoi(item.substr(0, dots));
      const int b = std::stoi(item.substr(dots + 2));
      for (int v = a; v <= b; ++v) out.push_back(v);
    }
  } catch (const std::logic_error&) {
    throw ConfigError("malformed integer list '" + s + "'");
  }
  if (out.empty()) throw ConfigError("empty integer list");
  return out;
}

std::vector<std::filesystem::path> run_preset(const std::string& name, const Overrides& o,
                                              const std::filesystem::path& out_dir,
                                              bool convergence) {
  const Preset p = apply_overrides(preset(name), o);
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  const std::vector<int> orders = convergence ? p.orders : std::vector<int>{o.order.value_or(3)};
  auto emit = [&](const std::string& file, const std::string& text) {
    written.push_back(out_dir / file);
    write_file(written.back(), text);
  };

  if (name == "shu-osher") {
    const RunResult ref = Solver(make_config(p, 3, 2000, o)).run();
    emit("shu-osher_reference_order3_N2000.dat", format_profile(ref.field));
    std::ostringstream dist;
    dist << "order cells l1 l2 linf\n";
    for (int order : orders) {
      const RunResult res = Solver(make_config(p, order, p.cells, o)).run();
      emit("shu-osher_order" + std::to_string(order) + "_N" + std::to_string(p.cells) + ".dat",
           format_profile(res.field));
      const NormSet d = reference_distance(res.field, order - 1, ref.field, 2);
      dist << order << ' ' << p.cells << ' ' << format_value("%.9e", d.l1) << ' '
           << format_value("%.9e", d.l2) << ' ' << format_value("%.9e", d.linf) << '\n';
    }
    emit("shu-osher_distance.txt", dist.str());
    return written;
  }

  if (convergence) {
    for (int order : orders) {
      const ConvergenceReport rep = run_convergence(p, order, o);
      const std::string stem = name + "_order" + std::to_string(order);
      emit(stem + ".txt", format_report(rep));
      emit(stem + ".csv", format_report_csv(rep));
    }
    return written;
  }

  const int order = orders.front();
  const RunConfig cfg = make_config(p, order, p.cells, o);
  const RunResult res = Solver(cfg).run();
  const std::string stem = name + "_order" + std::to_string(order) + "_N" + std::to_string(p.cells);
  emit(stem + ".dat", format_profile(res.field));
  if (cfg.system->exact_solution(p.x_left, res.t)) {
    const NormSet n = error_norms(res.field, *cfg.system, res.t, cfg.degree);
    std::ostringstream out;
    out << "steps " << res.diagnostics.steps << "\nlinf " << format_value("%.9e", n.linf) << "\nl1 "
        << format_value("%.9e", n.l1) << "\nl2 " << format_value("%.9e", n.l2) << '\n';
    emit(stem + "_errors.txt", out.str());
  }
  return written;
}

}  // namespace ader
