#pragma once

// Error norms, empirical orders, named test presets and file output for
// convergence studies.

#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ader/scheme.hpp"

namespace ader {

struct NormSet {
  double linf = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
};

/// Norms of W_i(x) - Q^e(x, t) on one component, with W_i the degree-M WENO
/// reconstruction of the final averages. Integrals use 5-point Gauss per
/// cell; L_inf is the maximum over the same samples. Throws ConfigError if
/// the system has no exact solution.
NormSet error_norms(const CellField& field, const HyperbolicSystem& system, double t, int degree,
                    int component = 0, const WenoConfig& weno = {});

/// Same norms against an arbitrary reference field (e.g. a fine-mesh run),
/// sampling the reference reconstruction at the Gauss points.
NormSet reference_distance(const CellField& field, int degree, const CellField& reference,
                           int reference_degree, int component = 0);

/// log2(coarse / fine); NaN when either error is zero or not finite.
double empirical_order(double coarse, double fine);

struct ConvergenceRow {
  int cells = 0;
  NormSet error;
  /// NaN for the first row and whenever the order is undefined.
  NormSet order{std::nan(""), std::nan(""), std::nan("")};
  double seconds = 0.0;
  int steps = 0;
};

struct ConvergenceReport {
  std::string system;
  int order = 0;  // theoretical order M + 1
  std::vector<ConvergenceRow> rows;
};

/// Fills row orders for consecutive meshes whose cell counts differ by a
/// factor of two; other rows keep the undefined marker.
void empirical_orders(ConvergenceReport& report);

/// Aligned table; the CPU column is omitted when `with_timing` is false so
/// that the numeric output is reproducible.
std::string format_report(const ConvergenceReport& report, bool with_timing = true);
/// Comma-separated variant of format_report.
std::string format_report_csv(const ConvergenceReport& report, bool with_timing = true);

struct Preset {
  std::string name;
  double x_left = 0.0;
  double x_right = 1.0;
  Boundary boundary = Boundary::kPeriodic;
  double cfl = 0.9;
  double t_out = 1.0;
  double beta = 0.0;
  /// Density-wave amplitude of the shu-osher data.
  double amplitude = 1.0;
  std::vector<int> orders;
  std::vector<int> meshes;
  int cells = 0;  // single-run default
};

/// Throws ConfigError for unknown names.
Preset preset(const std::string& name);
std::vector<std::string> preset_names();

struct Overrides {
  std::optional<int> order;
  std::optional<std::vector<int>> orders;
  std::optional<std::vector<int>> meshes;
  std::optional<int> cells;
  std::optional<double> cfl;
  std::optional<double> t_out;
  std::optional<double> beta;
  std::optional<double> amplitude;
  std::optional<Boundary> boundary;
  std::optional<int> threads;
  PredictorConfig predictor{};
};

Preset apply_overrides(Preset p, const Overrides& o);

/// System for a preset with its (possibly overridden) beta.
SystemPtr make_system(const Preset& p);

/// Run configuration for one order (2..5) and mesh size.
RunConfig make_config(const Preset& p, int order, int cells, const Overrides& o = {});

/// Runs every mesh of the preset at one order and computes orders.
ConvergenceReport run_convergence(const Preset& p, int order, const Overrides& o = {});

/// `x v1 .. vm` per cell centre.
std::string format_profile(const CellField& field);

Boundary parse_boundary(const std::string& s);
/// Accepts "2,3,4" and ranges "2..5".
std::vector<int> parse_int_list(const std::string& s);

/// Writes profiles (single runs) or convergence tables under `out_dir`.
/// For shu-osher it also writes the 2000-cell third-order reference profile
/// and the distance of each run to it. Returns the files written.
std::vector<std::filesystem::path> run_preset(const std::string& name, const Overrides& o,
                                              const std::filesystem::path& out_dir,
                                              bool convergence);

}  // namespace ader
