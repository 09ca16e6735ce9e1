#pragma once

#include <span>
#include <vector>

#include "ader/linalg.hpp"

namespace ader {

enum class Boundary { kPeriodic, kTransmissive };

/// Uniform 1D mesh with cell averages at one time level, stored cell-major
/// (averages[i * m + c]).
struct CellField {
  int n_cells = 0;
  int m = 0;
  double dx = 0.0;
  double x_left = 0.0;
  Boundary boundary = Boundary::kPeriodic;
  std::vector<double> averages;

  CellField() = default;
  CellField(int n, int vars, double x0, double x1, Boundary bc);

  /// Throws ConfigError unless n_cells >= 3, dx > 0 and storage matches.
  void validate() const;

  double center(int i) const { return x_left + (i + 0.5) * dx; }
  double x_right() const { return x_left + n_cells * dx; }

  /// Maps any index (including ghosts) to a stored cell per the boundary rule.
  int resolve(int i) const;

  Vec cell(int i) const;
  void set_cell(int i, const Vec& q);
  std::span<double> data() { return averages; }
  std::span<const double> data() const { return averages; }
};

}  // namespace ader
