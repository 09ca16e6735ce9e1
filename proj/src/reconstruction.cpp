#include "ader/reconstruction.hpp"

#include <cmath>
#include <sstream>

#include "ader/errors.hpp"

namespace ader {

CellField::CellField(int n, int vars, double x0, double x1, Boundary bc)
    : n_cells(n), m(vars), dx((x1 - x0) / n), x_left(x0), boundary(bc),
      averages(static_cast<std::size_t>(n * vars), 0.0) {
  validate();
}

void CellField::validate() const {
  if (n_cells < 3) throw ConfigError("cell field needs at least 3 cells");
  if (!(dx > 0.0)) throw ConfigError("cell field needs dx > 0");
  if (m < 1 || m > kMaxVars) throw ConfigError("unsupported number of unknowns");
  if (averages.size() != static_cast<std::size_t>(n_cells * m))
    throw ConfigError("cell field storage does not match n_cells * m");
}

int CellField::resolve(int i) const {
  if (i >= 0 && i < n_cells) return i;
  if (boundary == Boundary::kPeriodic) return ((i % n_cells) + n_cells) % n_cells;
  return i < 0 ? 0 : n_cells - 1;
}

Vec CellField::cell(int i) const {
  const int j = resolve(i);
  Vec q(m);
  for (int c = 0; c < m; ++c) q[c] = averages[static_cast<std::size_t>(j * m + c)];
  return q;
}

void CellField::set_cell(int i, const Vec& q) {
  for (int c = 0; c < m; ++c) averages[static_cast<std::size_t>(i * m + c)] = q[c];
}

Vec evaluate(const ReconstructionPoly& poly, double xi, int l) {
  Vec out(poly.m);
  if (l > poly.degree) return out;
  for (int comp = 0; comp < poly.m; ++comp) {
    // Horner on the l-th derivative: sum_k k!/(k-l)! c_k xi^(k-l)
    double acc = 0.0;
    for (int k = poly.degree; k >= l; --k) {
      double factor = 1.0;
      for (int r = 0; r < l; ++r) factor *= (k - r);
      acc = acc * xi + factor * poly.coef(k, comp);
    }
    out[comp] = acc;
  }
  return out;
}

namespace {

// Mean of xi^k over the unit cell centred at `offset`.
double cell_moment(double offset, int k) {
  return (std::pow(offset + 0.5, k + 1) - std::pow(offset - 0.5, k + 1)) / (k + 1);
}

double falling_factorial(int k, int l) {
  double f = 1.0;
  for (int r = 0; r < l; ++r) f *= (k - r);
  return f;
}

kernels::WenoTables build_tables(int degree, const WenoConfig& cfg) {
  if (degree < 1 || degree > kMaxDegree) {
    std::ostringstream msg;
    msg << "unsupported reconstruction degree M=" << degree;
    throw ConfigError(msg.str());
  }
  kernels::WenoTables t;
  t.degree = degree;
  t.epsilon = cfg.epsilon;
  t.power = cfg.power;

  // Sided stencils end/start at the cell itself. For M = 3 no stencil of
  // four cells is centred; the central candidate leans one cell left.
  const double c = cfg.lambda_central;
  const double s = cfg.lambda_sided;
  switch (degree) {
    case 1:
      t.n_stencils = 2;
      t.start = {-1, 0, 0, 0};
      t.linear_weight = {s, s, 0, 0};
      break;
    case 2:
      t.n_stencils = 3;
      t.start = {-2, -1, 0, 0};
      t.linear_weight = {s, c, s, 0};
      break;
    case 3:
      t.n_stencils = 3;
      t.start = {-3, -2, 0, 0};
      t.linear_weight = {s, c, s, 0};
      break;
    case 4:
      t.n_stencils = 3;
      t.start = {-4, -2, 0, 0};
      t.linear_weight = {s, c, s, 0};
      break;
  }

  const int nc = degree + 1;
  for (int st = 0; st < t.n_stencils; ++st) {
    DenseMatrix v(nc, nc);
    for (int j = 0; j < nc; ++j)
      for (int k = 0; k < nc; ++k) v(j, k) = cell_moment(t.start[st] + j, k);
    const auto inv = invert(v);
    if (!inv) throw ConfigError("singular WENO stencil matrix");
    for (int k = 0; k < nc; ++k)
      for (int j = 0; j < nc; ++j) t.coeff[st][k][j] = (*inv)(k, j);
  }

  for (int a = 0; a < nc; ++a)
    for (int b = 0; b < nc; ++b) {
      double sum = 0.0;
      for (int l = 1; l <= degree; ++l) {
        if (a < l || b < l) continue;
        sum += falling_factorial(a, l) * falling_factorial(b, l) * cell_moment(0.0, a + b - 2 * l);
      }
      t.smoothness[a][b] = sum;
    }
  return t;
}

}  // namespace

WenoReconstructor::WenoReconstructor(int degree, WenoConfig config)
    : tables_(build_tables(degree, config)) {}

void WenoReconstructor::reconstruct(const CellField& field, int first, int last,
                                    std::vector<ReconstructionPoly>& out) const {
  const int degree = tables_.degree;
  const int count = last - first;
  const int pad = degree;
  out.assign(static_cast<std::size_t>(count), ReconstructionPoly{degree, field.m, {}});

  std::vector<double> padded(static_cast<std::size_t>(count + 2 * pad));
  std::vector<double> coeffs(static_cast<std::size_t>((degree + 1) * count));
  for (int comp = 0; comp < field.m; ++comp) {
    for (int p = 0; p < count + 2 * pad; ++p) {
      const int cell = field.resolve(first - pad + p);
      padded[static_cast<std::size_t>(p)] = field.averages[static_cast<std::size_t>(cell * field.m + comp)];
    }
    kernels::weno(tables_, padded.data() + pad, static_cast<std::size_t>(count), coeffs.data(),
                  static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
      for (int k = 0; k <= degree; ++k)
        out[static_cast<std::size_t>(i)].coef(k, comp) = coeffs[static_cast<std::size_t>(k * count + i)];
  }
}

std::vector<ReconstructionPoly> WenoReconstructor::reconstruct(const CellField& field) const {
  std::vector<ReconstructionPoly> out;
  reconstruct(field, 0, field.n_cells, out);
  return out;
}

std::vector<ReconstructionPoly> reconstruct(const CellField& field, int degree) {
  return WenoReconstructor(degree).reconstruct(field);
}

}  // namespace ader
