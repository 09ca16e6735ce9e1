#include "ader/models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ader/errors.hpp"

namespace ader {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------------------
// Linear system
// ---------------------------------------------------------------------------

class LinearSystem final : public HyperbolicSystem {
 public:
  LinearSystem(double lambda, double beta) : lambda_(lambda), beta_(beta) {
    params_ = {{"lambda", lambda}, {"beta", beta}};
  }
  std::string name() const override { return "linear"; }
  int num_vars() const override { return 2; }

  Vec flux(const Vec& q) const override { return {lambda_ * q[1], lambda_ * q[0]}; }
  Vec source(const Vec& q) const override { return {beta_ * q[0], beta_ * q[1]}; }
  Mat flux_jacobian(const Vec&) const override {
    Mat a(2);
    a(0, 1) = lambda_;
    a(1, 0) = lambda_;
    return a;
  }
  Mat source_jacobian(const Vec&) const override { return Mat::diagonal(2, beta_); }
  Vec eigenvalues(const Vec&) const override {
    const double l = std::abs(lambda_);
    return {-l, l};
  }
  bool has_source() const override { return beta_ != 0.0; }

  Vec initial_condition(double x) const override {
    return {std::sin(kTwoPi * x), std::cos(kTwoPi * x)};
  }
  std::optional<Vec> exact_solution(double x, double t) const override {
    const double phi = std::sin(kTwoPi * (x - lambda_ * t)) + std::cos(kTwoPi * (x - lambda_ * t));
    const double psi = std::sin(kTwoPi * (x + lambda_ * t)) - std::cos(kTwoPi * (x + lambda_ * t));
    const double decay = 0.5 * std::exp(beta_ * t);
    return Vec{decay * (phi + psi), decay * (phi - psi)};
  }

 private:
  double lambda_;
  double beta_;
};

// ---------------------------------------------------------------------------
// Nonlinear system. With w1 = (u + v)/3 and w2 = (2u - v)/3 it splits into
// w1_t + w1 w1_x = 0 and w2_t + w2 w2_x = beta w2^2.
// ---------------------------------------------------------------------------

double w1_initial(double x) { return (std::sin(kTwoPi * x) + std::cos(kTwoPi * x)) / 3.0; }
double w1_initial_dx(double x) {
  return kTwoPi * (std::cos(kTwoPi * x) - std::sin(kTwoPi * x)) / 3.0;
}
double w2_initial(double x) { return (2.0 * std::sin(kTwoPi * x) - std::cos(kTwoPi * x)) / 3.0; }
double w2_initial_dx(double x) {
  return kTwoPi * (2.0 * std::cos(kTwoPi * x) + std::sin(kTwoPi * x)) / 3.0;
}

// Safeguarded Newton on a bracket [a, b] with g(a) < 0 < g(b).
template <typename F, typename DF>
double bracketed_newton(F&& g, DF&& dg, double a, double b, const char* what) {
  constexpr int kMaxIter = 100;
  constexpr double kTol = 1e-12;
  double ga = g(a);
  double gb = g(b);
  if (ga > 0.0 || gb < 0.0) {
    std::ostringstream msg;
    msg << what << ": root not bracketed in [" << a << ", " << b << "]";
    throw SolverError(msg.str());
  }
  double x = 0.5 * (a + b);
  for (int it = 0; it < kMaxIter; ++it) {
    const double gx = g(x);
    if (gx == 0.0) return x;
    if (gx < 0.0) a = x; else b = x;
    const double d = dg(x);
    double next = (d != 0.0) ? x - gx / d : 0.5 * (a + b);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - x) <= kTol * std::max(1.0, std::abs(x))) return next;
    x = next;
  }
  std::ostringstream msg;
  msg << what << ": no convergence after " << kMaxIter << " iterations";
  throw SolverError(msg.str());
}

// Displacement of a characteristic of w_t + w w_x = beta w^2 started with
// value w0, after time t.
double characteristic_shift(double w0, double t, double beta) {
  if (beta == 0.0) return w0 * t;
  return -std::log1p(-beta * w0 * t) / beta;
}
double characteristic_shift_dw0(double w0, double t, double beta) {
  return t / (1.0 - beta * w0 * t);
}

class NonlinearSystem final : public HyperbolicSystem {
 public:
  explicit NonlinearSystem(double beta) : beta_(beta) { params_ = {{"beta", beta}}; }
  std::string name() const override { return "nonlinear"; }
  int num_vars() const override { return 2; }

  Vec flux(const Vec& q) const override {
    const double u = q[0], v = q[1];
    return {(2.5 * u * u + v * v - u * v) / 9.0, (4.0 * u * v - u * u + 0.5 * v * v) / 9.0};
  }
  Vec source(const Vec& q) const override {
    const double w = (2.0 * q[0] - q[1]) / 3.0;
    return {beta_ * w * w, -beta_ * w * w};
  }
  Mat flux_jacobian(const Vec& q) const override {
    const double u = q[0], v = q[1];
    Mat a(2);
    a(0, 0) = (5.0 * u - v) / 9.0;
    a(0, 1) = (2.0 * v - u) / 9.0;
    a(1, 0) = (4.0 * v - 2.0 * u) / 9.0;
    a(1, 1) = (4.0 * u + v) / 9.0;
    return a;
  }
  Mat source_jacobian(const Vec& q) const override {
    const double d = 2.0 * q[0] - q[1];
    Mat b(2);
    b(0, 0) = 4.0 * beta_ * d / 9.0;
    b(0, 1) = -2.0 * beta_ * d / 9.0;
    b(1, 0) = -b(0, 0);
    b(1, 1) = -b(0, 1);
    return b;
  }
  Vec eigenvalues(const Vec& q) const override {
    const double l1 = (q[0] + q[1]) / 3.0;
    const double l2 = (2.0 * q[0] - q[1]) / 3.0;
    return {std::min(l1, l2), std::max(l1, l2)};
  }
  bool has_source() const override { return beta_ != 0.0; }

  Vec initial_condition(double x) const override {
    return {std::sin(kTwoPi * x), std::cos(kTwoPi * x)};
  }
  std::optional<Vec> exact_solution(double x, double t) const override {
    return nonlinear_exact(x, t, beta_);
  }

 private:
  double beta_;
};

// ---------------------------------------------------------------------------
// LeVeque-Yee scalar test
// ---------------------------------------------------------------------------

class LevequeYeeSystem final : public HyperbolicSystem {
 public:
  explicit LevequeYeeSystem(double beta) : beta_(beta) { params_ = {{"beta", beta}}; }
  std::string name() const override { return "leveque-yee"; }
  int num_vars() const override { return 1; }

  Vec flux(const Vec& q) const override { return {q[0]}; }
  Vec source(const Vec& q) const override {
    const double v = q[0];
    return {beta_ * v * (v - 1.0) * (v - 0.5)};
  }
  Mat flux_jacobian(const Vec&) const override { return Mat::identity(1); }
  Mat source_jacobian(const Vec& q) const override {
    const double v = q[0];
    return Mat::diagonal(1, beta_ * (3.0 * v * v - 3.0 * v + 0.5));
  }
  Vec eigenvalues(const Vec&) const override { return {1.0}; }
  bool has_source() const override { return beta_ != 0.0; }

  Vec initial_condition(double x) const override { return {x < 0.3 ? 1.0 : 0.0}; }
  // The step sits on the two stable equilibria, so the source vanishes along
  // characteristics and the data is simply transported.
  std::optional<Vec> exact_solution(double x, double t) const override {
    return Vec{x < 0.3 + t ? 1.0 : 0.0};
  }

 private:
  double beta_;
};

// ---------------------------------------------------------------------------
// Euler equations
// ---------------------------------------------------------------------------

class EulerSystem final : public HyperbolicSystem {
 public:
  EulerSystem(double gamma, EulerCase which, double amplitude)
      : gamma_(gamma), case_(which), amplitude_(amplitude) {
    params_ = {{"gamma", gamma}};
    if (which == EulerCase::kShuOsher) params_["amplitude"] = amplitude;
  }
  std::string name() const override {
    return case_ == EulerCase::kSmoothWave ? "euler-smooth" : "shu-osher";
  }
  int num_vars() const override { return 3; }

  Vec flux(const Vec& q) const override {
    const PrimitiveState w = conserved_to_primitive(q, gamma_);
    return {q[1], q[1] * w.u + w.p, w.u * (q[2] + w.p)};
  }
  Vec source(const Vec&) const override { return Vec(3); }
  Mat flux_jacobian(const Vec& q) const override {
    const PrimitiveState w = conserved_to_primitive(q, gamma_);
    const double u = w.u;
    const double h = (q[2] + w.p) / w.rho;
    const double g1 = gamma_ - 1.0;
    Mat a(3);
    a(0, 1) = 1.0;
    a(1, 0) = 0.5 * (gamma_ - 3.0) * u * u;
    a(1, 1) = (3.0 - gamma_) * u;
    a(1, 2) = g1;
    a(2, 0) = u * (0.5 * g1 * u * u - h);
    a(2, 1) = h - g1 * u * u;
    a(2, 2) = gamma_ * u;
    return a;
  }
  Mat source_jacobian(const Vec&) const override { return Mat(3); }
  Vec eigenvalues(const Vec& q) const override {
    const PrimitiveState w = conserved_to_primitive(q, gamma_);
    const double a = std::sqrt(gamma_ * w.p / w.rho);
    return {w.u - a, w.u, w.u + a};
  }
  bool has_source() const override { return false; }
  void check_admissible(const Vec& q) const override { (void)conserved_to_primitive(q, gamma_); }

  Vec initial_condition(double x) const override {
    if (case_ == EulerCase::kShuOsher) return primitive_to_conserved(shu_osher_initial(x, amplitude_), gamma_);
    return *exact_solution(x, 0.0);
  }
  std::optional<Vec> exact_solution(double x, double t) const override {
    if (case_ == EulerCase::kShuOsher) return std::nullopt;
    const PrimitiveState w{1.0 + 0.2 * std::sin(kTwoPi * (x - t)), 1.0, 2.0};
    return primitive_to_conserved(w, gamma_);
  }

 private:
  double gamma_;
  EulerCase case_;
  double amplitude_;
};

}  // namespace

SystemPtr linear_system(double lambda, double beta) {
  return std::make_shared<LinearSystem>(lambda, beta);
}

SystemPtr nonlinear_system(double beta) {
  if (beta > 0.0) throw ConfigError("nonlinear system requires beta <= 0");
  return std::make_shared<NonlinearSystem>(beta);
}

Vec nonlinear_exact(double x, double t, double beta) {
  if (t == 0.0) return {std::sin(kTwoPi * x), std::cos(kTwoPi * x)};

  // w1 = w1_0(x - w1 t); |w1_0| < 1 so [-1, 1] brackets the root.
  const double w1 = bracketed_newton(
      [&](double w) { return w - w1_initial(x - w * t); },
      [&](double w) { return 1.0 + t * w1_initial_dx(x - w * t); }, -1.0, 1.0,
      "nonlinear_exact(w1)");

  // Foot point x0 of the w2 characteristic through (x, t).
  const double w0_bound = std::sqrt(5.0) / 3.0;
  if (1.0 - std::abs(beta) * w0_bound * t <= 0.0)
    throw SolverError("nonlinear_exact(w2): characteristics blow up before t");
  const double reach = std::max(std::abs(characteristic_shift(w0_bound, t, beta)),
                                std::abs(characteristic_shift(-w0_bound, t, beta)));
  const double x0 = bracketed_newton(
      [&](double z) { return z + characteristic_shift(w2_initial(z), t, beta) - x; },
      [&](double z) {
        return 1.0 + characteristic_shift_dw0(w2_initial(z), t, beta) * w2_initial_dx(z);
      },
      x - reach - 1.0, x + reach + 1.0, "nonlinear_exact(w2)");
  const double w20 = w2_initial(x0);
  const double w2 = w20 / (1.0 - beta * w20 * t);

  return {w1 + w2, 2.0 * w1 - w2};
}

SystemPtr leveque_yee_system(double beta) { return std::make_shared<LevequeYeeSystem>(beta); }

Vec primitive_to_conserved(const PrimitiveState& w, double gamma) {
  if (!(w.rho > 0.0) || !(w.p > 0.0)) {
    std::ostringstream msg;
    msg << "non-physical primitive state rho=" << w.rho << " p=" << w.p;
    throw PhysicsError(msg.str());
  }
  return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

PrimitiveState conserved_to_primitive(const Vec& q, double gamma) {
  PrimitiveState w;
  w.rho = q[0];
  if (!(w.rho > 0.0)) {
    std::ostringstream msg;
    msg << "non-physical conserved state: rho=" << w.rho;
    throw PhysicsError(msg.str());
  }
  w.u = q[1] / w.rho;
  w.p = (gamma - 1.0) * (q[2] - 0.5 * w.rho * w.u * w.u);
  if (!(w.p > 0.0)) {
    std::ostringstream msg;
    msg << "non-physical conserved state: p=" << w.p << " (rho=" << w.rho << ")";
    throw PhysicsError(msg.str());
  }
  return w;
}

SystemPtr euler_system(double gamma, EulerCase which, double shu_osher_amplitude) {
  if (!(gamma > 1.0)) throw ConfigError("euler system requires gamma > 1");
  if (!(shu_osher_amplitude >= 0.0 && shu_osher_amplitude <= 1.0))
    throw ConfigError("shu-osher density amplitude must lie in [0, 1]");
  return std::make_shared<EulerSystem>(gamma, which, shu_osher_amplitude);
}

PrimitiveState shu_osher_initial(double x, double amplitude) {
  if (x < -0.8) return {3.8571, 2.6294, 10.333};
  return {1.0 + amplitude * std::sin(5.0 * std::numbers::pi * x), 0.0, 1.0};
}

}  // namespace ader
