#include "hbu/halfplane_construction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbu/error.hpp"
#include "hbu/quadrature.hpp"

namespace hbu::harmonic {

namespace {

constexpr double kRampLo = 1.25;
constexpr double kRampHi = 1.75;

// Lagrange weights of the four nodes s0..s0+3 at s (unit spacing).
std::array<double, 4> cubic_weights(double s) {
  std::array<double, 4> w{};
  for (int a = 0; a < 4; ++a) {
    double v = 1.0;
    for (int b = 0; b < 4; ++b)
      if (b != a) v *= (s - b) / static_cast<double>(a - b);
    w[static_cast<std::size_t>(a)] = v;
  }
  return w;
}

int stencil_start(double s, int n) { return std::clamp(static_cast<int>(std::floor(s)) - 1, 0, n - 3); }

}  // namespace

void solve_dirichlet(Eigen::MatrixXd& values, double hx, double hy) {
  const int nx = static_cast<int>(values.rows()) - 1;
  const int ny = static_cast<int>(values.cols()) - 1;
  if (nx < 2 || ny < 2) return;
  const int mx = nx - 1;
  const int my = ny - 1;
  const double cx = 1.0 / (hx * hx);
  const double cy = 1.0 / (hy * hy);

  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(mx, my);
  for (int j = 1; j <= my; ++j) {
    rhs(0, j - 1) -= cx * values(0, j);
    rhs(mx - 1, j - 1) -= cx * values(nx, j);
  }
  for (int i = 1; i <= mx; ++i) {
    rhs(i - 1, 0) -= cy * values(i, 0);
    rhs(i - 1, my - 1) -= cy * values(i, ny);
  }

  // Sine transform in x diagonalises the x second difference.
  Eigen::MatrixXd sines(mx, mx);
  for (int k = 1; k <= mx; ++k)
    for (int i = 1; i <= mx; ++i)
      sines(k - 1, i - 1) = std::sin(std::numbers::pi * k * i / nx);
  Eigen::MatrixXd modal = sines * rhs;

  std::vector<double> cprime(static_cast<std::size_t>(my));
  std::vector<double> dprime(static_cast<std::size_t>(my));
  for (int k = 1; k <= mx; ++k) {
    const double s = std::sin(std::numbers::pi * k / (2.0 * nx));
    const double lambda = -4.0 * s * s * cx;
    const double diag = -2.0 * cy + lambda;
    const double off = cy;
    // Thomas algorithm along y.
    cprime[0] = off / diag;
    dprime[0] = modal(k - 1, 0) / diag;
    for (int j = 1; j < my; ++j) {
      const double m = diag - off * cprime[static_cast<std::size_t>(j - 1)];
      cprime[static_cast<std::size_t>(j)] = off / m;
      dprime[static_cast<std::size_t>(j)] =
          (modal(k - 1, j) - off * dprime[static_cast<std::size_t>(j - 1)]) / m;
    }
    modal(k - 1, my - 1) = dprime[static_cast<std::size_t>(my - 1)];
    for (int j = my - 2; j >= 0; --j)
      modal(k - 1, j) = dprime[static_cast<std::size_t>(j)] -
                        cprime[static_cast<std::size_t>(j)] * modal(k - 1, j + 1);
  }

  Eigen::MatrixXd interior = (2.0 / nx) * (sines.transpose() * modal);
  values.block(1, 1, mx, my) = interior;
}

std::shared_ptr<const HalfPlaneConstruction> HalfPlaneConstruction::build(
    const ConstructionParams& p) {
  if (!(p.gamma > 1.0 && p.gamma <= 3.0)) throw ParameterError("gamma must lie in (1, 3]");
  if (!(p.eps > 0.0) || !std::isfinite(p.eps)) throw ParameterError("eps must be positive");
  if (!(p.delta > std::max(0.0, 2.0 - p.gamma) && p.delta < 1.0))
    throw ParameterError("delta must satisfy max(0, 2 - gamma) < delta < 1");
  if (p.grid < 16 || p.grid % 2 != 0) throw ParameterError("grid must be even and >= 16");
  if (!(p.quad_tol > 0.0)) throw ParameterError("quad_tol must be positive");

  std::shared_ptr<HalfPlaneConstruction> c(new HalfPlaneConstruction(p));
  const int n = p.grid;
  const double hx = 2.0 / n;
  const double hy = 1.0 / n;
  auto node = [&](int i, int j) { return Complex(-1.0 + i * hx, j * hy); };

  Eigen::MatrixXd fine = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    fine(i, 0) = c->f3(node(i, 0)).imag();
    fine(i, n) = c->f3(node(i, n)).imag();
  }
  for (int j = 1; j < n; ++j) {
    fine(0, j) = c->f3(node(0, j)).imag();
    fine(n, j) = c->f3(node(n, j)).imag();
  }

  const int nc = n / 2;
  Eigen::MatrixXd coarse = Eigen::MatrixXd::Zero(nc + 1, nc + 1);
  for (int i = 0; i <= nc; ++i) {
    coarse(i, 0) = fine(2 * i, 0);
    coarse(i, nc) = fine(2 * i, n);
    coarse(0, i) = fine(0, 2 * i);
    coarse(nc, i) = fine(n, 2 * i);
  }

  solve_dirichlet(fine, hx, hy);
  solve_dirichlet(coarse, 2.0 * hx, 2.0 * hy);

  double diff = 0.0;
  for (int i = 1; i < nc; ++i)
    for (int j = 1; j < nc; ++j) diff = std::max(diff, std::abs(fine(2 * i, 2 * j) - coarse(i, j)));
  c->resolution_estimate_ = diff / 3.0;
  c->nodal_ = std::move(fine);

  if (c->resolution_estimate_ > p.resolution_tol) {
    std::ostringstream os;
    os << "grid " << n << " too coarse: Dirichlet error estimate " << c->resolution_estimate_
       << " exceeds " << p.resolution_tol;
    throw ResolutionError(os.str(), c->resolution_estimate_, p.resolution_tol);
  }
  return c;
}

Complex HalfPlaneConstruction::f0(Complex z) const {
  if (!(z.real() > 0.0)) throw DomainError("f0 is defined for Re z > 0");
  return std::exp(params_.eps / z - std::pow(z, -params_.delta));
}

double HalfPlaneConstruction::cutoff(double t) {
  if (t <= kRampLo) return 0.0;
  if (t >= kRampHi) return 1.0;
  const double s = (t - kRampLo) / (kRampHi - kRampLo);
  return s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

double HalfPlaneConstruction::cutoff_derivative(double t) {
  if (t <= kRampLo || t >= kRampHi) return 0.0;
  const double s = (t - kRampLo) / (kRampHi - kRampLo);
  return 30.0 * s * s * (1.0 - s) * (1.0 - s) / (kRampHi - kRampLo);
}

Complex HalfPlaneConstruction::f2(Complex z) const {
  const double x = z.real();
  const double y = z.imag();
  if (x <= 0.0) return 0.0;
  const double yg = std::pow(y, params_.gamma);
  if (x <= yg) return 0.0;
  if (x >= 2.0 * yg) return f0(z);
  return f0(z) * cutoff(x / yg);
}

Complex HalfPlaneConstruction::dbar_f2(Complex z) const {
  const double x = z.real();
  const double y = z.imag();
  if (x <= 0.0 || y <= 0.0) return 0.0;
  const double yg = std::pow(y, params_.gamma);
  const double t = x / yg;
  const double d = cutoff_derivative(t);
  if (d == 0.0) return 0.0;
  // dbar t = (t_x + i t_y) / 2 with t_x = y^-gamma, t_y = -gamma t / y.
  return f0(z) * d * 0.5 * Complex(1.0 / yg, -params_.gamma * t / y);
}

Complex HalfPlaneConstruction::f3(Complex z) const {
  const double g = params_.gamma;
  const double y_top = std::min(1.0, std::pow(kRampLo, -1.0 / g));
  const double y_kink = std::pow(kRampHi, -1.0 / g);

  quad::Options inner_opt;
  inner_opt.abs_tol = 0.1 * params_.quad_tol;
  inner_opt.rel_tol = 1e-10;
  inner_opt.max_intervals = 400;
  quad::Options outer_opt;
  outer_opt.abs_tol = params_.quad_tol;
  outer_opt.rel_tol = 1e-10;
  outer_opt.max_intervals = 400;

  // In (y, t) coordinates dm2 = y^gamma dt dy, so the integrand is
  // f0 f1'(t) (1 - i gamma t y^{gamma-1}) / 2 / (z - zeta), bounded away from z.
  auto inner = [&](double y) -> Complex {
    const double yg = std::pow(y, g);
    const double t_max = std::min(kRampHi, 1.0 / yg);
    if (t_max <= kRampLo) return 0.0;
    const double slope = g * std::pow(y, g - 1.0);
    auto weight = [&](double t) -> Complex {
      const Complex zeta(t * yg, y);
      return f0(zeta) * (0.5 * cutoff_derivative(t)) * Complex(1.0, -slope * t);
    };
    // Subtract the pole: w(t)/(z - zeta) = (w(t) - w(ts))/(z - zeta) + w(ts)/(z - zeta).
    const double tstar = z.real() / yg;
    const double ts = std::clamp(tstar, kRampLo, t_max);
    const Complex ws = weight(ts);
    const double d = z.imag() - y;
    auto integrand = [&](double t) -> Complex {
      return (weight(t) - ws) / Complex(yg * (tstar - t), d);
    };
    const std::array<double, 1> br{ts};
    Complex acc = quad::integrate(integrand, kRampLo, t_max, br, inner_opt).value;
    if (ws != Complex(0.0, 0.0)) {
      const Complex lo(yg * (tstar - kRampLo), d);
      const Complex hi(yg * (tstar - t_max), d);
      acc -= ws * (std::log(hi) - std::log(lo)) / yg;
    }
    return acc;
  };
  const std::array<double, 2> br{z.imag(), y_kink};
  return quad::integrate(inner, 0.0, y_top, br, outer_opt).value / std::numbers::pi;
}

double HalfPlaneConstruction::f4(Complex z) const {
  const int n = params_.grid;
  const double sx = (z.real() + 1.0) * n / 2.0;
  const double sy = z.imag() * n;
  const int i0 = stencil_start(sx, n);
  const int j0 = stencil_start(sy, n);
  const auto wx = cubic_weights(sx - i0);
  const auto wy = cubic_weights(sy - j0);
  double acc = 0.0;
  for (int a = 0; a < 4; ++a) {
    double row = 0.0;
    for (int b = 0; b < 4; ++b) row += wy[static_cast<std::size_t>(b)] * nodal_(i0 + a, j0 + b);
    acc += wx[static_cast<std::size_t>(a)] * row;
  }
  return acc;
}

double HalfPlaneConstruction::operator()(Complex z) const {
  const double x = z.real();
  const double y = z.imag();
  if (!(x >= -1.0 && x <= 1.0 && y >= 0.0 && y <= 1.0) || z == Complex(0.0, 0.0))
    throw DomainError("halfplane construction is evaluated on the closed rectangle minus 0");
  return (f2(z) - f3(z)).imag() + f4(z);
}

}  // namespace hbu::harmonic
