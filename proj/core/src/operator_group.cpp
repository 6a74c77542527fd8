#include "hbu/operator_group.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "hbu/error.hpp"
#include "hbu/quadrature.hpp"

namespace hbu::opgroup {

namespace {

constexpr double kSpectralTol = 1e-10;

void require_resolution(const MatrixGenerator& G) {
  const double r = G.residuals().max();
  if (r > kSpectralTol) {
    std::ostringstream os;
    os << "spectral reconstruction residual " << r << " exceeds " << kSpectralTol;
    throw Error(os.str());
  }
}

auto exp_coeffs(double t) {
  return [t](Complex lambda, int m) {
    std::vector<Complex> c(static_cast<std::size_t>(m));
    const Complex e = std::exp(lambda * t);
    double f = 1.0;
    for (int p = 0; p < m; ++p) {
      if (p > 0) f *= t / p;
      c[static_cast<std::size_t>(p)] = e * f;
    }
    return c;
  };
}

void check_regular(Complex mu, Complex lambda) {
  if (std::abs(mu - lambda) <= 1e-14 * std::max(1.0, std::abs(lambda))) {
    std::ostringstream os;
    os << mu << " lies on the spectrum";
    throw SingularityError(os.str());
  }
}

// 1/(mu - w) = sum_p (w - lambda)^p / (mu - lambda)^{p+1}.
std::vector<Complex> resolvent_coeffs(Complex mu, Complex lambda, int m) {
  check_regular(mu, lambda);
  std::vector<Complex> c(static_cast<std::size_t>(m));
  const Complex inv = 1.0 / (mu - lambda);
  Complex v = inv;
  for (int p = 0; p < m; ++p) {
    c[static_cast<std::size_t>(p)] = v;
    v *= inv;
  }
  return c;
}

auto D_coeffs(double alpha, double beta) {
  return [alpha, beta](Complex lambda, int m) {
    auto plus = resolvent_coeffs(Complex(alpha, beta), lambda, m);
    const auto minus = resolvent_coeffs(Complex(-alpha, beta), lambda, m);
    for (std::size_t p = 0; p < plus.size(); ++p) plus[p] -= minus[p];
    return plus;
  };
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int k = 0; k < n; ++k) g.push_back(lo * std::pow(hi / lo, k / (n - 1.0)));
  return g;
}

CMatrix group_unchecked(const MatrixGenerator& G, double t) {
  return functional_calculus(G.spectral(), exp_coeffs(t));
}

// Breakpoints every half period of the fastest oscillation in [a, b].
std::vector<double> oscillation_breaks(double a, double b, double omega) {
  std::vector<double> br;
  const double len = std::abs(b - a);
  const int pieces = std::clamp(static_cast<int>(std::ceil(len * std::max(omega, 1.0) / std::numbers::pi)), 1, 4000);
  for (int k = 1; k < pieces; ++k) br.push_back(a + (b - a) * k / pieces);
  return br;
}

double max_frequency(const MatrixGenerator& G, double shift) {
  double w = 0.0;
  for (const auto& b : G.spectral().blocks) w = std::max(w, std::abs(b.lambda.imag() - shift));
  return w;
}

}  // namespace

double op_norm(const CMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues()(0);
}

CMatrix group_at(const MatrixGenerator& G, double t) {
  require_resolution(G);
  return group_unchecked(G, t);
}

GrowthFit growth_exponent(const MatrixGenerator& G, int samples) {
  if (!G.spectrum_on_imaginary_axis()) throw DomainError("exponential growth: spectrum off the imaginary axis");
  require_resolution(G);
  std::vector<double> lx;
  std::vector<double> ly;
  for (double t : log_grid(1.0, 1e3, samples)) {
    for (double s : {t, -t}) {
      lx.push_back(std::log1p(std::abs(s)));
      ly.push_back(std::log(op_norm(group_unchecked(G, s))));
    }
  }
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  GrowthFit fit;
  fit.a = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double c = (sy - fit.a * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) ss += std::pow(ly[i] - c - fit.a * lx[i], 2);
  fit.residual = std::sqrt(ss / n);
  fit.M = growth_constant(G, fit.a, samples);
  return fit;
}

double growth_constant(const MatrixGenerator& G, double a, int samples) {
  double M = 0.0;
  std::vector<double> ts{0.0};
  for (int k = 1; k <= 16; ++k) ts.push_back(k / 16.0);
  for (double t : log_grid(1.0, 1e3, samples)) ts.push_back(t);
  for (double t : ts)
    for (double s : {t, -t})
      M = std::max(M, op_norm(group_unchecked(G, s)) / (1.0 + std::pow(std::abs(s), a)));
  return M;
}

CMatrix resolvent(const MatrixGenerator& G, Complex lambda) {
  return functional_calculus(G.spectral(), [lambda](Complex l, int m) { return resolvent_coeffs(lambda, l, m); });
}

CarlemanQuadrature carleman_quadrature(const MatrixGenerator& G, Complex lambda, double horizon) {
  const double sigma = lambda.real();
  if (!(sigma > 0.0)) throw DomainError("carleman transform needs Re lambda > 0");
  if (!G.spectrum_on_imaginary_axis()) throw DomainError("exponential growth: spectrum off the imaginary axis");
  require_resolution(G);
  const double a = G.nominal_degree();
  const double M = growth_constant(G, a);
  auto tail = [&](double T) {
    return M * (std::exp(-sigma * T) / sigma +
                boost::math::tgamma(a + 1.0, sigma * T) / std::pow(sigma, a + 1.0));
  };
  double T = horizon;
  if (!(T > 0.0)) {
    T = 1.0 / sigma;
    while (tail(T) > 1e-13 && T < 1e6) T *= 1.25;
  }
  CarlemanQuadrature out;
  out.horizon = T;
  out.tail_bound = tail(T);
  auto f = [&](double t) -> CMatrix { return std::exp(-lambda * t) * group_unchecked(G, t); };
  const auto br = oscillation_breaks(0.0, T, max_frequency(G, lambda.imag()));
  quad::Options opt;
  opt.abs_tol = 1e-14;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 20000;
  const auto r = quad::integrate(f, 0.0, T, br, opt);
  out.value = r.value;
  out.quadrature_error = r.error;
  out.evaluations = r.evaluations;
  return out;
}

CMatrix D_op(const MatrixGenerator& G, double alpha, double beta) {
  if (alpha == 0.0) throw ParameterError("D needs alpha != 0");
  return functional_calculus(G.spectral(), D_coeffs(alpha, beta));
}

CVector D_apply_modal(const MatrixGenerator& G, double alpha, double beta, const CVector& y) {
  if (alpha == 0.0) throw ParameterError("D needs alpha != 0");
  return modal_apply(G.spectral(), D_coeffs(alpha, beta), y);
}

CMatrix de1_form(const MatrixGenerator& G, double alpha, double beta) {
  // 2 alpha / (alpha^2 - (w - i beta)^2) expanded at w = lambda through the
  // reciprocal of q0 + q1 e + q2 e^2.
  return functional_calculus(G.spectral(), [alpha, beta](Complex lambda, int m) {
    const Complex s = lambda - Complex(0.0, beta);
    const Complex q0 = alpha * alpha - s * s;
    if (std::abs(q0) == 0.0) throw SingularityError("alpha^2 - (A - i beta)^2 is singular");
    const Complex q1 = -2.0 * s;
    const Complex q2 = -1.0;
    std::vector<Complex> r(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) {
      Complex v = p == 0 ? Complex(1.0) : Complex(0.0);
      if (p >= 1) v -= q1 * r[static_cast<std::size_t>(p - 1)];
      if (p >= 2) v -= q2 * r[static_cast<std::size_t>(p - 2)];
      r[static_cast<std::size_t>(p)] = v / q0;
    }
    for (auto& v : r) v *= 2.0 * alpha;
    return r;
  });
}

CMatrix de2_form(const MatrixGenerator& G, double alpha, double beta) {
  return functional_calculus(G.spectral(), [alpha, beta](Complex lambda, int m) {
    auto plus = resolvent_coeffs(Complex(alpha, beta), lambda, m);
    const auto minus = resolvent_coeffs(Complex(-alpha, beta), lambda, m);
    for (std::size_t p = 0; p < plus.size(); ++p) plus[p] = alpha * (plus[p] + minus[p]);
    return plus;
  });
}

IdentityResiduals resolvent_identities(const MatrixGenerator& G, double alpha, double beta) {
  const CMatrix D = D_op(G, alpha, beta);
  const CMatrix shifted = G.matrix() - Complex(0.0, beta) * CMatrix::Identity(G.dim(), G.dim());
  const double nD = op_norm(D);
  IdentityResiduals r;
  r.de1 = op_norm(D - de1_form(G, alpha, beta)) / nD;
  r.de2 = op_norm(de2_form(G, alpha, beta) - shifted * D) / (op_norm(shifted) * nD);
  return r;
}

std::vector<Complex> local_spectrum(const MatrixGenerator& G, const CVector& x, double tol) {
  std::vector<Complex> out;
  const double nx = x.norm();
  if (nx == 0.0) return out;
  const auto& s = G.spectral();
  for (const auto& b : s.blocks) {
    const CVector part = s.V.middleCols(b.offset, b.multiplicity) *
                         (s.Vinv.middleRows(b.offset, b.multiplicity) * x);
    if (part.norm() > tol * nx) out.push_back(b.lambda);
  }
  return out;
}

std::vector<double> eigen_heights(const MatrixGenerator& G, double tol) {
  std::vector<double> h;
  for (const auto& b : G.spectral().blocks)
    if (std::abs(b.lambda.real()) <= tol * std::max(1.0, std::abs(b.lambda))) h.push_back(b.lambda.imag());
  return h;
}

Subspace spectral_subspace(const MatrixGenerator& G, const ClosedRealSet& F, double tol) {
  const auto& s = G.spectral();
  CMatrix cols(G.dim(), 0);
  for (const auto& b : s.blocks) {
    const bool on_axis = std::abs(b.lambda.real()) <= tol * std::max(1.0, std::abs(b.lambda));
    if (!on_axis || !F.contains(b.lambda.imag())) continue;
    cols.conservativeResize(Eigen::NoChange, cols.cols() + b.multiplicity);
    cols.rightCols(b.multiplicity) = s.V.middleCols(b.offset, b.multiplicity);
  }
  return Subspace::span(cols);
}

Subspace range_power(const MatrixGenerator& G, double beta, int n) {
  if (n < 1) throw ParameterError("range power needs n >= 1");
  const auto& s = G.spectral();
  const Complex ib(0.0, beta);
  CMatrix cols(G.dim(), 0);
  for (const auto& b : s.blocks) {
    const auto Vj = s.V.middleCols(b.offset, b.multiplicity);
    CMatrix part;
    if (std::abs(b.lambda - ib) > kSpectralTol * std::max(1.0, std::abs(b.lambda))) {
      part = Vj;
    } else {
      CMatrix power = CMatrix::Identity(b.multiplicity, b.multiplicity);
      for (int p = 0; p < n; ++p) power = power * (-b.nilpotent);
      const Subspace r = Subspace::span(power);
      part = Vj * r.basis();
    }
    cols.conservativeResize(Eigen::NoChange, cols.cols() + part.cols());
    cols.rightCols(part.cols()) = part;
  }
  return Subspace::span(cols);
}

Subspace ranges_intersection(const MatrixGenerator& G, const ClosedRealSet& F, int n) {
  Subspace acc = Subspace::full(G.dim());
  for (double h : eigen_heights(G))
    if (!F.contains(h)) acc = intersect(acc, range_power(G, h, n));
  return acc;
}

TriangularGroup triangular_group(const MatrixGenerator& A1, const MatrixGenerator& A2,
                                 const CMatrix& B, double t) {
  const int n1 = A1.dim();
  const int n2 = A2.dim();
  if (B.rows() != n1 || B.cols() != n2) throw ParameterError("B must be n1 x n2");
  require_resolution(A1);
  require_resolution(A2);
  auto f = [&](double s) -> CMatrix { return group_unchecked(A1, s) * B * group_unchecked(A2, t - s); };
  const double omega = max_frequency(A1, 0.0) + max_frequency(A2, 0.0);
  const auto br = oscillation_breaks(0.0, t, omega);
  quad::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 20000;
  const auto r = quad::integrate(f, 0.0, t, br, opt);
  if (!r.converged) throw QuadratureError("triangular corner quadrature did not converge", r.error);
  TriangularGroup out;
  out.value = CMatrix::Zero(n1 + n2, n1 + n2);
  out.value.topLeftCorner(n1, n1) = group_unchecked(A1, t);
  out.value.bottomRightCorner(n2, n2) = group_unchecked(A2, t);
  out.value.topRightCorner(n1, n2) = r.value;
  out.quadrature_error = r.error;
  return out;
}

}  // namespace hbu::opgroup
