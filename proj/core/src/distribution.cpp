#include "hbu/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "hbu/error.hpp"
#include "hbu/quadrature.hpp"

namespace hbu::opgroup {

namespace {

std::vector<double> even_breaks(double a, double b, double omega) {
  std::vector<double> br;
  const int pieces = std::clamp(static_cast<int>(std::ceil(std::abs(b - a) * std::max(omega, 1.0) / std::numbers::pi)), 1, 4000);
  for (int k = 1; k < pieces; ++k) br.push_back(a + (b - a) * k / pieces);
  return br;
}

double max_frequency(const MatrixGenerator& G, double shift) {
  double w = 0.0;
  for (const auto& b : G.spectral().blocks) w = std::max(w, std::abs(b.lambda.imag() - shift));
  return w;
}

}  // namespace

TestFunction TestFunction::gaussian(double center, double width) {
  if (!(width > 0.0)) throw ParameterError("gaussian width must be positive");
  return TestFunction(Kind::Gaussian, center, width, 0.0);
}

TestFunction TestFunction::bump(double center, double radius, double order) {
  if (!(radius > 0.0)) throw ParameterError("bump radius must be positive");
  if (!(order > 0.0)) throw ParameterError("bump order must be positive");
  return TestFunction(Kind::Bump, center, radius, order);
}

double TestFunction::operator()(double s) const {
  const double u = (s - center_) / width_;
  if (kind_ == Kind::Gaussian) return std::exp(-0.5 * u * u);
  if (std::abs(u) >= 1.0) return 0.0;
  return std::exp(-order_ / (1.0 - u * u));
}

std::complex<double> TestFunction::transform(double t) const {
  const std::complex<double> phase = std::exp(std::complex<double>(0.0, -center_ * t));
  if (kind_ == Kind::Gaussian)
    return phase * (width_ * std::sqrt(2.0 * std::numbers::pi) * std::exp(-0.5 * width_ * width_ * t * t));
  // Even profile: 2 r int_0^1 cos(r t u) phi(u) du.
  const double rt = width_ * t;
  auto g = [&](double u) { return std::cos(rt * u) * (u < 1.0 ? std::exp(-order_ / (1.0 - u * u)) : 0.0); };
  quad::Options opt;
  opt.abs_tol = 1e-15;
  opt.rel_tol = 1e-12;
  const auto br = even_breaks(0.0, 1.0, std::abs(rt));
  return phase * (2.0 * width_ * quad::integrate(g, 0.0, 1.0, br, opt).value);
}

std::pair<double, double> TestFunction::support() const {
  if (kind_ == Kind::Gaussian) return {center_ - 12.0 * width_, center_ + 12.0 * width_};
  return {center_ - width_, center_ + width_};
}

Pairing distribution_pairing(const MatrixGenerator& G, const TestFunction& f, double alpha,
                             double horizon, double tail_tol) {
  if (!(alpha >= 0.0)) throw ParameterError("alpha must be >= 0");
  if (!(horizon > 0.0)) throw ParameterError("horizon must be positive");
  if (!G.spectrum_on_imaginary_axis()) throw DomainError("pairing needs the spectrum on the imaginary axis");
  const double a = G.nominal_degree();
  const double M = growth_constant(G, a);

  auto envelope = [&](double t) {
    return std::abs(f.transform(t)) * M * (1.0 + std::pow(t, a)) * std::exp(-alpha * t);
  };
  quad::Options topt;
  topt.abs_tol = 1e-16;
  topt.rel_tol = 1e-6;
  const double reach = f.kind() == TestFunction::Kind::Gaussian ? horizon + 40.0 / f.width() : 4.0 * horizon;
  Pairing out;
  // Both half-lines have the same envelope bound.
  out.tail_bound = 2.0 * quad::integrate(envelope, horizon, reach, even_breaks(horizon, reach, f.width()), topt).value;
  if (out.tail_bound > tail_tol) throw Error("horizon too short: tail estimate exceeds tolerance");

  auto integrand = [&](double t) -> CMatrix {
    return (std::exp(-alpha * std::abs(t)) * f.transform(t)) * group_at(G, t);
  };
  const double omega = max_frequency(G, f.center());
  std::vector<double> br = even_breaks(-horizon, horizon, omega);
  br.push_back(0.0);
  quad::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-11;
  opt.max_intervals = 20000;
  const auto r = quad::integrate(integrand, -horizon, horizon, br, opt);
  out.value = r.value;
  out.quadrature_error = r.error;
  return out;
}

Pairing pairing_by_resolvents(const MatrixGenerator& G, const TestFunction& f, double alpha) {
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  const auto [lo, hi] = f.support();
  std::vector<double> br;
  for (double h : eigen_heights(G))
    for (double d : {0.0, -alpha, alpha, -10.0 * alpha, 10.0 * alpha}) br.push_back(h + d);
  auto integrand = [&](double beta) -> CMatrix { return f(beta) * D_op(G, alpha, beta); };
  quad::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-11;
  opt.max_intervals = 20000;
  const auto r = quad::integrate(integrand, lo, hi, br, opt);
  Pairing out;
  out.value = r.value;
  out.quadrature_error = r.error;
  return out;
}

std::pair<std::complex<double>, double> poisson_identity_selfadjoint(const CMatrix& A, const CVector& x,
                                                                     double alpha, double beta) {
  if (A.rows() != A.cols() || A.rows() != x.size()) throw ParameterError("dimension mismatch");
  const double skew = (A + A.adjoint()).norm();
  if (skew > 1e-10 * std::max(1.0, A.norm())) throw ParameterError("A is not skew-Hermitian");
  if (!(alpha > 0.0)) throw ParameterError("alpha must be positive");
  const Eigen::Index n = A.rows();
  const CMatrix I = CMatrix::Identity(n, n);
  const CMatrix Rp = (std::complex<double>(alpha, beta) * I - A).partialPivLu().inverse();
  const CMatrix Rm = (std::complex<double>(-alpha, beta) * I - A).partialPivLu().inverse();
  const std::complex<double> lhs = x.dot((Rp - Rm) * x);

  CMatrix H = std::complex<double>(0.0, -1.0) * A;
  H = 0.5 * (H + H.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(H);
  const auto& t = eig.eigenvalues();
  const CVector c = eig.eigenvectors().adjoint() * x;
  double rhs = 0.0;
  for (Eigen::Index j = 0; j < n; ++j)
    rhs += 2.0 * alpha * std::norm(c(j)) / (alpha * alpha + (beta - t(j)) * (beta - t(j)));
  return {lhs, rhs};
}

}  // namespace hbu::opgroup
