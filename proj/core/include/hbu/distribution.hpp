#pragma once

#include <complex>
#include <utility>

#include "hbu/operator_group.hpp"

namespace hbu::opgroup {

/// Real smooth test function with transform f^(t) = int e^{-ist} f(s) ds.
class TestFunction {
 public:
  enum class Kind { Gaussian, Bump };

  /// exp(-(s - c)^2 / (2 w^2)); f^(t) = w sqrt(2 pi) e^{-ict} e^{-w^2 t^2 / 2}.
  static TestFunction gaussian(double center, double width);
  /// exp(-order / (1 - u^2)) for |u| < 1, u = (s - c) / radius; f^ by quadrature.
  static TestFunction bump(double center, double radius, double order = 1.0);

  double operator()(double s) const;
  std::complex<double> transform(double t) const;

  Kind kind() const { return kind_; }
  double center() const { return center_; }
  double width() const { return width_; }
  /// Interval outside which f is negligible (exactly zero for Bump).
  std::pair<double, double> support() const;

 private:
  TestFunction(Kind k, double c, double w, double o) : kind_(k), center_(c), width_(w), order_(o) {}
  Kind kind_;
  double center_;
  double width_;
  double order_;
};

struct Pairing {
  CMatrix value;
  double quadrature_error = 0.0;
  double tail_bound = 0.0;
};

/// int e^{-alpha |t|} f^(t) e^{tA} dt over |t| <= horizon. Throws Error
/// when the estimated tail beyond the horizon exceeds `tail_tol`.
Pairing distribution_pairing(const MatrixGenerator& G, const TestFunction& f, double alpha,
                             double horizon, double tail_tol = 1e-10);

/// int f(beta) D(alpha + i beta) d beta, alpha > 0.
Pairing pairing_by_resolvents(const MatrixGenerator& G, const TestFunction& f, double alpha);

/// (<D(alpha + i beta) x, x>, 2 sum_j alpha |<x, e_j>|^2 / (alpha^2 + (beta - t_j)^2))
/// for skew-Hermitian A with A e_j = i t_j e_j. The left side uses a direct
/// LU inverse, the right side a Hermitian eigendecomposition of -iA.
std::pair<std::complex<double>, double> poisson_identity_selfadjoint(const CMatrix& A, const CVector& x,
                                                                     double alpha, double beta);

}  // namespace hbu::opgroup
