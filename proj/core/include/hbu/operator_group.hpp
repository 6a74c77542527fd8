#pragma once

#include <vector>

#include "hbu/real_set.hpp"
#include "hbu/spectral.hpp"
#include "hbu/subspace.hpp"

namespace hbu::opgroup {

/// e^{tA} by exact spectral calculus. Refuses (Error) when the spectral
/// reconstruction residual exceeds 1e-10.
CMatrix group_at(const MatrixGenerator& G, double t);

/// Spectral 2-norm.
double op_norm(const CMatrix& m);

struct GrowthFit {
  /// Least-squares slope of log||e^{tA}|| against log(1+|t|).
  double a = 0.0;
  /// Smallest M with ||e^{tA}|| <= M (1 + |t|^a) on the grid.
  double M = 0.0;
  double residual = 0.0;
};

/// Fit over |t| in [1, 1e3] (both signs, log-spaced). Throws DomainError
/// ("exponential growth") when some eigenvalue is off the imaginary axis.
GrowthFit growth_exponent(const MatrixGenerator& G, int samples = 61);

/// Smallest M with ||e^{tA}|| <= M (1 + |t|^a) over 0 <= |t| <= 1e3.
double growth_constant(const MatrixGenerator& G, double a, int samples = 61);

/// (lambda I - A)^{-1}. Throws SingularityError on the spectrum.
CMatrix resolvent(const MatrixGenerator& G, Complex lambda);

struct CarlemanQuadrature {
  CMatrix value;
  double quadrature_error = 0.0;
  /// M int_{T}^inf e^{-Re(lambda) t} (1 + t^a) dt with the nominal degree a.
  double tail_bound = 0.0;
  double horizon = 0.0;
  int evaluations = 0;
};

/// int_0^{T} e^{-lambda t} e^{tA} dt by adaptive quadrature plus the tail
/// bound. A non-positive horizon selects one where the tail is below 1e-13.
/// Throws DomainError for Re lambda <= 0 and for spectra off the axis.
CarlemanQuadrature carleman_quadrature(const MatrixGenerator& G, Complex lambda,
                                       double horizon = 0.0);

/// D(alpha + i beta) = R(alpha + i beta) - R(-alpha + i beta).
CMatrix D_op(const MatrixGenerator& G, double alpha, double beta);
/// D applied to x, computed on the modal coordinates y = V^{-1} x.
CVector D_apply_modal(const MatrixGenerator& G, double alpha, double beta, const CVector& y);

/// 2 alpha [alpha^2 - (A - i beta)^2]^{-1}.
CMatrix de1_form(const MatrixGenerator& G, double alpha, double beta);
/// alpha [R(alpha + i beta) + R(-alpha + i beta)].
CMatrix de2_form(const MatrixGenerator& G, double alpha, double beta);

struct IdentityResiduals {
  /// ||D - de1|| / ||D||.
  double de1 = 0.0;
  /// ||de2 - (A - i beta) D|| / (||A - i beta|| ||D||).
  double de2 = 0.0;
};

IdentityResiduals resolvent_identities(const MatrixGenerator& G, double alpha, double beta);

/// {lambda_j : ||P_j x|| > tol ||x||}.
std::vector<Complex> local_spectrum(const MatrixGenerator& G, const CVector& x, double tol = 1e-10);

/// Span of the root subspaces with lambda_j in iF.
Subspace spectral_subspace(const MatrixGenerator& G, const ClosedRealSet& F, double tol = 1e-10);

/// ran (i beta - A)^n.
Subspace range_power(const MatrixGenerator& G, double beta, int n);

/// Intersection of ran (i beta - A)^n over the eigenvalue heights outside F.
Subspace ranges_intersection(const MatrixGenerator& G, const ClosedRealSet& F, int n);

/// Eigenvalue heights Im lambda_j of eigenvalues on the imaginary axis.
std::vector<double> eigen_heights(const MatrixGenerator& G, double tol = 1e-10);

struct TriangularGroup {
  CMatrix value;
  double quadrature_error = 0.0;
};

/// [[T1(t), int_0^t T1(s) B T2(t-s) ds], [0, T2(t)]] with the corner by
/// adaptive quadrature. Throws QuadratureError when it does not converge.
TriangularGroup triangular_group(const MatrixGenerator& A1, const MatrixGenerator& A2,
                                 const CMatrix& B, double t);

}  // namespace hbu::opgroup
