#pragma once

#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Core>

namespace hbu::harmonic {

using Complex = std::complex<double>;

struct ConstructionParams {
  double gamma = 2.0;
  double eps = 0.1;
  double delta = 0.5;
  /// Intervals per side of the Dirichlet grid on Q (even, >= 16).
  int grid = 400;
  /// Acceptable Richardson estimate of the Dirichlet discretisation error.
  double resolution_tol = 1e-4;
  /// Absolute tolerance of the Cauchy-transform quadrature.
  double quad_tol = 1e-10;
};

/// Harmonic u != 0 on Q vanishing on [-1,1] \ {0} whose limit along
/// Delta^h, h(t) = t^gamma, at 0 is zero, with log+ |u| <= eps / y + C.
///
///   f0 = exp(eps/z - z^{-delta})                  (principal branch)
///   f2 = f0 * f1(x / y^gamma)                     (wedge cut-off)
///   f3 = (1/pi) int_Q dbar f2(zeta) / (z - zeta)  (Cauchy transform)
///   f4 = harmonic extension of Im f3 from the boundary of Q
///   u  = Im(f2 - f3) + f4
///
/// The cut-off f1 is the quintic smoothstep on t in [1.25, 1.75]. The
/// Cauchy transform is evaluated by iterated adaptive quadrature in the
/// wedge coordinates (y, t = x / y^gamma), where the area element y^gamma
/// cancels the blow-up of dbar f2. f4 is the five-point discrete Dirichlet
/// solution interpolated bicubically.
class HalfPlaneConstruction {
 public:
  /// Throws ParameterError for parameters outside max(0, 2-gamma) < delta < 1,
  /// 1 < gamma <= 3, eps > 0, and ResolutionError when the Dirichlet grid
  /// misses the requested tolerance.
  static std::shared_ptr<const HalfPlaneConstruction> build(const ConstructionParams& params);

  const ConstructionParams& params() const { return params_; }

  Complex f0(Complex z) const;
  static double cutoff(double t);
  static double cutoff_derivative(double t);
  Complex f2(Complex z) const;
  /// dbar f2 in physical coordinates (zero outside the ramp).
  Complex dbar_f2(Complex z) const;
  Complex f3(Complex z) const;
  double f4(Complex z) const;

  /// u at a point of the closed rectangle other than 0.
  double operator()(Complex z) const;

  /// Richardson estimate of the Dirichlet discretisation error.
  double resolution_estimate() const { return resolution_estimate_; }
  /// Nodes per side minus one in x and y.
  int grid() const { return params_.grid; }

 private:
  explicit HalfPlaneConstruction(const ConstructionParams& p) : params_(p) {}

  ConstructionParams params_;
  // Nodal values of f4 on x_i = -1 + 2i/grid, y_j = j/grid.
  Eigen::MatrixXd nodal_;
  double resolution_estimate_ = 0.0;
};

/// Five-point discrete Dirichlet solve on the rectangle [x0,x1] x [y0,y1]
/// with (nx+1) x (ny+1) nodes. `values` carries the boundary data on its
/// outer ring; the interior is overwritten with the solution.
void solve_dirichlet(Eigen::MatrixXd& values, double hx, double hy);

}  // namespace hbu::harmonic
