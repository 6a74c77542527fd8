#pragma once

#include <complex>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hbu::harmonic {

using Complex = std::complex<double>;

enum class Domain {
  UnitDisc,
  /// Q = { x+iy : -1 < x < 1, 0 < y < 1 }.
  RectangleQ
};

/// u = Re sum_n a_n z^n on the unit disc.
struct FourierSeries {
  std::vector<Complex> coefficients;
};

/// Boundary density sampled at theta_k = 2 pi k / K, k = 0..K-1, interpolated
/// linearly and periodically between samples.
struct PoissonDensity {
  std::vector<double> samples;
  double operator()(double theta) const;
};

/// u(re^{i theta}) = sum_{n>0} n r^n sin(n theta) = Im(z / (1-z)^2).
struct ShapiroSeries {};

class HalfPlaneConstruction;

/// An immutable harmonic function on the disc or on Q.
class HarmonicFunction {
 public:
  using Representation = std::variant<FourierSeries, PoissonDensity, ShapiroSeries,
                                      std::shared_ptr<const HalfPlaneConstruction>>;

  static HarmonicFunction fourier(std::vector<Complex> coefficients);
  static HarmonicFunction constant(double value);
  static HarmonicFunction poisson(PoissonDensity density);
  static HarmonicFunction shapiro();
  static HarmonicFunction halfplane(std::shared_ptr<const HalfPlaneConstruction> construction);

  /// Throws DomainError outside the domain (the closed rectangle minus the
  /// origin for Q, the open disc otherwise).
  double operator()(Complex z) const;

  Domain domain() const;
  std::string name() const;
  const Representation& representation() const { return rep_; }

 private:
  explicit HarmonicFunction(Representation rep) : rep_(std::move(rep)) {}
  Representation rep_;
};

/// Closed form Im(z / (1-z)^2) of the series example. |z| < 1.
double shapiro_eval(Complex z);

/// Poisson integral of the density at |z| < 1.
///
/// Uses the kernel-normalised trapezoidal sum over the sample nodes while
/// the kernel is resolved by them, and adaptive Gauss-Kronrod on the
/// interpolated density closer to the circle.
double poisson_disc(const PoissonDensity& density, Complex z);

/// Average of u over the circle |w - center| = radius (trapezoidal rule).
double circle_average(const HarmonicFunction& u, Complex center, double radius, int nodes = 64);

/// Euclidean distance from z to the boundary of the domain.
double distance_to_boundary(Domain domain, Complex z);

}  // namespace hbu::harmonic
