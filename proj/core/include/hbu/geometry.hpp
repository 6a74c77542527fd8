#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hbu::geometry {

using Complex = std::complex<double>;

/// Scale function h: [0,1] -> [0,1], non-decreasing, continuous, h(0) = 0.
///
/// Selects the width |x| <= h(y) of an approach region at height y. The
/// analytic kinds are clamped to [0,1] so that c > 1 still yields a valid
/// approach function.
class ApproachFunction {
 public:
  enum class Kind { Zero, Linear, Cubic, Power, Custom };

  static ApproachFunction zero();
  static ApproachFunction linear(double c);
  static ApproachFunction cubic(double c);
  /// gamma in (0,1) or (1,3]; gamma = 1 is Linear(1).
  static ApproachFunction power(double gamma);
  /// Piecewise-linear interpolant of (t, h(t)) samples. The table must start
  /// at (0, 0), be strictly increasing in t and non-decreasing in h, and stay
  /// inside [0,1]. Values past the last sample are held constant.
  static ApproachFunction custom(std::vector<std::pair<double, double>> table);

  double operator()(double t) const;

  Kind kind() const { return kind_; }
  /// The c of Linear/Cubic or the gamma of Power; 0 otherwise.
  double parameter() const { return param_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }

  /// Literal form accepted by parse_approach_function (custom tables print
  /// as `custom:<n points>` and do not round-trip).
  std::string literal() const;

 private:
  ApproachFunction(Kind k, double p) : kind_(k), param_(p) {}

  Kind kind_;
  double param_;
  std::vector<std::pair<double, double>> table_;
};

/// Delta^h(x0) = { x+iy : 0 < y < 1, |x - x0| <= h(y) }.
struct HalfPlaneRegion {
  ApproachFunction h;
  double anchor = 0.0;
};

/// Omega^h(phi) = f_phi(Delta^h), anchored at the boundary point e^{i phi}.
struct DiscRegion {
  ApproachFunction h;
  double phi = 0.0;
};

using Region = std::variant<HalfPlaneRegion, DiscRegion>;

/// f_phi(z) = e^{i phi} (i - z) / (i + z). Throws DomainError at z = -i.
Complex moebius_to_disc(double phi, Complex z);

/// Inverse of f_phi on the open disc. Throws DomainError for |w| >= 1.
Complex moebius_from_disc(double phi, Complex w);

bool region_contains(const HalfPlaneRegion& region, Complex point);
bool region_contains(const DiscRegion& region, Complex point);
bool region_contains(const Region& region, Complex point);

/// Boundary point the region converges to: x0 or e^{i phi}.
Complex target(const Region& region);

/// n points inside the region converging geometrically to its target.
///
/// Heights follow y_k = 2^{-k}, k = 1..n, and the horizontal offset cycles
/// through 0, +h(y_k), 0, -h(y_k), so both the core and the edge of the
/// region are visited. Disc paths are the f_phi images of the half-plane path.
std::vector<Complex> approach_path(const Region& region, int n);

}  // namespace hbu::geometry
