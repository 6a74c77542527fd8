#include "hbu/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hbu/error.hpp"

namespace hbu::geometry {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const Complex kI{0.0, 1.0};

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

ApproachFunction ApproachFunction::zero() { return {Kind::Zero, 0.0}; }

ApproachFunction ApproachFunction::linear(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ParameterError("linear approach function needs c > 0");
  return {Kind::Linear, c};
}

ApproachFunction ApproachFunction::cubic(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ParameterError("cubic approach function needs c > 0");
  return {Kind::Cubic, c};
}

ApproachFunction ApproachFunction::power(double gamma) {
  const bool ok = (gamma > 0.0 && gamma < 1.0) || (gamma > 1.0 && gamma <= 3.0);
  if (!ok) throw ParameterError("power approach function needs gamma in (0,1) or (1,3]");
  return {Kind::Power, gamma};
}

ApproachFunction ApproachFunction::custom(std::vector<std::pair<double, double>> table) {
  if (table.size() < 2) throw ParameterError("custom approach table needs at least two samples");
  if (table.front().first != 0.0 || table.front().second != 0.0)
    throw ParameterError("custom approach table must start at (0, 0)");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [t, h] = table[i];
    if (!(t >= 0.0 && t <= 1.0) || !(h >= 0.0 && h <= 1.0))
      throw ParameterError("custom approach table leaves [0,1] x [0,1] at sample " +
                               std::to_string(i),
                           static_cast<int>(i));
    if (i > 0) {
      if (!(t > table[i - 1].first))
        throw ParameterError("custom approach table abscissae must increase at sample " +
                                 std::to_string(i),
                             static_cast<int>(i));
      if (h < table[i - 1].second)
        throw ParameterError("custom approach function decreases at sample " + std::to_string(i),
                             static_cast<int>(i));
    }
  }
  ApproachFunction f{Kind::Custom, 0.0};
  f.table_ = std::move(table);
  return f;
}

double ApproachFunction::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  switch (kind_) {
    case Kind::Zero:
      return 0.0;
    case Kind::Linear:
      return std::min(1.0, param_ * t);
    case Kind::Cubic:
      return std::min(1.0, param_ * t * t * t);
    case Kind::Power:
      return std::min(1.0, std::pow(t, param_));
    case Kind::Custom: {
      if (t >= table_.back().first) return table_.back().second;
      auto it = std::upper_bound(table_.begin(), table_.end(), t,
                                 [](double v, const auto& p) { return v < p.first; });
      const auto& [t1, h1] = *it;
      const auto& [t0, h0] = *(it - 1);
      return h0 + (h1 - h0) * (t - t0) / (t1 - t0);
    }
  }
  return 0.0;
}

std::string ApproachFunction::literal() const {
  switch (kind_) {
    case Kind::Zero:
      return "zero";
    case Kind::Linear:
      return "linear:" + format_number(param_);
    case Kind::Cubic:
      return "cubic:" + format_number(param_);
    case Kind::Power:
      return "power:" + format_number(param_);
    case Kind::Custom:
      return "custom:<" + std::to_string(table_.size()) + " points>";
  }
  return {};
}

Complex moebius_to_disc(double phi, Complex z) {
  const Complex den = kI + z;
  if (std::abs(den) == 0.0) throw DomainError("moebius_to_disc: pole at z = -i");
  return std::polar(1.0, phi) * (kI - z) / den;
}

Complex moebius_from_disc(double phi, Complex w) {
  if (!(std::abs(w) < 1.0)) throw DomainError("moebius_from_disc: |w| must be < 1");
  const Complex v = w * std::polar(1.0, -phi);
  return kI * (1.0 - v) / (1.0 + v);
}

bool region_contains(const HalfPlaneRegion& region, Complex point) {
  const double x = point.real();
  const double y = point.imag();
  if (!(y > 0.0 && y < 1.0)) return false;
  // Rounding allowance for points built as x0 +- h(y).
  const double slack = 4.0 * kEps * (std::abs(x) + std::abs(region.anchor));
  return std::abs(x - region.anchor) <= region.h(y) + slack;
}

bool region_contains(const DiscRegion& region, Complex point) {
  if (!(std::abs(point) < 1.0)) return false;
  const Complex z = moebius_from_disc(region.phi, point);
  const double y = z.imag();
  if (!(y > 0.0 && y < 1.0)) return false;
  // A stored disc point is only known to within one rounding unit; its
  // preimage moves by |dz/dw| = |i + z|^2 / 2 per unit.
  const double slack = 4.0 * kEps * std::norm(kI + z);
  return std::abs(z.real()) <= region.h(y) + slack;
}

bool region_contains(const Region& region, Complex point) {
  return std::visit([&](const auto& r) { return region_contains(r, point); }, region);
}

Complex target(const Region& region) {
  if (const auto* hp = std::get_if<HalfPlaneRegion>(&region)) return {hp->anchor, 0.0};
  return std::polar(1.0, std::get<DiscRegion>(region).phi);
}

std::vector<Complex> approach_path(const Region& region, int n) {
  if (n < 1) throw ParameterError("approach_path needs n >= 1");
  const ApproachFunction& h =
      std::visit([](const auto& r) -> const ApproachFunction& { return r.h; }, region);
  const double anchor =
      std::holds_alternative<HalfPlaneRegion>(region) ? std::get<HalfPlaneRegion>(region).anchor
                                                      : 0.0;
  std::vector<Complex> path;
  path.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    const double y = std::ldexp(1.0, -k);
    double offset = 0.0;
    switch ((k - 1) % 4) {
      case 1:
        offset = h(y);
        break;
      case 3:
        offset = -h(y);
        break;
      default:
        break;
    }
    path.emplace_back(anchor + offset, y);
  }
  if (const auto* dr = std::get_if<DiscRegion>(&region)) {
    for (auto& z : path) z = moebius_to_disc(dr->phi, z);
  }
  return path;
}

}  // namespace hbu::geometry
