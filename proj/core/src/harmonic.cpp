#include "hbu/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbu/error.hpp"
#include "hbu/halfplane_construction.hpp"
#include "hbu/quadrature.hpp"

namespace hbu::harmonic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_disc(Complex z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("point outside the open unit disc");
}

}  // namespace

double PoissonDensity::operator()(double theta) const {
  const auto k = samples.size();
  if (k == 0) return 0.0;
  double s = theta / kTwoPi * static_cast<double>(k);
  s -= std::floor(s / static_cast<double>(k)) * static_cast<double>(k);
  const auto i0 = static_cast<std::size_t>(std::floor(s)) % k;
  const auto i1 = (i0 + 1) % k;
  const double frac = s - std::floor(s);
  return samples[i0] + frac * (samples[i1] - samples[i0]);
}

double shapiro_eval(Complex z) {
  require_disc(z);
  const Complex one_minus = 1.0 - z;
  return (z / (one_minus * one_minus)).imag();
}

double poisson_disc(const PoissonDensity& density, Complex z) {
  require_disc(z);
  const auto k = density.samples.size();
  if (k == 0) throw ParameterError("poisson_disc: empty density table");
  const double r = std::abs(z);
  const double gap = 1.0 - r;
  auto kernel = [&](double theta) {
    return (1.0 - r * r) / std::norm(std::polar(1.0, theta) - z);
  };

  if (gap * static_cast<double>(k) >= 40.0) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double p = kernel(kTwoPi * static_cast<double>(i) / static_cast<double>(k));
      num += p * density.samples[i];
      den += p;
    }
    return num / den;
  }

  const double phi = std::arg(z);
  const double h = kTwoPi / static_cast<double>(k);
  std::vector<double> breaks;
  const int span = 32;
  const double base = std::floor(phi / h);
  for (int j = -span; j <= span; ++j) breaks.push_back((base + j) * h);
  breaks.push_back(phi);
  quad::Options opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 20000;
  auto res = quad::integrate([&](double t) { return kernel(t) * density(t); }, phi - std::numbers::pi,
                             phi + std::numbers::pi, breaks, opt);
  return res.value / kTwoPi;
}

HarmonicFunction HarmonicFunction::fourier(std::vector<Complex> coefficients) {
  return HarmonicFunction(FourierSeries{std::move(coefficients)});
}

HarmonicFunction HarmonicFunction::constant(double value) { return fourier({Complex(value, 0.0)}); }

HarmonicFunction HarmonicFunction::poisson(PoissonDensity density) {
  if (density.samples.empty()) throw ParameterError("poisson: empty density table");
  return HarmonicFunction(std::move(density));
}

HarmonicFunction HarmonicFunction::shapiro() { return HarmonicFunction(ShapiroSeries{}); }

HarmonicFunction HarmonicFunction::halfplane(std::shared_ptr<const HalfPlaneConstruction> c) {
  if (!c) throw ParameterError("halfplane: null construction");
  return HarmonicFunction(std::move(c));
}

double HarmonicFunction::operator()(Complex z) const {
  return std::visit(
      Overloaded{[&](const FourierSeries& s) {
                   require_disc(z);
                   Complex acc = 0.0;
                   for (auto it = s.coefficients.rbegin(); it != s.coefficients.rend(); ++it)
                     acc = acc * z + *it;
                   return acc.real();
                 },
                 [&](const PoissonDensity& d) { return poisson_disc(d, z); },
                 [&](const ShapiroSeries&) { return shapiro_eval(z); },
                 [&](const std::shared_ptr<const HalfPlaneConstruction>& c) { return (*c)(z); }},
      rep_);
}

Domain HarmonicFunction::domain() const {
  return std::holds_alternative<std::shared_ptr<const HalfPlaneConstruction>>(rep_)
             ? Domain::RectangleQ
             : Domain::UnitDisc;
}

std::string HarmonicFunction::name() const {
  return std::visit(Overloaded{[](const FourierSeries&) { return std::string("fourier"); },
                               [](const PoissonDensity&) { return std::string("poisson"); },
                               [](const ShapiroSeries&) { return std::string("shapiro"); },
                               [](const std::shared_ptr<const HalfPlaneConstruction>&) {
                                 return std::string("halfplane");
                               }},
                    rep_);
}

double circle_average(const HarmonicFunction& u, Complex center, double radius, int nodes) {
  if (nodes < 3) throw ParameterError("circle_average needs at least 3 nodes");
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j)
    sum += u(center + std::polar(radius, kTwoPi * j / nodes));
  return sum / nodes;
}

double distance_to_boundary(Domain domain, Complex z) {
  if (domain == Domain::UnitDisc) return 1.0 - std::abs(z);
  return std::min({1.0 - z.real(), z.real() + 1.0, z.imag(), 1.0 - z.imag()});
}

}  // namespace hbu::harmonic
