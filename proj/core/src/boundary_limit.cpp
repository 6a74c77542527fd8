#include "hbu/boundary_limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbu/error.hpp"

namespace hbu::harmonic {

using geometry::ApproachFunction;

std::string to_string(LimitDecision d) {
  switch (d) {
    case LimitDecision::TendsToZero: return "TendsToZero";
    case LimitDecision::BoundedByOne: return "BoundedByOne";
    case LimitDecision::Diverges: return "Diverges";
    case LimitDecision::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

namespace {

double tail_rate(const std::vector<Complex>& path, const std::vector<double>& samples,
                 Complex target, std::size_t from) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t k = from; k < path.size(); ++k) {
    const double a = std::abs(samples[k]);
    const double d = std::abs(path[k] - target);
    if (a > 0.0 && d > 0.0) {
      lx.push_back(std::log(d));
      ly.push_back(std::log(a));
    }
  }
  if (lx.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double den = n * sxx - sx * sx;
  if (den <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return (n * sxy - sx * sy) / den;
}

}  // namespace

LimitVerdict boundary_limit(const HarmonicFunction& u, const geometry::Region& region,
                            LimitMode mode, const LimitOptions& opt) {
  if (opt.points < 4) throw ParameterError("boundary_limit needs at least 4 path points");
  LimitVerdict v;
  v.region = region;
  v.target = geometry::target(region);
  v.path = geometry::approach_path(region, opt.points);
  v.samples.reserve(v.path.size());
  for (const Complex& z : v.path) {
    try {
      v.samples.push_back(u(z));
    } catch (const Error& e) {
      std::ostringstream os;
      os << "evaluation failed at " << z << ": " << e.what();
      throw EvaluationError(os.str(), z);
    }
  }

  const std::size_t n = v.samples.size();
  const std::size_t q = std::max<std::size_t>(1, n / 4);
  auto quarter_max = [&](std::size_t begin, std::size_t end) {
    double m = 0.0;
    for (std::size_t k = begin; k < end; ++k) m = std::max(m, std::abs(v.samples[k]));
    return m;
  };
  const double tail = quarter_max(n - q, n);
  const double before = quarter_max(n - 2 * q, n - q);
  v.rate = tail_rate(v.path, v.samples, v.target, n - q);

  if (!std::isfinite(tail) || tail > 1.0 / opt.tol) {
    v.decision = LimitDecision::Diverges;
  } else if (mode == LimitMode::MaxPrinciple) {
    v.decision = tail <= 1.0 + opt.tol ? LimitDecision::BoundedByOne : LimitDecision::Inconclusive;
  } else if (tail < opt.floor || (tail < opt.tol && tail <= before)) {
    v.decision = LimitDecision::TendsToZero;
  } else {
    v.decision = LimitDecision::Inconclusive;
  }
  return v;
}

double growth_budget(const ApproachFunction& h, GrowthTag tag) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (tag == GrowthTag::Bounded) return inf;
  if (tag == GrowthTag::Inconclusive) return -1.0;
  switch (h.kind()) {
    case ApproachFunction::Kind::Zero:
      return tag == GrowthTag::Poly ? 2.0 : -1.0;
    case ApproachFunction::Kind::Linear:
      if (tag == GrowthTag::Poly) return inf;
      if (tag == GrowthTag::Exp)
        return std::numbers::pi / (2.0 * std::atan(1.0 / h.parameter()));
      return -1.0;
    case ApproachFunction::Kind::Cubic:
      if (tag == GrowthTag::Poly) return inf;
      return tag == GrowthTag::Exp ? 1.0 : -1.0;
    case ApproachFunction::Kind::Power:
      if (h.parameter() > 1.0) {
        if (tag == GrowthTag::Poly) return inf;
        return tag == GrowthTag::Exp ? 1.0 : -1.0;
      }
      if (tag == GrowthTag::DoubleExp) return 1.0 - h.parameter();
      return inf;
    case ApproachFunction::Kind::Custom:
      return -1.0;
  }
  return -1.0;
}

UniquenessReport uniqueness_report(const HarmonicFunction& u, const ApproachFunction& h,
                                   const std::vector<double>& anchors,
                                   const UniquenessOptions& opt) {
  UniquenessReport rep;
  rep.anchors = anchors;
  const bool disc = u.domain() == Domain::UnitDisc;

  // Growth on s = 1-r (or y) from 0.1 down to 1e-3, geometric.
  std::vector<double> grid;
  for (int k = 0; k < 16; ++k) {
    const double s = 0.1 * std::pow(1e-2, k / 15.0);
    grid.push_back(disc ? 1.0 - s : s);
  }
  rep.growth = classify_growth(envelope(u, grid, 1024), opt.classifier);

  rep.all_tend_to_zero = !anchors.empty();
  for (double a : anchors) {
    geometry::Region region = disc ? geometry::Region(geometry::DiscRegion{h, a})
                                   : geometry::Region(geometry::HalfPlaneRegion{h, a});
    rep.verdicts.push_back(boundary_limit(u, region, LimitMode::ZeroLimit, opt.limit));
    if (rep.verdicts.back().decision != LimitDecision::TendsToZero) rep.all_tend_to_zero = false;
  }

  const double budget = growth_budget(h, rep.growth.tag);
  rep.within_budget = rep.growth.tag == GrowthTag::Bounded ||
                      (budget > 0.0 && rep.growth.exponent < budget - opt.margin);
  rep.predicts_zero = rep.all_tend_to_zero && rep.within_budget;

  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 16; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / 16.0;
      Complex z = disc ? std::polar(0.1 + 0.1 * i, theta)
                       : Complex(0.9 * std::cos(theta), 0.1 + 0.1 * i);
      rep.interior_max = std::max(rep.interior_max, std::abs(u(z)));
    }
  }
  rep.contradiction = rep.predicts_zero && rep.interior_max > opt.interior_tol;

  std::ostringstream os;
  os << "growth " << to_string(rep.growth.tag);
  if (rep.growth.tag != GrowthTag::Bounded && rep.growth.tag != GrowthTag::Inconclusive)
    os << "(" << rep.growth.exponent << ")";
  os << (rep.within_budget ? " inside" : " outside") << " the scale for h=" << h.literal();
  os << "; limits " << (rep.all_tend_to_zero ? "all zero" : "not all zero");
  if (rep.predicts_zero)
    os << "; u = 0 predicted, interior max " << rep.interior_max
       << (rep.contradiction ? " (contradiction)" : "");
  else
    os << "; no prediction, interior max " << rep.interior_max;
  rep.note = os.str();
  return rep;
}

}  // namespace hbu::harmonic
