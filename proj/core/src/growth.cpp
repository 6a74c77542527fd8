#include "hbu/growth.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "hbu/error.hpp"

namespace hbu::harmonic {

namespace {

struct Maxima {
  double signed_max = -std::numeric_limits<double>::infinity();
  double abs_max = 0.0;
};

// Maximum of g on sorted abscissae, then Brent refinement between the
// neighbours of the best sample.
template <class G>
double refined_max(G&& g, const std::vector<double>& xs, const std::vector<double>& vals) {
  const auto it = std::max_element(vals.begin(), vals.end());
  const std::size_t k = static_cast<std::size_t>(it - vals.begin());
  double best = *it;
  if (xs.size() < 3) return best;
  const double lo = xs[k == 0 ? 0 : k - 1];
  const double hi = xs[std::min(k + 1, xs.size() - 1)];
  if (!(hi > lo)) return best;
  auto neg = [&](double x) { return -g(x); };
  const auto r = boost::math::tools::brent_find_minima(neg, lo, hi, 40);
  return std::max(best, -r.second);
}

Maxima line_maxima(const std::function<double(double)>& f, const std::vector<double>& xs) {
  std::vector<double> v(xs.size());
  std::vector<double> a(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    v[i] = f(xs[i]);
    a[i] = std::abs(v[i]);
  }
  Maxima m;
  m.signed_max = refined_max(f, xs, v);
  m.abs_max = refined_max([&](double x) { return std::abs(f(x)); }, xs, a);
  return m;
}

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  bool ok = false;
};

// Least squares of log q against L; fails on non-positive q.
Fit log_fit(const std::vector<double>& L, const std::vector<double>& q) {
  Fit f;
  const std::size_t n = L.size();
  std::vector<double> lq(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(q[i] > 0.0) || !std::isfinite(q[i])) return f;
    lq[i] = std::log(q[i]);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += L[i];
    sy += lq[i];
    sxx += L[i] * L[i];
    sxy += L[i] * lq[i];
  }
  const double dn = static_cast<double>(n);
  const double den = dn * sxx - sx * sx;
  if (den <= 0.0) return f;
  f.slope = (dn * sxy - sx * sy) / den;
  f.intercept = (sy - f.slope * sx) / dn;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = lq[i] - f.intercept - f.slope * L[i];
    ss += e * e;
  }
  f.residual = std::sqrt(ss / dn);
  f.ok = true;
  return f;
}

double log_plus(double v) { return v > 1.0 ? std::log(v) : 0.0; }

}  // namespace

GrowthProfile envelope(const HarmonicFunction& u, const std::vector<double>& grid,
                       int resolution) {
  if (resolution < 8) throw ParameterError("envelope resolution must be >= 8");
  GrowthProfile p;
  p.domain = u.domain();
  p.grid = grid;
  p.resolution = resolution;
  for (double s : grid) {
    if (!(s > 0.0 && s < 1.0)) throw ParameterError("envelope grid values must lie in (0,1)");
    Maxima m;
    if (p.domain == Domain::UnitDisc) {
      std::vector<double> th(static_cast<std::size_t>(resolution) + 1);
      for (int k = 0; k <= resolution; ++k)
        th[static_cast<std::size_t>(k)] = 2.0 * std::numbers::pi * k / resolution;
      m = line_maxima([&](double t) { return u(std::polar(s, t)); }, th);
    } else {
      // Uniform samples plus a cluster at scale y around the origin.
      std::vector<double> xs;
      for (int k = 0; k <= resolution; ++k) xs.push_back(-1.0 + 2.0 * k / resolution);
      for (int j = -24; j <= 24; ++j) {
        const double x = s * std::pow(2.0, j / 4.0);
        if (x < 1.0) {
          xs.push_back(x);
          xs.push_back(-x);
        }
      }
      std::sort(xs.begin(), xs.end());
      xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
      m = line_maxima([&](double x) { return u(Complex(x, s)); }, xs);
    }
    p.max_u.push_back(m.signed_max);
    p.max_abs_u.push_back(std::max(m.abs_max, std::abs(m.signed_max)));
  }
  return p;
}

std::string to_string(GrowthTag tag) {
  switch (tag) {
    case GrowthTag::Bounded: return "Bounded";
    case GrowthTag::Poly: return "Poly";
    case GrowthTag::Exp: return "Exp";
    case GrowthTag::DoubleExp: return "DoubleExp";
    case GrowthTag::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

GrowthClass classify_growth(const GrowthProfile& profile, const ClassifierOptions& opt) {
  std::vector<double> L;
  std::vector<double> m;
  for (std::size_t i = 0; i < profile.grid.size(); ++i) {
    const double s = profile.domain == Domain::UnitDisc ? 1.0 - profile.grid[i] : profile.grid[i];
    if (s > opt.window + 1e-15 || s <= 0.0) continue;
    L.push_back(-std::log(s));
    m.push_back(profile.max_abs_u[i]);
  }
  if (static_cast<int>(L.size()) < opt.min_points)
    throw ParameterError("classify_growth needs at least " + std::to_string(opt.min_points) +
                         " samples inside the fit window");

  GrowthClass out;
  out.points = static_cast<int>(L.size());
  out.residual = std::numeric_limits<double>::infinity();

  if (*std::max_element(m.begin(), m.end()) == 0.0) {
    out.tag = GrowthTag::Bounded;
    out.residual = 0.0;
    return out;
  }

  const GrowthTag tags[] = {GrowthTag::Poly, GrowthTag::Exp, GrowthTag::DoubleExp};
  std::vector<double> q = m;
  for (int level = 0; level < 3; ++level) {
    if (level > 0)
      for (double& v : q) v = log_plus(v);
    const Fit f = log_fit(L, q);
    if (!f.ok) continue;
    out.residual = std::min(out.residual, f.residual);
    if (f.residual > opt.max_residual) continue;
    if (level == 0 && f.slope < opt.bounded_slope) {
      out.tag = GrowthTag::Bounded;
      out.exponent = 0.0;
      out.constant = *std::max_element(m.begin(), m.end());
      out.residual = f.residual;
      return out;
    }
    if (f.slope <= 0.0) continue;
    out.tag = tags[level];
    out.exponent = f.slope;
    out.constant = std::exp(f.intercept);
    out.residual = f.residual;
    return out;
  }
  out.tag = GrowthTag::Inconclusive;
  return out;
}

}  // namespace hbu::harmonic
