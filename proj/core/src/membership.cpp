#include "hbu/membership.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <boost/math/tools/minima.hpp>

#include "hbu/error.hpp"
#include "hbu/geometry.hpp"

namespace hbu::opgroup {

namespace {

constexpr double kHeightClearance = 0.4;

double log_slope(const std::vector<double>& alphas, const std::vector<double>& norms, std::size_t from) {
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = from; i < norms.size(); ++i) {
    if (norms[i] > 0.0) {
      lx.push_back(std::log(alphas[i]));
      ly.push_back(std::log(norms[i]));
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
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

Verdict combine(const std::vector<BetaEvidence>& ev) {
  bool inconclusive = false;
  for (const auto& e : ev) {
    if (e.verdict == Verdict::NonMember) return Verdict::NonMember;
    if (e.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::Member;
}

double modal_norm(const MatrixGenerator& G, const CVector& y) { return (G.spectral().V * y).norm(); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Member: return "member";
    case Verdict::NonMember: return "non-member";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<double> test_heights(const MatrixGenerator& G, const ClosedRealSet& F,
                                 const MembershipOptions& opt) {
  const auto heights = eigen_heights(G);
  std::vector<double> out;
  for (double h : heights)
    if (!F.contains(h) && std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);

  std::mt19937_64 rng(opt.seed);
  for (auto gap : F.gaps()) {
    double lo = gap.a;
    double hi = gap.b;
    if (std::isinf(lo) && std::isinf(hi)) {
      lo = -10.0;
      hi = 10.0;
    } else if (std::isinf(lo)) {
      lo = hi - 10.0;
    } else if (std::isinf(hi)) {
      hi = lo + 10.0;
    }
    const double margin = 0.1 * (hi - lo);
    std::uniform_real_distribution<double> dist(lo + margin, hi - margin);
    for (int k = 0; k < opt.random_per_gap; ++k) {
      for (int attempt = 0; attempt < 100; ++attempt) {
        const double b = dist(rng);
        const bool clear = std::all_of(heights.begin(), heights.end(),
                                       [&](double h) { return std::abs(b - h) >= kHeightClearance; });
        if (clear) {
          out.push_back(b);
          break;
        }
      }
    }
  }
  return out;
}

MembershipResult limit_membership(const MatrixGenerator& G, const ClosedRealSet& F,
                                  const CVector& x, const MembershipOptions& opt) {
  return limit_membership_modal(G, F, G.spectral().Vinv * x, opt);
}

MembershipResult limit_membership_modal(const MatrixGenerator& G, const ClosedRealSet& F,
                                        const CVector& y, const MembershipOptions& opt) {
  if (!G.spectrum_on_imaginary_axis()) throw DomainError("limit_membership needs the spectrum on the imaginary axis");
  MembershipResult res;
  res.seed = opt.seed;
  const double tol = opt.rel_tol * std::max(1.0, modal_norm(G, y));
  for (double beta : test_heights(G, F, opt)) {
    BetaEvidence ev;
    ev.beta = beta;
    for (int k = opt.k_min; k <= opt.k_max; ++k) {
      const double alpha = std::ldexp(1.0, -k);
      ev.alphas.push_back(alpha);
      ev.norms.push_back(D_apply_modal(G, alpha, beta, y).norm());
    }
    const std::size_t from = ev.norms.size() - static_cast<std::size_t>(std::min<int>(opt.tail, static_cast<int>(ev.norms.size())));
    const auto tail_begin = ev.norms.begin() + static_cast<std::ptrdiff_t>(from);
    ev.tail_max = *std::max_element(tail_begin, ev.norms.end());
    const double tail_min = *std::min_element(tail_begin, ev.norms.end());
    ev.slope = log_slope(ev.alphas, ev.norms, from);
    if (ev.tail_max == 0.0 || (ev.tail_max < tol && ev.slope > 0.0))
      ev.verdict = Verdict::Member;
    else if (tail_min > tol && !(ev.slope > 0.0))
      ev.verdict = Verdict::NonMember;
    else
      ev.verdict = Verdict::Inconclusive;
    res.evidence.push_back(std::move(ev));
  }
  res.verdict = combine(res.evidence);
  return res;
}

MembershipResult bounded_membership(const MatrixGenerator& G, const ClosedRealSet& F,
                                    const CVector& x, const MembershipOptions& opt) {
  return bounded_membership_modal(G, F, G.spectral().Vinv * x, opt);
}

MembershipResult bounded_membership_modal(const MatrixGenerator& G, const ClosedRealSet& F,
                                          const CVector& y, const MembershipOptions& opt) {
  if (!G.spectrum_on_imaginary_axis()) throw DomainError("bounded_membership needs the spectrum on the imaginary axis");
  MembershipResult res;
  res.seed = opt.seed;
  for (double beta : test_heights(G, F, opt)) {
    BetaEvidence ev;
    ev.beta = beta;
    for (int k = -10; k <= opt.k_max; ++k) {
      const double alpha = std::ldexp(1.0, -k);
      ev.alphas.push_back(alpha);
      ev.norms.push_back(D_apply_modal(G, alpha, beta, y).norm());
    }
    const std::size_t from = ev.norms.size() - static_cast<std::size_t>(opt.tail);
    ev.tail_max = *std::max_element(ev.norms.begin() + static_cast<std::ptrdiff_t>(from), ev.norms.end());
    ev.slope = log_slope(ev.alphas, ev.norms, from);
    if (ev.slope < -0.5) {
      ev.verdict = Verdict::NonMember;
      ev.sup = std::numeric_limits<double>::infinity();
    } else {
      ev.verdict = Verdict::Member;
      const auto it = std::max_element(ev.norms.begin(), ev.norms.end());
      const std::size_t k = static_cast<std::size_t>(it - ev.norms.begin());
      ev.sup = *it;
      if (ev.sup > 0.0 && k > 0 && k + 1 < ev.norms.size()) {
        auto neg = [&](double la) { return -D_apply_modal(G, std::exp(la), beta, y).norm(); };
        const auto r = boost::math::tools::brent_find_minima(
            neg, std::log(ev.alphas[k + 1]), std::log(ev.alphas[k - 1]), 52);
        ev.sup = std::max(ev.sup, -r.second);
      }
    }
    res.evidence.push_back(std::move(ev));
  }
  res.verdict = combine(res.evidence);
  return res;
}

TransportCheck transport_check(const MatrixGenerator& G, const CVector& y, double beta, int a,
                               int points, double rel_tol) {
  if (a < 0 || a > 2) throw ParameterError("transport check supports growth degree 0, 1 or 2");
  const auto h = a == 0 ? geometry::ApproachFunction::linear(1.0)
                        : geometry::ApproachFunction::power(a + 1.0);
  const auto path = geometry::approach_path(geometry::HalfPlaneRegion{h, beta}, points);
  TransportCheck out;
  for (const auto& z : path) {
    const Complex lambda(z.imag(), z.real());
    out.lambdas.push_back(lambda);
    out.norms.push_back(D_apply_modal(G, lambda.real(), lambda.imag(), y).norm());
  }
  const double tol = rel_tol * std::max(1.0, modal_norm(G, y));
  const std::size_t n = out.norms.size();
  const std::size_t q = std::max<std::size_t>(1, n / 4);
  const double tail = *std::max_element(out.norms.end() - static_cast<std::ptrdiff_t>(q), out.norms.end());
  const double before = *std::max_element(out.norms.end() - static_cast<std::ptrdiff_t>(2 * q),
                                          out.norms.end() - static_cast<std::ptrdiff_t>(q));
  out.tends_to_zero = tail == 0.0 || (tail < tol && tail <= before);
  return out;
}

}  // namespace hbu::opgroup
