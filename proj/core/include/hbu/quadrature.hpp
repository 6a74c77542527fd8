#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace hbu::quad {

struct Options {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
};

template <class V>
struct Result {
  V value;
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  bool converged = false;
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
template <class Derived>
double magnitude(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class V>
struct Segment {
  double a;
  double b;
  V value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F, class V>
std::pair<V, double> kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  V fc = f(center);
  V kronrod = kWgk[7] * fc;
  V gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    V f1 = f(center - dx);
    V f2 = f(center + dx);
    V sum = f1 + f2;
    kronrod = kronrod + kWgk[j] * sum;
    if (j % 2 == 1) gauss = gauss + kWg[j / 2] * sum;
  }
  kronrod = kronrod * half;
  gauss = gauss * half;
  V diff = kronrod - gauss;
  return {std::move(kronrod), magnitude(diff)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The value type may be double, std::complex<double> or a dense Eigen
/// matrix; the error is measured in the max-entry norm. `breaks` are
/// interior points where the integrand is singular or kinked.
template <class F>
auto integrate(F&& f, double a, double b, std::span<const double> breaks = {},
               const Options& opt = {}) {
  using V = std::decay_t<std::invoke_result_t<F&, double>>;
  using Seg = detail::Segment<V>;

  std::vector<double> nodes{a};
  for (double p : breaks)
    if (p > std::min(a, b) && p < std::max(a, b)) nodes.push_back(p);
  nodes.push_back(b);
  if (a < b)
    std::sort(nodes.begin() + 1, nodes.end() - 1);
  else
    std::sort(nodes.begin() + 1, nodes.end() - 1, std::greater<>());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::priority_queue<Seg> heap;
  Result<V> out;
  bool first = true;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    auto [v, e] = detail::kronrod15<F, V>(f, nodes[i], nodes[i + 1]);
    out.evaluations += 15;
    if (first) {
      out.value = v;
      first = false;
    } else {
      out.value = out.value + v;
    }
    out.error += e;
    heap.push(Seg{nodes[i], nodes[i + 1], std::move(v), e});
  }
  if (first) {
    // Degenerate interval: a single midpoint evaluation fixes the shape.
    out.value = f(a) * 0.0;
    out.converged = true;
    return out;
  }

  while (true) {
    const double target = std::max(opt.abs_tol, opt.rel_tol * magnitude(out.value));
    if (out.error <= target) {
      out.converged = true;
      break;
    }
    if (static_cast<int>(heap.size()) >= opt.max_intervals) break;
    Seg worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      // Interval exhausted at machine resolution; keep its contribution.
      heap.push(std::move(worst));
      break;
    }
    auto [v1, e1] = detail::kronrod15<F, V>(f, worst.a, mid);
    auto [v2, e2] = detail::kronrod15<F, V>(f, mid, worst.b);
    out.evaluations += 30;
    out.value = out.value - worst.value + v1 + v2;
    out.error += e1 + e2 - worst.error;
    heap.push(Seg{worst.a, mid, std::move(v1), e1});
    heap.push(Seg{mid, worst.b, std::move(v2), e2});
  }

  // Re-sum to shed the drift of incremental updates.
  std::vector<Seg> segs;
  segs.reserve(heap.size());
  while (!heap.empty()) {
    segs.push_back(heap.top());
    heap.pop();
  }
  out.value = segs.front().value;
  out.error = segs.front().error;
  for (std::size_t i = 1; i < segs.size(); ++i) {
    out.value = out.value + segs[i].value;
    out.error += segs[i].error;
  }
  out.intervals = static_cast<int>(segs.size());
  return out;
}

}  // namespace hbu::quad
