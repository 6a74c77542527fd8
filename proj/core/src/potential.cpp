#include "hbu/potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hbu/error.hpp"
#include "hbu/quadrature.hpp"

namespace hbu::potential {

namespace {

constexpr double kTarget = 0.1;
constexpr double kSlack = 1e-12;
constexpr double kMaxTail = 1e-6;
const double kLn2 = std::numbers::ln2;

// w^{-1}(e^{ls}) without forming e^{ls}.
double inverse_log(const Majorant& w, double ls) {
  switch (w.kind()) {
    case Majorant::Kind::Constant:
      return ls >= std::log(w.parameter()) ? 0.0 : 2.0;
    case Majorant::Kind::PowerLaw:
      if (ls < 0.0) return 2.0;
      return std::min(2.0, std::exp(-ls / w.parameter()));
    case Majorant::Kind::ExpLaw:
      if (ls <= 0.0) return 2.0;
      return std::min(2.0, std::pow(ls, -1.0 / w.parameter()));
    case Majorant::Kind::Custom:
      if (ls >= std::log(w.table().front().second)) return 0.0;
      return w.inverse(std::exp(ls));
  }
  return 2.0;
}

double log_arg(double T, long k) { return static_cast<double>(k) * kLn2 + std::log(T); }

}  // namespace

Majorant Majorant::constant(double v) {
  if (!(v >= 1.0) || !std::isfinite(v)) throw ParameterError("constant majorant needs v >= 1");
  return Majorant(Kind::Constant, v);
}

Majorant Majorant::power_law(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("power-law exponent must be positive");
  return Majorant(Kind::PowerLaw, p);
}

Majorant Majorant::exp_law(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw ParameterError("exp-law exponent must be positive");
  return Majorant(Kind::ExpLaw, p);
}

Majorant Majorant::custom(std::vector<std::pair<double, double>> table) {
  if (table.empty()) throw ParameterError("custom majorant table is empty");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto [y, v] = table[i];
    if (!(y > 0.0 && y < 2.0)) throw ParameterError("custom majorant abscissae must lie in (0,2)", static_cast<int>(i));
    if (!(v >= 1.0) || !std::isfinite(v)) throw ParameterError("custom majorant values must be >= 1", static_cast<int>(i));
    if (i > 0 && !(y > table[i - 1].first))
      throw ParameterError("custom majorant abscissae must increase", static_cast<int>(i));
    if (i > 0 && v > table[i - 1].second)
      throw ParameterError("custom majorant must be non-increasing", static_cast<int>(i));
  }
  Majorant m(Kind::Custom, 0.0);
  m.table_ = std::move(table);
  return m;
}

double Majorant::operator()(double y) const {
  if (!(y > 0.0 && y < 2.0)) throw DomainError("majorant is defined on (0,2)");
  switch (kind_) {
    case Kind::Constant: return param_;
    case Kind::PowerLaw: return std::max(1.0, std::pow(y, -param_));
    case Kind::ExpLaw: return std::exp(std::pow(y, -param_));
    case Kind::Custom: {
      if (y <= table_.front().first) return table_.front().second;
      if (y >= table_.back().first) return table_.back().second;
      auto it = std::upper_bound(table_.begin(), table_.end(), y,
                                 [](double v, const auto& p) { return v < p.first; });
      const auto& [y1, w1] = *it;
      const auto& [y0, w0] = *(it - 1);
      return w0 + (w1 - w0) * (y - y0) / (y1 - y0);
    }
  }
  return param_;
}

double Majorant::inverse(double s) const {
  if (kind_ != Kind::Custom) return inverse_log(*this, s > 0.0 ? std::log(s) : -1e300);
  if (table_.front().second <= s) return 0.0;
  if (table_.back().second > s) return 2.0;
  for (std::size_t i = 1; i < table_.size(); ++i) {
    const auto [y1, w1] = table_[i];
    if (w1 <= s) {
      const auto [y0, w0] = table_[i - 1];
      return y0 + (s - w0) * (y1 - y0) / (w1 - w0);
    }
  }
  return 2.0;
}

std::string Majorant::literal() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::Constant: os << "const:" << param_; break;
    case Kind::PowerLaw: os << "pow:" << param_; break;
    case Kind::ExpLaw: os << "exp:" << param_; break;
    case Kind::Custom: os << "custom:" << table_.size() << " points"; break;
  }
  return os.str();
}

std::string to_string(DomarFailure f) {
  switch (f) {
    case DomarFailure::None: return "none";
    case DomarFailure::SumExceeds: return "sum-exceeds";
    case DomarFailure::CutoffInsufficient: return "cutoff-insufficient";
    case DomarFailure::Divergent: return "divergent";
  }
  return "none";
}

double domar_tail_bound(const Majorant& w, double T, int K) {
  long k = static_cast<long>(K) + 1;
  double acc = 0.0;
  switch (w.kind()) {
    case Majorant::Kind::Constant:
    case Majorant::Kind::Custom:
      // Terms vanish from finite k on.
      for (; k < 1'000'000; ++k) {
        const double t = inverse_log(w, log_arg(T, k));
        if (t == 0.0) return acc;
        acc += t;
      }
      return acc;
    case Majorant::Kind::PowerLaw: {
      for (; log_arg(T, k) < 0.0; ++k) acc += 2.0;
      const double p = w.parameter();
      return acc + std::exp(-log_arg(T, k) / p) / (1.0 - std::exp2(-1.0 / p));
    }
    case Majorant::Kind::ExpLaw: {
      const double p = w.parameter();
      if (p >= 1.0) return std::numeric_limits<double>::infinity();
      for (; log_arg(T, k) <= 0.0 || inverse_log(w, log_arg(T, k)) >= 2.0; ++k) acc += 2.0;
      // Decreasing terms: sum_{j>=k} f(j) <= f(k) + int_k^inf f.
      const double ls = log_arg(T, k);
      const double e = 1.0 / p;
      return acc + std::pow(ls, -e) + std::pow(ls, 1.0 - e) / ((e - 1.0) * kLn2);
    }
  }
  return std::numeric_limits<double>::infinity();
}

std::optional<int> domar_cutoff(const Majorant& w, double T, double target) {
  for (long K = 64; K <= 100'000'000; K *= 2)
    if (domar_tail_bound(w, T, static_cast<int>(K)) <= target) return static_cast<int>(K);
  return std::nullopt;
}

DomarResult domar_check(const Majorant& w, double T, int K) {
  if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("T must be positive");
  if (K < 0) throw ParameterError("cutoff K must be non-negative");
  DomarResult r;
  r.T = T;
  r.cutoff = K;
  const double limit = kTarget * (1.0 + kSlack);
  for (long k = 0; k <= K; ++k) {
    r.partial_sum += inverse_log(w, log_arg(T, k));
    if (!r.crossing_index && r.partial_sum > limit) r.crossing_index = static_cast<int>(k);
  }
  r.tail_bound = domar_tail_bound(w, T, K);

  if (std::isinf(r.tail_bound)) {
    r.failure = DomarFailure::Divergent;
    double s = r.partial_sum;
    for (long k = static_cast<long>(K) + 1; !r.crossing_index && k < 100'000'000; ++k) {
      s += inverse_log(w, log_arg(T, k));
      if (s > limit) r.crossing_index = static_cast<int>(k);
    }
    return r;
  }
  if (r.crossing_index) {
    r.failure = DomarFailure::SumExceeds;
    return r;
  }
  if (r.tail_bound > kMaxTail) {
    r.failure = DomarFailure::CutoffInsufficient;
    return r;
  }
  if (r.partial_sum + r.tail_bound <= limit) {
    r.pass = true;
    r.bound = 2.0 * T;
  } else {
    r.failure = DomarFailure::SumExceeds;
  }
  return r;
}

MinimalT domar_minimal_T(const Majorant& w) {
  constexpr double floor_T = 1e-12;
  constexpr double ceil_T = 1e12;
  MinimalT out;
  auto passes = [&](double T, DomarResult* res = nullptr) {
    const auto K = domar_cutoff(w, T, 0.5 * kMaxTail);
    if (!K) return false;
    DomarResult r = domar_check(w, T, *K);
    if (res) *res = r;
    return r.pass;
  };
  if (!passes(ceil_T)) return out;
  double lo = floor_T;
  double hi = ceil_T;
  if (passes(lo)) {
    hi = lo;
  } else {
    while (hi / lo > 1.0 + 1e-9) {
      const double mid = std::sqrt(lo * hi);
      if (passes(mid))
        hi = mid;
      else
        lo = mid;
      ++out.iterations;
    }
  }
  DomarResult at;
  passes(hi, &at);
  out.found = true;
  out.T = hi;
  out.degenerate = at.partial_sum + at.tail_bound == 0.0;
  return out;
}

WidthFunction WidthFunction::canonical(double N) {
  if (!(N > 0.0) || !std::isfinite(N)) throw ParameterError("N must be positive");
  WidthFunction b;
  b.canonical_ = true;
  b.N_ = N;
  return b;
}

WidthFunction WidthFunction::general(std::function<double(double)> beta) {
  if (!beta) throw ParameterError("width function is empty");
  WidthFunction b;
  b.beta_ = std::move(beta);
  return b;
}

double WidthFunction::operator()(double x) const {
  if (!canonical_) return beta_(x);
  if (x <= std::exp(N_)) return std::exp(N_ - 1.0);
  const double l = std::log(x) / N_;
  return x * std::exp(-l * l);
}

CarlemanBound carleman_measure_bound(const WidthFunction& beta, double r1, double r2) {
  if (!(r1 > 0.0)) throw DomainError("carleman bound needs r1 > 0");
  if (!(r2 >= r1)) throw ParameterError("carleman bound needs r1 <= r2");
  CarlemanBound out;
  const double log_lead = std::log(8.0 / std::numbers::pi);
  if (r1 == r2) {
    out.value = 8.0 / std::numbers::pi;
    out.log_value = log_lead;
    out.log_integral = -std::numeric_limits<double>::infinity();
    return out;
  }
  quad::Options opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 20000;
  if (beta.is_canonical()) {
    // s = log r: I = int exp((s/N)^2) ds, scaled by its endpoint maximum.
    const double N = beta.N();
    const double a = std::log(r1);
    const double b = std::log(r2);
    const double m = std::max(a * a, b * b) / (N * N);
    auto f = [&](double s) { return std::exp(s * s / (N * N) - m); };
    const std::array<double, 1> br{0.0};
    const auto J = quad::integrate(f, a, b, br, opt);
    if (!J.converged) throw QuadratureError("carleman integral did not converge", J.error);
    out.log_integral = m + std::log(J.value);
  } else {
    auto f = [&](double r) {
      const double w = beta(r);
      if (!(w > 0.0)) throw DomainError("width function must be positive on [r1, r2]");
      return 1.0 / w;
    };
    f(r1);
    f(r2);
    const auto J = quad::integrate(f, r1, r2, {}, opt);
    if (!J.converged) throw QuadratureError("carleman integral did not converge", J.error);
    out.log_integral = std::log(J.value);
  }
  out.integral = std::exp(out.log_integral);
  out.log_value = log_lead - std::numbers::pi * out.integral;
  out.value = std::exp(out.log_value);
  return out;
}

SectorCertificate sector_certificate(double gamma, double delta, int N, int M,
                                     std::complex<double> z) {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ParameterError("gamma must lie in (0,1)");
  if (!(delta > 0.0)) throw ParameterError("delta must be positive");
  if (N < 1 || M < 1) throw ParameterError("N and M must be >= 1");
  for (int n = 1; n <= M; ++n) {
    const double lhs = (n - 1.0) * (n - 1.0);
    const double rhs = std::log(2.0 * delta * n) + (1.0 - gamma) * (n + 1.0) * (n + 1.0);
    if (lhs < rhs) {
      std::ostringstream os;
      os << "delta = " << delta << " violates exp[(n-1)^2] >= 2 delta n exp[(1-gamma)(n+1)^2] at n = "
         << n;
      throw ParameterError(os.str(), n);
    }
  }

  SectorCertificate c;
  const double dN = N;
  const double dM = M;
  c.term_exponents.push_back(std::pow(dN * dM, 1.0 / gamma) -
                             dN * std::exp((dM - 1.0) * (dM - 1.0)));
  for (int n = 2; n < M; ++n) {
    const double dn = n;
    c.term_exponents.push_back(delta * dn * dN * std::exp((1.0 - gamma) * (dn + 1.0) * (dn + 1.0)) -
                               dN * std::exp((dn - 1.0) * (dn - 1.0)));
  }
  double top = 0.0;
  for (double e : c.term_exponents) top = std::max(top, e);
  double acc = std::exp(-top);
  for (double e : c.term_exponents) acc += std::exp(e - top);
  c.log_bound = top + std::log(acc);
  c.bound = std::exp(c.log_bound);

  // Right minus left semicircle harmonic measure in the unit disc.
  const std::complex<double> zeta = z * std::exp(1.0 - dN);
  const double rho = std::abs(zeta);
  if (rho >= 1.0) {
    c.near_measure = std::numeric_limits<double>::infinity();
  } else {
    auto kernel = [&](double t) {
      const std::complex<double> e = std::polar(1.0, t);
      const double num = 4.0 * (zeta * std::conj(e)).real();
      return (1.0 - rho * rho) * num / (std::norm(e - zeta) * std::norm(e + zeta));
    };
    quad::Options opt;
    opt.abs_tol = 1e-300;
    opt.rel_tol = 1e-10;
    const double half = 0.5 * std::numbers::pi;
    c.near_measure = quad::integrate(kernel, -half, half, {}, opt).value / (2.0 * std::numbers::pi);
  }

  const bool near_ok = c.near_measure <= std::exp(-0.5 * dN);
  const bool sum_ok = c.log_bound <= std::log(3.0);
  c.certified = near_ok && sum_ok;
  if (!near_ok)
    c.reason = "N too small for z: near-piece harmonic measure exceeds e^{-N/2}";
  else if (!sum_ok)
    c.reason = "assembled bound exceeds 3";
  return c;
}

}  // namespace hbu::potential
