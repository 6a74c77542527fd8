#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "hbu/boundary_limit.hpp"
#include "hbu/distribution.hpp"
#include "hbu/error.hpp"
#include "hbu/geometry.hpp"
#include "hbu/growth.hpp"
#include "hbu/halfplane_construction.hpp"
#include "hbu/membership.hpp"
#include "hbu/parse.hpp"
#include "hbu/potential.hpp"
#include "hbu_suite/suite.hpp"

namespace hbu::suite {

namespace {

using opgroup::CMatrix;
using opgroup::CVector;
using opgroup::MatrixGenerator;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string g(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

std::vector<MatrixGenerator> operator_generators(const RunOptions& opt) {
  std::vector<MatrixGenerator> out;
  for (const auto& c : generator_cases()) out.push_back(make_generator(c));
  for (const auto& m : opt.extra) out.push_back(m);
  return out;
}

Criterion finish(int id, std::string title, bool pass, std::string detail, const Stopwatch& sw) {
  return Criterion{id, std::move(title), pass, std::move(detail), sw.seconds()};
}

}  // namespace

Criterion resolvent_identities_suite(const RunOptions& opt) {
  Stopwatch sw;
  const auto gens = operator_generators(opt);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ub(-10.0, 10.0);
  std::vector<double> alphas;
  std::vector<double> betas;
  for (int i = 0; i < 20; ++i) alphas.push_back(std::pow(10.0, -6.0 + 6.0 * i / 19.0));
  for (int j = 0; j < 10; ++j) betas.push_back(ub(rng));
  double worst1 = 0.0;
  double worst2 = 0.0;
  int pairs = 0;
  for (const auto& G : gens) {
    // Eigenvalue heights replace the first random heights.
    auto bs = betas;
    const auto hs = opgroup::eigen_heights(G);
    for (std::size_t k = 0; k < hs.size() && k < 4; ++k) bs[k] = hs[k];
    for (double a : alphas)
      for (double b : bs) {
        const auto r = opgroup::resolvent_identities(G, a, b);
        worst1 = std::max(worst1, r.de1);
        worst2 = std::max(worst2, r.de2);
        ++pairs;
      }
  }
  const bool pass = worst1 <= 1e-10 && worst2 <= 1e-10 && sw.seconds() <= 10.0;
  return finish(1, "resolvent identities", pass,
                std::to_string(gens.size()) + " matrices x " + std::to_string(pairs / static_cast<int>(gens.size())) +
                    " pairs, max de1 " + g(worst1) + ", max de2 " + g(worst2),
                sw);
}

Criterion d1_equivalence(const RunOptions& opt) {
  Stopwatch sw;
  const auto gens = operator_generators(opt);
  const auto& fs = f_literals();
  const int cases = static_cast<int>(gens.size() * fs.size());
  std::vector<int> disagree(static_cast<std::size_t>(cases), 0);
  std::vector<int> inconclusive(static_cast<std::size_t>(cases), 0);
  std::vector<int> vectors(static_cast<std::size_t>(cases), 0);
  std::vector<char> subspace_ok(static_cast<std::size_t>(cases), 0);
  double max_a = 0.0;
  int max_degree = 0;
  for (const auto& G : gens) {
    max_a = std::max(max_a, opgroup::growth_exponent(G).a);
    max_degree = std::max(max_degree, G.nominal_degree());
  }
  parallel_for(cases, opt.workers, [&](int idx) {
    const auto& G = gens[static_cast<std::size_t>(idx) / fs.size()];
    const auto F = parse::real_set(fs[static_cast<std::size_t>(idx) % fs.size()]);
    const auto X = opgroup::spectral_subspace(G, F);
    opgroup::MembershipOptions mo;
    mo.seed = opt.seed;
    std::vector<CVector> members;
    const auto ys = modal_vector_suite(G.dim(), opt.seed + static_cast<std::uint64_t>(idx));
    for (const auto& y : ys) {
      const CVector x = G.spectral().V * y;
      const auto m = opgroup::limit_membership_modal(G, F, y, mo);
      const bool spectral = X.contains(x);
      if (m.verdict == opgroup::Verdict::Inconclusive)
        ++inconclusive[static_cast<std::size_t>(idx)];
      else if ((m.verdict == opgroup::Verdict::Member) != spectral)
        ++disagree[static_cast<std::size_t>(idx)];
      if (m.verdict == opgroup::Verdict::Member) members.push_back(x);
    }
    CMatrix cols(G.dim(), static_cast<Eigen::Index>(members.size()));
    for (std::size_t k = 0; k < members.size(); ++k) cols.col(static_cast<Eigen::Index>(k)) = members[k];
    const auto induced = members.empty() ? opgroup::Subspace(G.dim()) : opgroup::Subspace::span(cols);
    subspace_ok[static_cast<std::size_t>(idx)] = opgroup::same_subspace(induced, X);
    vectors[static_cast<std::size_t>(idx)] = static_cast<int>(ys.size());
  });
  int d = 0, inc = 0, total = 0, bad_sub = 0;
  for (int i = 0; i < cases; ++i) {
    d += disagree[static_cast<std::size_t>(i)];
    inc += inconclusive[static_cast<std::size_t>(i)];
    total += vectors[static_cast<std::size_t>(i)];
    bad_sub += subspace_ok[static_cast<std::size_t>(i)] ? 0 : 1;
  }
  const bool pass = gens.size() >= 12 && fs.size() >= 6 && d == 0 && inc == 0 && bad_sub == 0 &&
                    max_degree <= 2 && sw.seconds() <= 60.0;
  return finish(2, "d1 equivalence", pass,
                std::to_string(gens.size()) + " generators x " + std::to_string(fs.size()) + " sets, " +
                    std::to_string(total) + " vectors, disagreements " + std::to_string(d) + ", inconclusive " +
                    std::to_string(inc) + ", induced-subspace mismatches " + std::to_string(bad_sub) +
                    ", max fitted a " + g(max_a),
                sw);
}

Criterion d2_necessity(const RunOptions& opt) {
  Stopwatch sw;
  CMatrix A(1, 1);
  A(0, 0) = 0.0;
  const auto G = MatrixGenerator::from_matrix(A);
  const auto F = parse::real_set("[1,2]");
  CVector x(1);
  x(0) = 1.0;
  opgroup::MembershipOptions mo;
  mo.seed = opt.seed;
  const auto b = opgroup::bounded_membership(G, F, x, mo);
  const bool spectral = opgroup::spectral_subspace(G, F).contains(x);
  double sup_err = 0.0;
  std::string unbounded;
  for (const auto& e : b.evidence) {
    if (std::isinf(e.sup)) {
      unbounded += (unbounded.empty() ? "" : ",") + g(e.beta);
      continue;
    }
    sup_err = std::max(sup_err, std::abs(e.sup - 1.0 / std::abs(e.beta)) * std::abs(e.beta));
  }
  const bool bounded = b.verdict == opgroup::Verdict::Member;
  const bool pass = bounded && !spectral && sup_err <= 1e-9;
  std::string detail = std::string("bounded_membership ") + (bounded ? "true" : "false") + ", spectral " +
                       (spectral ? "true" : "false") + ", finite sups match 1/|beta| to " + g(sup_err);
  if (!unbounded.empty()) detail += ", unbounded at beta = " + unbounded;
  return finish(3, "d2 necessity", pass, detail, sw);
}

Criterion ranges_theorem(const RunOptions& opt) {
  Stopwatch sw;
  const auto gens = operator_generators(opt);
  const auto& fs = f_literals();
  int checked = 0, bad = 0;
  double worst = 0.0;
  for (const auto& G : gens) {
    const int a = G.nominal_degree();
    const int n = ranges_exponent(a);
    for (const auto& lit : fs) {
      const auto F = parse::real_set(lit);
      const auto X = opgroup::spectral_subspace(G, F);
      const auto R = opgroup::ranges_intersection(G, F, n);
      const auto ang = opgroup::principal_angles(X, R);
      if (!ang.empty()) worst = std::max(worst, ang.back());
      if (!opgroup::same_subspace(X, R)) ++bad;
      ++checked;
    }
  }
  const auto J = MatrixGenerator::from_jordan({{0.0, 2}}, opt.seed);
  const auto F = parse::real_set("[1,2]");
  const int gap = opgroup::ranges_intersection(J, F, 1).dim() - opgroup::spectral_subspace(J, F).dim();
  const bool larger = opgroup::spectral_subspace(J, F).dim() == 0 && gap == 1;
  const bool pass = bad == 0 && larger;
  return finish(4, "ranges theorem", pass,
                std::to_string(checked) + " (matrix, F) pairs, mismatches " + std::to_string(bad) +
                    ", max angle " + g(worst) + ", Jordan-2 n=1 dimension gap " + std::to_string(gap),
                sw);
}

Criterion poisson_identities(const RunOptions& opt) {
  Stopwatch sw;
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + k % 8;
    CMatrix H(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) H(i, j) = {gauss(rng), gauss(rng)};
    H = (0.5 * (H + H.adjoint())).eval();
    const CMatrix A = std::complex<double>(0.0, 1.0) * H;
    CVector x(n);
    for (int i = 0; i < n; ++i) x(i) = {gauss(rng), gauss(rng)};
    const double alpha = std::pow(10.0, -2.0 + 2.0 * unit(rng));
    const double beta = -5.0 + 10.0 * unit(rng);
    const auto [lhs, rhs] = opgroup::poisson_identity_selfadjoint(A, x, alpha, beta);
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  double worst_pair = 0.0;
  int pairings = 0;
  const auto& cases = generator_cases();
  for (std::size_t c : {std::size_t{1}, std::size_t{7}, std::size_t{9}, std::size_t{13}, std::size_t{17}}) {
    const auto G = make_generator(cases[c]);
    for (const auto& f : {opgroup::TestFunction::gaussian(0.0, 0.5), opgroup::TestFunction::gaussian(1.0, 1.0)})
      for (double alpha : {0.1, 0.5}) {
        const double horizon = 16.0 / f.width();
        const auto lhs = opgroup::distribution_pairing(G, f, alpha, horizon);
        const auto rhs = opgroup::pairing_by_resolvents(G, f, alpha);
        const double scale = std::max(1.0, rhs.value.cwiseAbs().maxCoeff());
        worst_pair = std::max(worst_pair, (lhs.value - rhs.value).cwiseAbs().maxCoeff() / scale);
        ++pairings;
      }
  }
  const bool pass = worst <= 1e-10 && worst_pair <= 1e-6 && sw.seconds() <= 30.0;
  return finish(5, "Poisson identities", pass,
                "100 skew-Hermitian triples, max rel diff " + g(worst) + "; " + std::to_string(pairings) +
                    " Gaussian pairings, max rel diff " + g(worst_pair),
                sw);
}

Criterion carleman_transform(const RunOptions& opt) {
  Stopwatch sw;
  const auto gens = operator_generators(opt);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> us(0.1, 2.0);
  std::uniform_real_distribution<double> ut(-3.0, 3.0);
  int over = 0;
  double worst_ratio = 0.0;
  for (int k = 0; k < 50; ++k) {
    const auto& G = gens[static_cast<std::size_t>(k) % gens.size()];
    const opgroup::Complex lambda(us(rng), ut(rng));
    const auto q = opgroup::carleman_quadrature(G, lambda);
    const CMatrix R = opgroup::resolvent(G, lambda);
    const double diff = (q.value - R).cwiseAbs().maxCoeff();
    const double budget = q.tail_bound + q.quadrature_error;
    worst_ratio = std::max(worst_ratio, diff / budget);
    if (diff > budget) ++over;
  }
  return finish(6, "Carleman transform", over == 0,
                "50 cases, over budget " + std::to_string(over) + ", max discrepancy/budget " + g(worst_ratio), sw);
}

Criterion shapiro_example(const RunOptions&) {
  Stopwatch sw;
  const auto u = harmonic::HarmonicFunction::shapiro();
  std::vector<double> grid;
  for (int k = 0; k < 24; ++k) grid.push_back(1.0 - 0.1 * std::pow(1e-2, k / 23.0));
  const auto prof = harmonic::envelope(u, grid);
  // Band from a dense sweep of the closed form.
  double omin = 1e300, omax = 0.0;
  for (double r : grid) {
    double m = 0.0;
    const int K = 400000;
    for (int j = 0; j < K; ++j) {
      const double th = 2.0 * std::numbers::pi * j / K;
      m = std::max(m, std::abs(harmonic::shapiro_eval(std::polar(r, th))));
    }
    omin = std::min(omin, m * (1 - r) * (1 - r));
    omax = std::max(omax, m * (1 - r) * (1 - r));
  }
  const double lo = 0.9 * omin, hi = 1.1 * omax;
  double rmin = 1e300, rmax = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double v = prof.max_abs_u[k] * (1 - grid[k]) * (1 - grid[k]);
    rmin = std::min(rmin, v);
    rmax = std::max(rmax, v);
  }
  const bool band = rmin >= lo && rmax <= hi && (rmax - rmin) / rmin <= 0.2;
  const auto cls = harmonic::classify_growth(prof);
  const bool poly = cls.tag == harmonic::GrowthTag::Poly && std::abs(cls.exponent - 2.0) <= 0.1;
  int zero = 0;
  for (int k = 0; k < 100; ++k) {
    const geometry::DiscRegion region{geometry::ApproachFunction::zero(), 2.0 * std::numbers::pi * k / 100.0};
    if (harmonic::boundary_limit(u, region).decision == harmonic::LimitDecision::TendsToZero) ++zero;
  }
  return finish(7, "Shapiro example", band && poly && zero == 100,
                "M(|u|)(1-r)^2 in [" + g(rmin) + ", " + g(rmax) + "] within band [" + g(lo) + ", " + g(hi) +
                    "], class " + harmonic::to_string(cls.tag) + "(" + g(cls.exponent) + "), radial TendsToZero " +
                    std::to_string(zero) + "/100",
                sw);
}

Criterion halfplane_construction(const RunOptions&) {
  Stopwatch sw;
  harmonic::ConstructionParams p;
  p.gamma = 2.0;
  p.eps = 0.1;
  p.delta = 0.5;
  p.grid = 400;
  const auto c = harmonic::HalfPlaneConstruction::build(p);
  const auto u = harmonic::HarmonicFunction::halfplane(c);
  const double tol = 1e-3;

  double edge = 0.0;
  const double yb = 0.5 / p.grid;
  for (int k = 0; k <= 200; ++k) {
    const double x = -1.0 + 2.0 * k / 200.0;
    if (std::abs(x) < 0.05) continue;
    edge = std::max(edge, std::abs(u({x, yb})));
  }

  const auto lim = harmonic::boundary_limit(u, geometry::HalfPlaneRegion{geometry::ApproachFunction::power(2.0), 0.0});
  const bool tends = lim.decision == harmonic::LimitDecision::TendsToZero;

  std::vector<double> ys;
  for (int k = 0; k < 24; ++k) ys.push_back(1e-4 * std::pow(5000.0, k / 23.0));
  const auto prof = harmonic::envelope(u, ys, 512);
  double C = -1e300;
  for (std::size_t k = 0; k < ys.size(); ++k) {
    const double lp = std::max(0.0, std::log(std::max(prof.max_abs_u[k], 1e-300)));
    C = std::max(C, lp - p.eps / ys[k]);
  }
  const bool envelope_ok = std::isfinite(C);

  double mv = 0.0;
  for (const harmonic::Complex z : {harmonic::Complex(-0.6, 0.3), harmonic::Complex(0.6, 0.3),
                                    harmonic::Complex(-0.7, 0.5), harmonic::Complex(0.7, 0.5),
                                    harmonic::Complex(-0.5, 0.8), harmonic::Complex(0.5, 0.8)})
    mv = std::max(mv, std::abs(u(z) - harmonic::circle_average(u, z, 0.1)));

  double witness = 0.0;
  for (int i = 1; i < 10; ++i)
    for (int j = 1; j < 10; ++j) witness = std::max(witness, std::abs(u({-1.0 + 0.2 * i, 0.1 * j})));

  const bool pass = edge <= tol && tends && envelope_ok && mv <= 1e-4 && witness >= 10 * tol;
  return finish(8, "half-plane construction", pass,
                "edge max " + g(edge) + ", limit " + harmonic::to_string(lim.decision) + ", C " + g(C) +
                    ", mean-value residual " + g(mv) + ", max |u| witness " + g(witness) + ", resolution " +
                    g(c->resolution_estimate()),
                sw);
}

Criterion domar_suite(const RunOptions& opt) {
  Stopwatch sw;
  const auto t1 = potential::domar_minimal_T(potential::Majorant::power_law(1.0));
  const auto t2 = potential::domar_minimal_T(potential::Majorant::power_law(2.0));
  // sum_k (2^k T)^{-1/2} = T^{-1/2} / (1 - 2^{-1/2}) = 1/10.
  const double pow2 = std::pow(10.0 / (1.0 - 1.0 / std::sqrt(2.0)), 2.0);
  const bool analytic = t1.found && std::abs(t1.T - 20.0) <= 1e-6 * 20.0 && t2.found &&
                        std::abs(t2.T - pow2) <= 1e-6 * pow2;

  const auto w = potential::Majorant::exp_law(1.0);
  const auto div = potential::domar_check(w, 5.0, potential::domar_cutoff(w, 5.0).value_or(64));
  const bool divergent = !div.pass && div.failure == potential::DomarFailure::Divergent && div.crossing_index.has_value();

  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int violations = 0;
  for (int m = 0; m < 50; ++m) {
    potential::Majorant maj = potential::Majorant::constant(1.0);
    switch (m % 4) {
      case 0: maj = potential::Majorant::power_law(0.3 + 2.7 * unit(rng)); break;
      case 1: maj = potential::Majorant::exp_law(0.2 + 0.7 * unit(rng)); break;
      case 2: maj = potential::Majorant::constant(1.0 + 9.0 * unit(rng)); break;
      default: {
        std::vector<std::pair<double, double>> table;
        double v = 1.0 + 50.0 * unit(rng);
        for (int i = 1; i <= 8; ++i) {
          table.emplace_back(0.2 * i, v);
          v = std::max(1.0, v * (0.3 + 0.7 * unit(rng)));
        }
        maj = potential::Majorant::custom(table);
      }
    }
    bool seen = false;
    for (int j = 0; j < 40; ++j) {
      const double T = std::pow(10.0, -3.0 + 9.0 * j / 39.0);
      const auto K = potential::domar_cutoff(maj, T, 5e-7);
      const bool ok = K && potential::domar_check(maj, T, *K).pass;
      if (seen && !ok) ++violations;
      seen = seen || ok;
    }
  }
  return finish(9, "Domar", analytic && divergent && violations == 0,
                "T*(pow:1) " + g(t1.T) + ", T*(pow:2) " + std::to_string(t2.T) + " vs " + std::to_string(pow2) +
                    ", exp:1 divergent crossing " + (div.crossing_index ? std::to_string(*div.crossing_index) : "none") +
                    ", monotonicity violations " + std::to_string(violations) + "/50",
                sw);
}

Criterion carleman_sector(const RunOptions&) {
  Stopwatch sw;
  const double N = 10.0;
  const auto beta = potential::WidthFunction::canonical(N);
  bool bands = true;
  std::string logs;
  for (int n : {2, 3, 4}) {
    const auto b = potential::carleman_measure_bound(beta, std::exp((n - 1) * N), std::exp(n * N));
    const double limit = -N * std::exp(static_cast<double>((n - 1) * (n - 1)));
    bands = bands && b.log_value <= limit;
    logs += (logs.empty() ? "" : ", ") + g(b.log_value) + "<=" + g(limit);
  }
  const auto cert = potential::sector_certificate(0.5, 0.003, 50, 6, {10.0, 0.0});
  const bool certified = cert.certified && cert.bound <= 3.0;
  // First n with e^{(n-1)^2} < 2 delta n e^{(1-gamma)(n+1)^2}.
  const double gamma = 0.5, delta = 10.0;
  int expected = -1;
  for (int n = 1; n <= 6 && expected < 0; ++n)
    if (std::exp((n - 1.0) * (n - 1.0)) < 2.0 * delta * n * std::exp((1.0 - gamma) * (n + 1.0) * (n + 1.0))) expected = n;
  int got = -2;
  try {
    (void)potential::sector_certificate(gamma, delta, 50, 6, {10.0, 0.0});
  } catch (const ParameterError& e) {
    got = e.index().value_or(-3);
  }
  return finish(10, "Carleman/sector", bands && certified && got == expected,
                "log bounds " + logs + "; certificate bound " + g(cert.bound) + "; delta=10 rejected at n=" +
                    std::to_string(got) + " (expected " + std::to_string(expected) + ")",
                sw);
}

Criterion geometry_suite(const RunOptions& opt) {
  Stopwatch sw;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> ux(-10.0, 10.0);
  std::uniform_real_distribution<double> uy(1e-3, 10.0);
  std::uniform_real_distribution<double> uphi(0.0, 2.0 * std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const geometry::Complex z(ux(rng), uy(rng));
    const double phi = uphi(rng);
    const auto back = geometry::moebius_from_disc(phi, geometry::moebius_to_disc(phi, z));
    worst = std::max(worst, std::abs(back - z) / std::max(1.0, std::abs(z)));
  }
  using geometry::ApproachFunction;
  const std::vector<std::pair<ApproachFunction, ApproachFunction>> pairs = {
      {ApproachFunction::zero(), ApproachFunction::cubic(1.0)},
      {ApproachFunction::cubic(1.0), ApproachFunction::linear(1.0)},
      {ApproachFunction::linear(1.0), ApproachFunction::power(0.5)}};
  int violations = 0;
  for (const auto& [h1, h2] : pairs)
    for (int i = 0; i < 100; ++i)
      for (int j = 0; j < 100; ++j) {
        const geometry::Complex z(-0.2 + 0.4 * i / 99.0, 0.2 * (j + 1) / 100.0);
        if (geometry::region_contains(geometry::HalfPlaneRegion{h1, 0.0}, z) &&
            !geometry::region_contains(geometry::HalfPlaneRegion{h2, 0.0}, z))
          ++violations;
      }
  const bool pass = worst <= 1e-12 && violations == 0;
  return finish(11, "geometry", pass,
                "round trip max " + g(worst) + ", monotonicity violations " + std::to_string(violations), sw);
}

std::vector<int> bundle(std::string_view name) {
  if (name == "function-theory") return {7, 8, 11};
  if (name == "operator") return {1, 2, 3, 4, 5, 6};
  if (name == "potential") return {9, 10};
  if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  throw ParseError("unknown suite '" + std::string(name) + "' (function-theory, operator, potential, all)");
}

Criterion run_criterion(int id, const RunOptions& opt) {
  switch (id) {
    case 1: return resolvent_identities_suite(opt);
    case 2: return d1_equivalence(opt);
    case 3: return d2_necessity(opt);
    case 4: return ranges_theorem(opt);
    case 5: return poisson_identities(opt);
    case 6: return carleman_transform(opt);
    case 7: return shapiro_example(opt);
    case 8: return halfplane_construction(opt);
    case 9: return domar_suite(opt);
    case 10: return carleman_sector(opt);
    case 11: return geometry_suite(opt);
    default: throw ParseError("no criterion " + std::to_string(id));
  }
}

}  // namespace hbu::suite
