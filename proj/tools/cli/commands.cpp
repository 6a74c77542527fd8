#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>

#include "hbu/boundary_limit.hpp"
#include "hbu/error.hpp"
#include "hbu/geometry.hpp"
#include "hbu/growth.hpp"
#include "hbu/halfplane_construction.hpp"
#include "hbu/membership.hpp"
#include "hbu/parse.hpp"
#include "hbu/potential.hpp"
#include "hbu_suite/suite.hpp"

namespace hbu::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

/// Re-raises literal errors with the option they came from.
template <class F>
auto with_option(const std::string& option, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(option + ": " + e.what());
  }
}

struct Common {
  std::uint64_t seed = kDefaultSeed;
};

void add_common(CLI::App* sub, Common& c, std::string& out) {
  sub->add_option("--out", out, "CSV output path (a .meta.json sidecar is written next to it)");
  sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- region

struct RegionOpts {
  Common common;
  std::string h;
  std::string point;
  double anchor = 0.0;
  std::optional<double> phi;
  int N = 10;
};

geometry::Region make_region(const RegionOpts& o) {
  const auto h = with_option("--h", [&] { return parse::approach_function(o.h); });
  if (o.phi) return geometry::DiscRegion{h, *o.phi};
  return geometry::HalfPlaneRegion{h, o.anchor};
}

void add_region(CLI::App& app, Runner& selected, std::string& out) {
  auto* region = app.add_subcommand("region", "Approach regions and paths");
  region->require_subcommand(1);
  auto o = std::make_shared<RegionOpts>();

  auto* check = region->add_subcommand("check", "Membership of a point");
  check->add_option("--h", o->h, "Approach function literal")->required();
  check->add_option("--point", o->point, "Complex point, e.g. 0.05+0.1i")->required();
  check->add_option("--anchor", o->anchor, "Anchor x0 of the half-plane region")->capture_default_str();
  check->add_option("--phi", o->phi, "Boundary angle; selects the disc region");
  add_common(check, o->common, out);
  check->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "region-check";
      r.seed = o->common.seed;
      const auto region = make_region(*o);
      const auto z = with_option("--point", [&] { return parse::complex_number(o->point); });
      const bool in = geometry::region_contains(region, z);
      r.input = {{"h", o->h}, {"point", o->point}, {"anchor", num(o->anchor)}, {"phi", o->phi ? num(*o->phi) : ""}};
      r.columns = {"re", "im", "contains"};
      r.rows.push_back({num(z.real()), num(z.imag()), yes(in)});
      r.summary = {{"contains", yes(in)}};
      return r;
    };
  });

  auto* path = region->add_subcommand("path", "Points of an approach path");
  path->add_option("--h", o->h, "Approach function literal")->required();
  path->add_option("--N", o->N, "Number of points")->capture_default_str()->check(CLI::PositiveNumber);
  path->add_option("--anchor", o->anchor, "Anchor x0 of the half-plane region")->capture_default_str();
  path->add_option("--phi", o->phi, "Boundary angle; selects the disc region");
  add_common(path, o->common, out);
  path->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "region-path";
      r.seed = o->common.seed;
      const auto region = make_region(*o);
      const auto pts = geometry::approach_path(region, o->N);
      r.input = {{"h", o->h}, {"N", std::to_string(o->N)}, {"anchor", num(o->anchor)}, {"phi", o->phi ? num(*o->phi) : ""}};
      r.columns = {"k", "re", "im", "contains"};
      bool all = true;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        const bool in = geometry::region_contains(region, pts[k]);
        all = all && in;
        r.rows.push_back({std::to_string(k + 1), exact(pts[k].real()), exact(pts[k].imag()), yes(in)});
      }
      r.summary = {{"points", std::to_string(pts.size())}, {"all_inside", yes(all)}};
      r.status = all ? Status::Pass : Status::Fail;
      return r;
    };
  });
}

// ------------------------------------------------- counterexample / growth

struct ConstructionOpts {
  Common common;
  std::string kind = "shapiro";
  double gamma = 2.0;
  double eps = 0.1;
  double delta = 0.5;
  int grid = 400;
  double resolution_tol = 1e-4;
  std::string emit = "profile";
  int phis = 100;
  std::string write_config;
  double s_min = 0.0;
  double s_max = 0.0;
  int points = 0;
  double window = 0.0;
};

void add_construction_options(CLI::App* sub, ConstructionOpts& o) {
  sub->add_option("--kind", o.kind, "shapiro or halfplane")
      ->capture_default_str()
      ->check(CLI::IsMember({"shapiro", "halfplane"}));
  sub->add_option("--gamma", o.gamma, "Wedge exponent")->capture_default_str();
  sub->add_option("--eps", o.eps, "Growth parameter")->capture_default_str();
  sub->add_option("--delta", o.delta, "Decay exponent")->capture_default_str();
  sub->add_option("--grid", o.grid, "Dirichlet grid intervals per side")->capture_default_str();
  sub->add_option("--resolution-tol", o.resolution_tol, "Accepted discretisation error")->capture_default_str();
}

harmonic::HarmonicFunction make_function(const ConstructionOpts& o) {
  if (o.kind == "shapiro") return harmonic::HarmonicFunction::shapiro();
  harmonic::ConstructionParams p;
  p.gamma = o.gamma;
  p.eps = o.eps;
  p.delta = o.delta;
  p.grid = o.grid;
  p.resolution_tol = o.resolution_tol;
  return harmonic::HarmonicFunction::halfplane(harmonic::HalfPlaneConstruction::build(p));
}

std::vector<std::pair<std::string, std::string>> construction_echo(const ConstructionOpts& o) {
  if (o.kind == "shapiro") return {{"kind", o.kind}};
  return {{"kind", o.kind}, {"gamma", num(o.gamma)}, {"eps", num(o.eps)}, {"delta", num(o.delta)},
          {"grid", std::to_string(o.grid)}};
}

/// Growth grid: radii 1 - s (disc) or heights s (Q), log-spaced.
std::vector<double> growth_grid(const ConstructionOpts& o, bool disc) {
  const double lo = o.s_min > 0 ? o.s_min : (disc ? 1e-3 : 1e-4);
  const double hi = o.s_max > 0 ? o.s_max : (disc ? 0.1 : 1e-3);
  const int n = o.points > 0 ? o.points : (disc ? 24 : 16);
  if (!(lo > 0 && lo < hi && hi < 1)) throw ParameterError("need 0 < s-min < s-max < 1");
  std::vector<double> s;
  for (int k = 0; k < n; ++k) {
    const double v = hi * std::pow(lo / hi, n == 1 ? 0.0 : static_cast<double>(k) / (n - 1));
    s.push_back(disc ? 1.0 - v : v);
  }
  return s;
}

void profile_rows(Report& r, const harmonic::GrowthProfile& p) {
  r.columns = {p.domain == harmonic::Domain::UnitDisc ? "r" : "y", "M_u", "M_abs_u"};
  for (std::size_t k = 0; k < p.grid.size(); ++k)
    r.rows.push_back({exact(p.grid[k]), num(p.max_u[k]), num(p.max_abs_u[k])});
}

void add_counterexample(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("counterexample", "Series example and half-plane construction");
  auto o = std::make_shared<ConstructionOpts>();
  add_construction_options(sub, *o);
  sub->add_option("--emit", o->emit, "profile or verdicts")
      ->capture_default_str()
      ->check(CLI::IsMember({"profile", "verdicts"}));
  sub->add_option("--phis", o->phis, "Boundary angles for disc verdicts")->capture_default_str();
  sub->add_option("--write-config", o->write_config, "Write the construction parameters as a config file");
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "counterexample";
      r.seed = o->common.seed;
      r.input = construction_echo(*o);
      if (!o->write_config.empty()) {
        std::ofstream cfg(o->write_config);
        if (!cfg) throw ParseError("cannot write " + o->write_config);
        cfg << "[counterexample]\nkind=" << o->kind << "\ngamma=" << exact(o->gamma) << "\neps=" << exact(o->eps)
            << "\ndelta=" << exact(o->delta) << "\ngrid=" << o->grid << "\n";
      }
      const auto u = make_function(*o);
      const bool disc = u.domain() == harmonic::Domain::UnitDisc;
      if (o->emit == "profile") {
        const auto prof = harmonic::envelope(u, growth_grid(*o, disc));
        profile_rows(r, prof);
        r.summary = {{"function", u.name()}, {"points", std::to_string(prof.grid.size())}};
        return r;
      }
      r.columns = {disc ? "phi" : "x0", "decision", "rate"};
      int zero = 0, total = 0;
      auto add = [&](double key, const harmonic::LimitVerdict& v) {
        r.rows.push_back({exact(key), harmonic::to_string(v.decision), num(v.rate)});
        zero += v.decision == harmonic::LimitDecision::TendsToZero;
        ++total;
      };
      if (disc) {
        for (int k = 0; k < o->phis; ++k) {
          const double phi = 2.0 * std::numbers::pi * k / o->phis;
          add(phi, harmonic::boundary_limit(u, geometry::DiscRegion{geometry::ApproachFunction::zero(), phi}));
        }
      } else {
        add(0.0, harmonic::boundary_limit(u, geometry::HalfPlaneRegion{geometry::ApproachFunction::power(o->gamma), 0.0}));
      }
      r.summary = {{"function", u.name()}, {"tends_to_zero", std::to_string(zero) + "/" + std::to_string(total)}};
      r.status = zero == total ? Status::Pass : Status::Fail;
      return r;
    };
  });
}

void add_growth(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("growth", "Growth envelope and class");
  auto o = std::make_shared<ConstructionOpts>();
  add_construction_options(sub, *o);
  sub->add_option("--s-min", o->s_min, "Smallest 1-r (or y)");
  sub->add_option("--s-max", o->s_max, "Largest 1-r (or y)");
  sub->add_option("--points", o->points, "Grid points");
  sub->add_option("--window", o->window, "Classifier window (default: s-max)");
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "growth";
      r.seed = o->common.seed;
      r.input = construction_echo(*o);
      const auto u = make_function(*o);
      const bool disc = u.domain() == harmonic::Domain::UnitDisc;
      const auto grid = growth_grid(*o, disc);
      const auto prof = harmonic::envelope(u, grid);
      harmonic::ClassifierOptions co;
      co.window = o->window > 0 ? o->window : (disc ? 1.0 - grid.front() : grid.front());
      co.min_points = std::min(co.min_points, static_cast<int>(grid.size()));
      const auto cls = harmonic::classify_growth(prof, co);
      profile_rows(r, prof);
      r.summary = {{"class", harmonic::to_string(cls.tag)},
                   {"exponent", num(cls.exponent, 6)},
                   {"constant", num(cls.constant, 6)},
                   {"residual", num(cls.residual, 4)}};
      r.status = cls.tag == harmonic::GrowthTag::Inconclusive ? Status::Inconclusive : Status::Pass;
      return r;
    };
  });
}

// --------------------------------------------------------------- potential

struct DomarOpts {
  Common common;
  std::string majorant;
  std::optional<double> T;
  bool search = false;
  std::optional<int> K;
};

void add_domar(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("domar", "Domar summability condition");
  auto o = std::make_shared<DomarOpts>();
  sub->add_option("--majorant", o->majorant, "const:<v>, pow:<p>, exp:<p> or custom:<table>")->required();
  auto* t = sub->add_option("--T", o->T, "Check at this T");
  auto* s = sub->add_flag("--search-T", o->search, "Search the least passing T");
  t->excludes(s);
  sub->add_option("--K", o->K, "Cutoff (default: smallest with tail <= 1e-7)");
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    if (!o->T && !o->search) throw CLI::ValidationError("domar", "one of --T or --search-T is required");
    selected = [o] {
      Report r;
      r.experiment = "domar";
      r.seed = o->common.seed;
      const auto w = with_option("--majorant", [&] { return parse::majorant(o->majorant); });
      r.input = {{"majorant", o->majorant}};
      if (o->search) {
        const auto m = potential::domar_minimal_T(w);
        r.input.emplace_back("search_T", "true");
        r.columns = {"found", "T_star", "degenerate", "bound"};
        r.rows.push_back({yes(m.found), num(m.T), yes(m.degenerate), num(2.0 * m.T)});
        r.summary = {{"found", yes(m.found)}, {"T_star", num(m.T)}, {"degenerate", yes(m.degenerate)}};
        r.status = m.found ? Status::Pass : Status::Fail;
        return r;
      }
      const double T = *o->T;
      const int K = o->K ? *o->K : potential::domar_cutoff(w, T).value_or(64);
      const auto d = potential::domar_check(w, T, K);
      r.input.emplace_back("T", num(T));
      r.input.emplace_back("K", std::to_string(K));
      r.columns = {"k", "term", "partial_sum"};
      double s = 0.0;
      for (int k = 0; k <= K; ++k) {
        const double term = w.inverse(std::ldexp(T, k));
        s += term;
        r.rows.push_back({std::to_string(k), num(term), num(s)});
      }
      r.summary = {{"pass", yes(d.pass)},
                   {"bound", num(d.bound)},
                   {"partial_sum", num(d.partial_sum)},
                   {"tail_bound", num(d.tail_bound)},
                   {"failure", potential::to_string(d.failure)},
                   {"crossing_index", d.crossing_index ? std::to_string(*d.crossing_index) : "none"}};
      r.status = d.pass ? Status::Pass : Status::Fail;
      return r;
    };
  });
}

struct CarlemanOpts {
  Common common;
  double N = 10.0;
  int band = 2;
};

void add_carleman(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("carleman", "Ahlfors-Carleman bound on the canonical band");
  auto o = std::make_shared<CarlemanOpts>();
  sub->add_option("--N", o->N, "Width parameter")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("--band", o->band, "Band index n >= 2")->capture_default_str()->check(CLI::Range(2, 64));
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "carleman";
      r.seed = o->common.seed;
      r.input = {{"N", num(o->N)}, {"band", std::to_string(o->band)}};
      const int n = o->band;
      const auto b = potential::carleman_measure_bound(potential::WidthFunction::canonical(o->N),
                                                       std::exp((n - 1) * o->N), std::exp(n * o->N));
      const double limit = -o->N * std::exp(static_cast<double>((n - 1) * (n - 1)));
      const bool ok = b.log_value <= limit;
      r.columns = {"n", "log_integral", "log_bound", "log_limit", "holds"};
      r.rows.push_back({std::to_string(n), num(b.log_integral), num(b.log_value), num(limit), yes(ok)});
      r.summary = {{"log_bound", num(b.log_value)}, {"log_limit", num(limit)}, {"holds", yes(ok)}};
      r.status = ok ? Status::Pass : Status::Fail;
      return r;
    };
  });
}

struct SectorOpts {
  Common common;
  double gamma = 0.5;
  double delta = 0.003;
  int N = 50;
  int M = 6;
  std::string z = "10";
};

void add_sector(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("sector", "Sector harmonic-measure certificate");
  auto o = std::make_shared<SectorOpts>();
  sub->add_option("--gamma", o->gamma)->capture_default_str();
  sub->add_option("--delta", o->delta)->capture_default_str();
  sub->add_option("--N", o->N)->capture_default_str();
  sub->add_option("--M", o->M)->capture_default_str();
  sub->add_option("--z", o->z, "Evaluation point")->capture_default_str();
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "sector";
      r.seed = o->common.seed;
      r.input = {{"gamma", num(o->gamma)}, {"delta", num(o->delta)}, {"N", std::to_string(o->N)},
                 {"M", std::to_string(o->M)}, {"z", o->z}};
      const auto z = with_option("--z", [&] { return parse::complex_number(o->z); });
      r.columns = {"certified", "bound", "log_bound", "near_measure", "violating_index"};
      try {
        const auto c = potential::sector_certificate(o->gamma, o->delta, o->N, o->M, z);
        r.rows.push_back({yes(c.certified), num(c.bound), num(c.log_bound), num(c.near_measure), ""});
        r.summary = {{"certified", yes(c.certified)}, {"bound", num(c.bound)}, {"reason", c.reason}};
        r.status = c.certified ? Status::Pass : Status::Fail;
      } catch (const ParameterError& e) {
        if (!e.index()) throw;
        r.rows.push_back({"false", "", "", "", std::to_string(*e.index())});
        r.summary = {{"certified", "false"}, {"violating_index", std::to_string(*e.index())}, {"reason", e.what()}};
        r.status = Status::Fail;
      }
      return r;
    };
  });
}

// ----------------------------------------------------------------- opgroup

struct OpgroupOpts {
  Common common;
  std::string matrix;
  std::string theorem = "d1";
  std::string F;
  std::optional<int> n;
  std::string x;
  double beta = 0.0;
};

Report verify(const OpgroupOpts& o) {
  Report r;
  r.experiment = "opgroup-verify";
  r.seed = o.common.seed;
  const auto G = with_option("--matrix", [&] { return parse::matrix_source(o.matrix); });
  r.input = {{"matrix", o.matrix}, {"theorem", o.theorem}, {"F", o.F}};
  const auto needF = [&] {
    if (o.F.empty()) throw ParseError("--F is required for theorem " + o.theorem);
    return with_option("--F", [&] { return parse::real_set(o.F); });
  };
  if (o.theorem == "identities") {
    r.columns = {"alpha", "beta", "de1", "de2"};
    double worst = 0.0;
    for (int i = 0; i < 13; ++i)
      for (int j = 0; j < 11; ++j) {
        const double a = std::pow(10.0, -6.0 + 0.5 * i);
        const double b = -10.0 + 2.0 * j;
        const auto res = opgroup::resolvent_identities(G, a, b);
        worst = std::max({worst, res.de1, res.de2});
        r.rows.push_back({num(a), num(b), num(res.de1, 4), num(res.de2, 4)});
      }
    r.summary = {{"max_residual", num(worst, 4)}};
    r.status = worst <= 1e-10 ? Status::Pass : Status::Fail;
    return r;
  }
  const auto F = needF();
  const auto X = opgroup::spectral_subspace(G, F);
  if (o.theorem == "ranges") {
    const int n = o.n ? *o.n : suite::ranges_exponent(G.nominal_degree());
    if (n < 1) throw ParameterError("--n must be >= 1");
    const auto R = opgroup::ranges_intersection(G, F, n);
    const auto ang = opgroup::principal_angles(X, R);
    const bool eq = opgroup::same_subspace(X, R);
    r.input.emplace_back("n", std::to_string(n));
    r.columns = {"n", "dim_spectral", "dim_ranges", "max_angle", "equal"};
    r.rows.push_back({std::to_string(n), std::to_string(X.dim()), std::to_string(R.dim()),
                      num(ang.empty() ? 0.0 : ang.back(), 4), yes(eq)});
    r.summary = {{"dim_spectral", std::to_string(X.dim())}, {"dim_ranges", std::to_string(R.dim())}, {"equal", yes(eq)}};
    r.status = eq ? Status::Pass : Status::Fail;
    return r;
  }
  if (o.theorem != "d1" && o.theorem != "d2") throw ParseError("--theorem must be d1, d2, ranges or identities");
  std::vector<opgroup::CVector> ys;
  std::vector<std::string> labels;
  if (!o.x.empty()) {
    const auto v = with_option("--x", [&] { return parse::complex_list(o.x); });
    if (static_cast<int>(v.size()) != G.dim()) throw ParseError("--x: expected " + std::to_string(G.dim()) + " entries");
    opgroup::CVector x(G.dim());
    for (int i = 0; i < G.dim(); ++i) x(i) = v[static_cast<std::size_t>(i)];
    ys.push_back(G.spectral().Vinv * x);
    labels.push_back("x");
  } else {
    ys = suite::modal_vector_suite(G.dim(), o.common.seed);
    for (std::size_t k = 0; k < ys.size(); ++k) labels.push_back("v" + std::to_string(k));
  }
  opgroup::MembershipOptions mo;
  mo.seed = o.common.seed;
  const int n = static_cast<int>(ys.size());
  std::vector<std::vector<std::string>> rows(static_cast<std::size_t>(n));
  std::vector<int> state(static_cast<std::size_t>(n), 0);
  suite::parallel_for(n, suite::workers_from_env(), [&](int k) {
    const auto& y = ys[static_cast<std::size_t>(k)];
    const bool spectral = X.contains(G.spectral().V * y);
    const auto lim = opgroup::limit_membership_modal(G, F, y, mo);
    const auto bnd = opgroup::bounded_membership_modal(G, F, y, mo);
    const auto& decisive = o.theorem == "d1" ? lim : bnd;
    const bool agree = decisive.verdict != opgroup::Verdict::Inconclusive &&
                       (decisive.verdict == opgroup::Verdict::Member) == spectral;
    state[static_cast<std::size_t>(k)] = decisive.verdict == opgroup::Verdict::Inconclusive ? 2 : (agree ? 0 : 1);
    rows[static_cast<std::size_t>(k)] = {labels[static_cast<std::size_t>(k)], yes(spectral), opgroup::to_string(lim.verdict),
                                         opgroup::to_string(bnd.verdict), yes(agree)};
  });
  r.columns = {"vector", "member_spectral", "member_limit", "member_bounded", "agree"};
  r.rows = std::move(rows);
  const int fails = static_cast<int>(std::count(state.begin(), state.end(), 1));
  const int inc = static_cast<int>(std::count(state.begin(), state.end(), 2));
  r.summary = {{"vectors", std::to_string(n)}, {"disagreements", std::to_string(fails)},
               {"inconclusive", std::to_string(inc)}, {"dim_spectral", std::to_string(X.dim())}};
  r.status = fails ? Status::Fail : (inc ? Status::Inconclusive : Status::Pass);
  return r;
}

void add_opgroup(CLI::App& app, Runner& selected, std::string& out) {
  auto* op = app.add_subcommand("opgroup", "Matrix groups, resolvents and spectral subspaces");
  op->require_subcommand(1);
  auto o = std::make_shared<OpgroupOpts>();

  auto* ver = op->add_subcommand("verify", "Check a theorem on one matrix");
  ver->add_option("--matrix", o->matrix, "jordan:[(height,size),...] or a matrix file")->required();
  ver->add_option("--theorem", o->theorem, "d1, d2, ranges or identities")
      ->capture_default_str()
      ->check(CLI::IsMember({"d1", "d2", "ranges", "identities"}));
  ver->add_option("--F", o->F, "Closed set, e.g. [-inf,0]u[2,3.5]");
  ver->add_option("--n", o->n, "Range exponent (ranges)");
  ver->add_option("--x", o->x, "Vector, comma-separated (default: the vector suite)");
  add_common(ver, o->common, out);
  ver->callback([o, &selected] { selected = [o] { return verify(*o); }; });

  auto* decay = op->add_subcommand("alpha-decay", "||D(alpha + i beta) x|| for alpha = 2^-k");
  decay->add_option("--matrix", o->matrix, "jordan:[(height,size),...] or a matrix file")->required();
  decay->add_option("--x", o->x, "Vector, comma-separated")->required();
  decay->add_option("--beta", o->beta, "Height")->capture_default_str();
  add_common(decay, o->common, out);
  decay->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "opgroup-alpha-decay";
      r.seed = o->common.seed;
      const auto G = with_option("--matrix", [&] { return parse::matrix_source(o->matrix); });
      const auto v = with_option("--x", [&] { return parse::complex_list(o->x); });
      if (static_cast<int>(v.size()) != G.dim()) throw ParseError("--x: expected " + std::to_string(G.dim()) + " entries");
      opgroup::CVector x(G.dim());
      for (int i = 0; i < G.dim(); ++i) x(i) = v[static_cast<std::size_t>(i)];
      const opgroup::CVector y = G.spectral().Vinv * x;
      r.input = {{"matrix", o->matrix}, {"x", o->x}, {"beta", num(o->beta)}};
      r.columns = {"alpha", "norm"};
      for (int k = 0; k <= 40; ++k) {
        const double a = std::ldexp(1.0, -k);
        r.rows.push_back({exact(a), num(opgroup::D_apply_modal(G, a, o->beta, y).norm())});
      }
      r.summary = {{"rows", std::to_string(r.rows.size())}};
      return r;
    };
  });
}

// ------------------------------------------------------------------- suite

struct SuiteOpts {
  Common common;
  std::string name;
  std::vector<std::string> matrices;
  std::vector<int> criteria;
};

void add_suite(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("suite", "Acceptance bundles");
  auto o = std::make_shared<SuiteOpts>();
  sub->add_option("name", o->name, "function-theory, operator, potential or all")
      ->required()
      ->check(CLI::IsMember({"function-theory", "operator", "potential", "all"}));
  sub->add_option("--matrix", o->matrices, "Extra matrix files for the operator sweeps");
  sub->add_option("--criteria", o->criteria, "Restrict to these criterion ids")->delimiter(',');
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "suite-" + o->name;
      r.seed = o->common.seed;
      suite::RunOptions ro;
      ro.seed = o->common.seed;
      ro.workers = suite::workers_from_env();
      for (const auto& m : o->matrices)
        ro.extra.push_back(with_option("--matrix", [&] { return opgroup::MatrixGenerator::from_matrix(parse::matrix_file(m)); }));
      auto ids = suite::bundle(o->name);
      if (!o->criteria.empty()) {
        std::vector<int> keep;
        for (int id : ids)
          if (std::find(o->criteria.begin(), o->criteria.end(), id) != o->criteria.end()) keep.push_back(id);
        ids = keep;
      }
      r.input = {{"name", o->name}};
      r.columns = {"id", "title", "pass", "detail"};
      int failed = 0;
      for (int id : ids) {
        const auto c = suite::run_criterion(id, ro);
        r.rows.push_back({std::to_string(c.id), c.title, yes(c.pass), "\"" + c.detail + "\""});
        r.summary.emplace_back("AC" + std::to_string(c.id), std::string(c.pass ? "PASS" : "FAIL") + " " + c.title +
                                                               ": " + c.detail);
        failed += c.pass ? 0 : 1;
      }
      r.summary.emplace_back("failed", std::to_string(failed));
      r.status = failed ? Status::Fail : Status::Pass;
      return r;
    };
  });
}

// -------------------------------------------------------------------- emit

struct EmitOpts {
  Common common;
  std::string kind;
  std::string report;
};

void add_emit(CLI::App& app, Runner& selected, std::string& out) {
  auto* sub = app.add_subcommand("emit", "Plot data from a report CSV");
  auto o = std::make_shared<EmitOpts>();
  sub->add_option("--kind", o->kind, "envelope, verdict-sweep or alpha-decay")
      ->required()
      ->check(CLI::IsMember({"envelope", "verdict-sweep", "alpha-decay"}));
  sub->add_option("--report", o->report, "Report CSV")->required();
  add_common(sub, o->common, out);
  sub->callback([o, &selected] {
    selected = [o] {
      Report r;
      r.experiment = "emit-" + o->kind;
      r.seed = o->common.seed;
      r.csv_to_stdout = true;
      r.input = {{"kind", o->kind}, {"report", o->report}};
      const auto t = read_csv(o->report);
      std::vector<std::string> need;
      if (o->kind == "envelope") {
        r.columns = {"r", "M_r", "M_r_scaled"};
        need = {"r", "M_abs_u"};
      } else if (o->kind == "verdict-sweep") {
        r.columns = {"phi", "decision", "rate"};
        need = {"phi", "decision", "rate"};
      } else {
        r.columns = {"alpha", "norm", "alpha_norm"};
        need = {"alpha", "norm"};
      }
      if (t.columns.empty()) return r;
      std::vector<int> idx;
      for (const auto& c : need) {
        idx.push_back(t.find(c));
        if (idx.back() < 0) throw ParseError(o->report + ": missing column '" + c + "'");
      }
      for (const auto& row : t.rows) {
        auto cell = [&](int i) { return row[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]; };
        if (o->kind == "envelope") {
          const double rr = parse::number(cell(0));
          const double m = parse::number(cell(1));
          r.rows.push_back({cell(0), cell(1), num(m * (1 - rr) * (1 - rr))});
        } else if (o->kind == "verdict-sweep") {
          r.rows.push_back({cell(0), cell(1), cell(2)});
        } else {
          r.rows.push_back({cell(0), cell(1), num(parse::number(cell(0)) * parse::number(cell(1)))});
        }
      }
      return r;
    };
  });
}

}  // namespace

void register_commands(CLI::App& app, Runner& selected, std::string& out) {
  add_region(app, selected, out);
  add_counterexample(app, selected, out);
  add_growth(app, selected, out);
  add_domar(app, selected, out);
  add_carleman(app, selected, out);
  add_sector(app, selected, out);
  add_opgroup(app, selected, out);
  add_suite(app, selected, out);
  add_emit(app, selected, out);
}

}  // namespace hbu::cli
