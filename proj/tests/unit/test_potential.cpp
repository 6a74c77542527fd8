#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "hbu/error.hpp"
#include "hbu/potential.hpp"

using namespace hbu::potential;

namespace {

// Composite Simpson rule for int_a^b e^{s^2} ds.
double erfi_integral(double a, double b, int n = 200000) {
  const double h = (b - a) / n;
  double s = std::exp(a * a) + std::exp(b * b);
  for (int k = 1; k < n; ++k) s += (k % 2 ? 4.0 : 2.0) * std::exp((a + k * h) * (a + k * h));
  return s * h / 3.0;
}

Majorant random_majorant(gen::Rng& r) {
  switch (r.integer(0, 3)) {
    case 0: return Majorant::power_law(r.uniform(0.2, 3.0));
    case 1: return Majorant::exp_law(r.uniform(0.1, 0.45));
    case 2: return Majorant::constant(r.uniform(1.0, 50.0));
    default: {
      std::vector<std::pair<double, double>> t;
      double w = r.log_uniform(10.0, 1e4);
      for (int k = 1; k <= 8; ++k) {
        t.emplace_back(0.2 * k, w);
        w = std::max(1.0, w * r.uniform(0.2, 1.0));
      }
      return Majorant::custom(t);
    }
  }
}

}  // namespace

TEST(Majorant, Inverse) {
  const auto one = Majorant::constant(1.0);
  EXPECT_EQ(one.inverse(1.0), 0.0);
  EXPECT_EQ(one.inverse(0.5), 2.0);
  const auto p1 = Majorant::power_law(1.0);
  EXPECT_NEAR(p1.inverse(20.0), 0.05, 1e-15);
  EXPECT_EQ(p1.inverse(0.5), 2.0);
  EXPECT_EQ(p1.inverse(1.0), 1.0);
  const auto e1 = Majorant::exp_law(1.0);
  EXPECT_NEAR(e1.inverse(std::exp(4.0)), 0.25, 1e-15);
  EXPECT_THROW(Majorant::power_law(0.0), hbu::ParameterError);
  EXPECT_THROW(Majorant::constant(0.5), hbu::ParameterError);
  EXPECT_THROW(Majorant::custom({{0.5, 2.0}, {0.4, 1.0}}), hbu::ParameterError);
  EXPECT_THROW(Majorant::custom({{0.5, 2.0}, {1.0, 3.0}}), hbu::ParameterError);
}

TEST(Majorant, InverseIsGeneralisedInverse) {
  gen::Rng r(41);
  for (int k = 0; k < 200; ++k) {
    const auto w = random_majorant(r);
    double prev = 2.0;
    for (int j = 0; j < 50; ++j) {
      const double s = std::pow(10.0, -0.5 + 0.1 * j);
      const double y = w.inverse(s);
      ASSERT_LE(y, prev + 1e-15) << w.literal();
      prev = y;
      if (y > 0.0 && y < 2.0) {
        ASSERT_LE(w(std::min(1.999999, y * (1 + 1e-9) + 1e-12)), s * (1 + 1e-9)) << w.literal();
        if (y > 1e-9) {
          ASSERT_GT(w(y * (1 - 1e-6)), s * (1 - 1e-9)) << w.literal() << " s=" << s;
        }
      }
    }
  }
}

TEST(Domar, Examples) {
  const auto c = domar_check(Majorant::constant(1.0), 1.0, 10);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(c.partial_sum, 0.0);
  EXPECT_EQ(c.bound, 2.0);

  const auto p = domar_check(Majorant::power_law(1.0), 20.0, 60);
  EXPECT_TRUE(p.pass);
  double oracle = 0.0;
  for (int k = 0; k <= 60; ++k) oracle += std::ldexp(1.0, -k) / 20.0;
  EXPECT_NEAR(p.partial_sum + p.tail_bound, 0.1, 1e-9);
  EXPECT_NEAR(p.partial_sum, oracle, 1e-15);
  EXPECT_EQ(p.bound, 40.0);

  const auto e = domar_check(Majorant::exp_law(1.0), 5.0, 100);
  EXPECT_FALSE(e.pass);
  EXPECT_EQ(e.failure, DomarFailure::Divergent);
  double s = 0.0;
  int crossing = -1;
  for (int k = 0; crossing < 0; ++k) {
    s += std::min(2.0, 1.0 / (k * std::log(2.0) + std::log(5.0)));
    if (s > 0.1) crossing = k;
  }
  ASSERT_TRUE(e.crossing_index.has_value());
  EXPECT_EQ(*e.crossing_index, crossing);
  EXPECT_THROW(domar_check(Majorant::constant(1.0), 0.0, 10), hbu::ParameterError);
}

TEST(Domar, CutoffInsufficient) {
  const auto r = domar_check(Majorant::power_law(1.0), 40.0, 3);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.failure, DomarFailure::CutoffInsufficient);
}

TEST(Domar, MinimalT) {
  const auto t1 = domar_minimal_T(Majorant::power_law(1.0));
  ASSERT_TRUE(t1.found);
  EXPECT_NEAR(t1.T, 20.0, 20.0 * 1e-6);
  const double root = 10.0 / (1.0 - 1.0 / std::sqrt(2.0));
  const auto t2 = domar_minimal_T(Majorant::power_law(2.0));
  ASSERT_TRUE(t2.found);
  EXPECT_NEAR(t2.T, root * root, root * root * 1e-6);
  const auto c = domar_minimal_T(Majorant::constant(1.0));
  EXPECT_TRUE(c.found);
  EXPECT_TRUE(c.degenerate);
  EXPECT_FALSE(domar_minimal_T(Majorant::exp_law(1.0)).found);
}

TEST(Domar, MinimalTIsSharp) {
  for (double p : {0.5, 1.0, 1.5, 2.0}) {
    const auto w = Majorant::power_law(p);
    const auto t = domar_minimal_T(w);
    ASSERT_TRUE(t.found);
    const auto K = domar_cutoff(w, t.T * (1 - 1e-5), 1e-9);
    ASSERT_TRUE(K);
    EXPECT_TRUE(domar_check(w, t.T, *domar_cutoff(w, t.T, 1e-9)).pass);
    EXPECT_FALSE(domar_check(w, t.T * (1 - 1e-5), *K).pass) << p;
  }
}

TEST(Domar, MonotoneInT) {
  gen::Rng r(42);
  for (int k = 0; k < 100; ++k) {
    const auto w = random_majorant(r);
    bool seen = false;
    for (int j = 0; j < 40; ++j) {
      const double T = std::pow(10.0, -2.0 + 0.2 * j);
      const auto K = domar_cutoff(w, T, 5e-7);
      const bool ok = K && domar_check(w, T, *K).pass;
      ASSERT_FALSE(seen && !ok) << w.literal() << " T=" << T;
      seen = seen || ok;
    }
  }
}

TEST(Carleman, Examples) {
  const auto id = WidthFunction::general([](double r) { return r; });
  const auto b = carleman_measure_bound(id, 1.0, std::exp(1.0));
  EXPECT_NEAR(b.value, 8.0 / std::numbers::pi * std::exp(-std::numbers::pi), 1e-12);
  EXPECT_NEAR(b.integral, 1.0, 1e-10);
  EXPECT_EQ(carleman_measure_bound(id, 2.0, 2.0).value, 8.0 / std::numbers::pi);
  const auto neg = WidthFunction::general([](double r) { return 1.5 - r; });
  EXPECT_THROW(carleman_measure_bound(neg, 1.0, 2.0), hbu::DomainError);
}

TEST(Carleman, CanonicalBands) {
  const double N = 10.0;
  const auto beta = WidthFunction::canonical(N);
  for (int n : {2, 3, 4}) {
    const auto b = carleman_measure_bound(beta, std::exp((n - 1) * N), std::exp(n * N));
    // With r = e^{N s} the integral is N int_{n-1}^{n} e^{s^2} ds.
    const double I = N * erfi_integral(n - 1.0, n);
    EXPECT_NEAR(b.log_integral, std::log(I), 1e-8);
    EXPECT_LE(b.log_value, -N * std::exp((n - 1.0) * (n - 1.0)));
  }
}

TEST(Carleman, WidthInvariants) {
  gen::Rng r(43);
  for (int k = 0; k < 100; ++k) {
    const double N = r.uniform(1.0, 20.0);
    const auto beta = WidthFunction::canonical(N);
    const double x = r.log_uniform(1e-3, 1e12);
    ASSERT_GT(beta(x), 0.0);
    if (x > std::exp(N)) ASSERT_LE(beta(x), x);
  }
}

TEST(Carleman, MonotoneInEndpoints) {
  gen::Rng r(44);
  const auto beta = WidthFunction::canonical(5.0);
  for (int k = 0; k < 100; ++k) {
    const double a = r.log_uniform(1.0, 1e4);
    const double b = a * r.log_uniform(1.0, 100.0);
    const double c = b * r.log_uniform(1.0, 100.0);
    const auto ab = carleman_measure_bound(beta, a, b);
    const auto ac = carleman_measure_bound(beta, a, c);
    const auto bc = carleman_measure_bound(beta, b, c);
    ASSERT_LE(ac.log_value, ab.log_value + 1e-12);
    ASSERT_LE(ac.log_value, bc.log_value + 1e-12);
    ASSERT_LE(ab.value, 8.0 / std::numbers::pi);
    ASSERT_NEAR(ac.integral, ab.integral + bc.integral, 1e-8 * ac.integral);
  }
}

TEST(Sector, Examples) {
  const auto c = sector_certificate(0.5, 0.003, 50, 6, {10.0, 0.0});
  EXPECT_TRUE(c.certified);
  EXPECT_LE(c.bound, 3.0);
  for (double e : c.term_exponents) EXPECT_LE(e, 0.0);

  int expected = -1;
  for (int n = 1; n <= 6 && expected < 0; ++n)
    if (std::exp((n - 1.0) * (n - 1.0)) < 20.0 * n * std::exp(0.5 * (n + 1.0) * (n + 1.0))) expected = n;
  try {
    (void)sector_certificate(0.5, 10.0, 50, 6, {10.0, 0.0});
    FAIL() << "expected ParameterError";
  } catch (const hbu::ParameterError& e) {
    ASSERT_TRUE(e.index().has_value());
    EXPECT_EQ(*e.index(), expected);
  }
}

TEST(Sector, SingleBand) {
  const double N = 50.0;
  const auto c = sector_certificate(0.5, 0.003, 50, 1, {10.0, 0.0});
  ASSERT_EQ(c.term_exponents.size(), 1u);
  EXPECT_NEAR(c.term_exponents[0], std::pow(N, 2.0) - N, 1e-9);
  EXPECT_NEAR(c.log_bound, N * N - N, 1e-9 * (N * N));
  EXPECT_FALSE(c.certified);
}

TEST(Sector, TermsMatchFormula) {
  const double g = 0.5, d = 0.003, N = 50;
  const int M = 6;
  const auto c = sector_certificate(g, d, 50, M, {10.0, 0.0});
  ASSERT_EQ(c.term_exponents.size(), static_cast<std::size_t>(M - 1));
  EXPECT_NEAR(c.term_exponents[0], std::pow(N * M, 1 / g) - N * std::exp((M - 1.0) * (M - 1.0)), 1e-6);
  for (int n = 2; n < M; ++n) {
    const double e = d * n * N * std::exp((1 - g) * (n + 1.0) * (n + 1.0)) - N * std::exp((n - 1.0) * (n - 1.0));
    EXPECT_NEAR(c.term_exponents[n - 1], e, 1e-9 * std::abs(e)) << n;
  }
}
