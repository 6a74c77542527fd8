#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gen.hpp"
#include "hbu/boundary_limit.hpp"
#include "hbu/error.hpp"
#include "hbu/halfplane_construction.hpp"

using namespace hbu::harmonic;
using hbu::geometry::ApproachFunction;
using hbu::geometry::HalfPlaneRegion;

namespace {

class HalfPlane : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { c_ = HalfPlaneConstruction::build({}); }
  static std::shared_ptr<const HalfPlaneConstruction> c_;
};

std::shared_ptr<const HalfPlaneConstruction> HalfPlane::c_;

}  // namespace

TEST(HalfPlaneParams, Rejected) {
  ConstructionParams p;
  p.delta = 0.0;
  EXPECT_THROW(HalfPlaneConstruction::build(p), hbu::ParameterError);
  p = {};
  p.gamma = 1.5;
  p.delta = 0.4;
  EXPECT_THROW(HalfPlaneConstruction::build(p), hbu::ParameterError);
  p = {};
  p.gamma = 3.5;
  EXPECT_THROW(HalfPlaneConstruction::build(p), hbu::ParameterError);
  p = {};
  p.eps = 0.0;
  EXPECT_THROW(HalfPlaneConstruction::build(p), hbu::ParameterError);
  p = {};
  p.delta = 1.0;
  EXPECT_THROW(HalfPlaneConstruction::build(p), hbu::ParameterError);
}

TEST(HalfPlaneParams, CoarseGridMissesTolerance) {
  ConstructionParams p;
  p.grid = 16;
  p.resolution_tol = 1e-12;
  try {
    HalfPlaneConstruction::build(p);
    FAIL() << "expected ResolutionError";
  } catch (const hbu::ResolutionError& e) {
    EXPECT_GT(e.estimate(), e.tolerance());
    EXPECT_EQ(e.tolerance(), 1e-12);
  }
}

TEST(HalfPlaneCutoff, Shape) {
  EXPECT_EQ(HalfPlaneConstruction::cutoff(1.0), 0.0);
  EXPECT_EQ(HalfPlaneConstruction::cutoff(1.25), 0.0);
  EXPECT_EQ(HalfPlaneConstruction::cutoff(1.75), 1.0);
  EXPECT_EQ(HalfPlaneConstruction::cutoff(2.0), 1.0);
  EXPECT_NEAR(HalfPlaneConstruction::cutoff(1.5), 0.5, 1e-15);
  double prev = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double t = 1.0 + k * 1e-3;
    const double v = HalfPlaneConstruction::cutoff(t);
    ASSERT_GE(v, prev);
    prev = v;
    const double h = 1e-6;
    const double fd = (HalfPlaneConstruction::cutoff(t + h) - HalfPlaneConstruction::cutoff(t - h)) / (2 * h);
    ASSERT_NEAR(HalfPlaneConstruction::cutoff_derivative(t), fd, 1e-6) << t;
  }
}

TEST_F(HalfPlane, F0RealOnUnitInterval) {
  for (double x : {1e-3, 0.01, 0.2, 0.5, 0.99}) {
    const Complex v = c_->f0(x);
    EXPECT_EQ(v.imag(), 0.0) << x;
    EXPECT_NEAR(v.real(), std::exp(0.1 / x - std::pow(x, -0.5)), 1e-14 * std::abs(v.real()) + 1e-300);
  }
}

TEST_F(HalfPlane, F0BoundedByExpEpsOverY) {
  gen::Rng r(31);
  for (int k = 0; k < 2000; ++k) {
    const Complex z(r.uniform(1e-6, 1.0), r.log_uniform(1e-4, 1.0));
    ASSERT_LE(std::log(std::abs(c_->f0(z))), 0.1 / z.imag() + 1e-12) << z;
  }
}

TEST_F(HalfPlane, F0DecaysAlongCurve) {
  // On x = 1.5 y^2, log|f0| / |z|^{-1/2} -> -cos(pi/4) as y -> 0.
  for (double y : {1e-4, 1e-5}) {
    const Complex z(1.5 * y * y, y);
    const double ratio = std::log(std::abs(c_->f0(z))) / std::pow(std::abs(z), -0.5);
    EXPECT_NEAR(ratio, -std::cos(std::numbers::pi / 4), 3e-3) << y;
  }
}

TEST_F(HalfPlane, F2Regions) {
  gen::Rng r(32);
  for (int k = 0; k < 1000; ++k) {
    const double y = r.uniform(0.05, 0.7);
    const double yg = y * y;
    const double x1 = r.uniform(-1.0, yg);
    EXPECT_EQ(c_->f2({x1, y}), Complex(0.0, 0.0));
    EXPECT_EQ(c_->dbar_f2({x1, y}), Complex(0.0, 0.0));
    const double x2 = r.uniform(2.0 * yg, 1.0);
    EXPECT_EQ(c_->f2({x2, y}), c_->f0({x2, y}));
    EXPECT_EQ(c_->dbar_f2({x2, y}), Complex(0.0, 0.0));
  }
}

TEST_F(HalfPlane, DbarMatchesFiniteDifference) {
  for (double y : {0.2, 0.5, 0.7}) {
    const Complex z(1.5 * y * y, y);
    const double h = 1e-6;
    const Complex fx = (c_->f2(z + h) - c_->f2(z - h)) / (2 * h);
    const Complex fy = (c_->f2(z + Complex(0, h)) - c_->f2(z - Complex(0, h))) / (2 * h);
    const Complex fd = 0.5 * (fx + Complex(0, 1) * fy);
    EXPECT_NEAR(std::abs(c_->dbar_f2(z) - fd), 0.0, 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_F(HalfPlane, VanishesOnEdge) {
  const double y = 0.5 / c_->grid();
  for (int k = 0; k <= 40; ++k) {
    const double x = -1.0 + 2.0 * k / 40;
    if (std::abs(x) < 0.05) continue;
    EXPECT_NEAR((*c_)({x, y}), 0.0, 1e-3) << x;
  }
  EXPECT_EQ(c_->resolution_estimate() <= 1e-4, true);
}

TEST_F(HalfPlane, LimitAlongQuadraticRegion) {
  const auto u = HarmonicFunction::halfplane(c_);
  const auto v = boundary_limit(u, HalfPlaneRegion{ApproachFunction::power(2.0), 0.0});
  EXPECT_EQ(v.decision, LimitDecision::TendsToZero);
}

TEST_F(HalfPlane, NonzeroWitness) {
  double best = 0.0;
  for (int i = 1; i < 10; ++i)
    for (int j = 1; j < 10; ++j) best = std::max(best, std::abs((*c_)({-1.0 + 0.2 * i, 0.1 * j})));
  EXPECT_GT(best, 1e-3);
}

TEST_F(HalfPlane, GrowthBoundedByExpEpsOverY) {
  gen::Rng r(33);
  for (int k = 0; k < 300; ++k) {
    const Complex z(r.uniform(-0.99, 0.99), r.log_uniform(1e-3, 0.99));
    const double v = std::abs((*c_)(z));
    ASSERT_LE(v, 1.0 + std::exp(0.1 / z.imag())) << z;
  }
}

TEST_F(HalfPlane, MeanValue) {
  gen::Rng r(34);
  const auto u = HarmonicFunction::halfplane(c_);
  for (int k = 0; k < 20; ++k) {
    const Complex z(r.uniform(-0.9, 0.9), r.uniform(0.1, 0.9));
    const double rho = 0.5 * distance_to_boundary(Domain::RectangleQ, z);
    ASSERT_NEAR(u(z), circle_average(u, z, rho, 64), 1e-4) << z;
  }
}
