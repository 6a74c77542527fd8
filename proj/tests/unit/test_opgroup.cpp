#include <cmath>
#include <numbers>

#include <gtest/gtest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "gen.hpp"
#include "hbu/distribution.hpp"
#include "hbu/error.hpp"
#include "hbu/membership.hpp"
#include "hbu/operator_group.hpp"

using namespace hbu::opgroup;

namespace {

const Complex I(0.0, 1.0);

CMatrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  CMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

MatrixGenerator gen_of(const CMatrix& a) { return MatrixGenerator::from_matrix(a); }

CVector vec(std::initializer_list<Complex> v) {
  CVector x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const auto& c : v) x(i++) = c;
  return x;
}

CMatrix expm(const CMatrix& a) { return a.exp(); }

MatrixGenerator random_generator(gen::Rng& r) {
  return MatrixGenerator::from_jordan(gen::jordan_spec(r, 8, 3), r.seed());
}

// Modal coordinates supported on the root subspaces with heights in F.
CVector modal_inside(gen::Rng& r, const MatrixGenerator& G, const ClosedRealSet& F) {
  CVector y = CVector::Zero(G.dim());
  for (const auto& b : G.spectral().blocks)
    if (F.contains(b.lambda.imag()))
      for (int i = 0; i < b.multiplicity; ++i) y(b.offset + i) = r.complex_normal();
  return y;
}

ClosedRealSet set(std::vector<ClosedRealSet::Interval> parts) { return ClosedRealSet::from_intervals(parts); }

}  // namespace

TEST(RealSet, MembershipAndGaps) {
  const auto f = set({{2, 3}, {-1, 0}, {0, 0.5}});
  ASSERT_EQ(f.intervals().size(), 2u);
  EXPECT_TRUE(f.contains(-1.0));
  EXPECT_TRUE(f.contains(0.5));
  EXPECT_FALSE(f.contains(1.0));
  const auto g = f.gaps();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[1].a, 0.5);
  EXPECT_EQ(g[1].b, 2.0);
  EXPECT_TRUE(ClosedRealSet().gaps().size() == 1);
  EXPECT_TRUE(ClosedRealSet::whole_line().gaps().empty());
  EXPECT_THROW(set({{1, 0}}), hbu::ParameterError);
}

TEST(RealSet, GapsComplementMembership) {
  gen::Rng r(51);
  for (int k = 0; k < 200; ++k) {
    const auto f = gen::real_set(r);
    for (int j = 0; j < 50; ++j) {
      const double x = r.uniform(-8.0, 8.0);
      bool in_gap = false;
      for (const auto& g : f.gaps()) in_gap = in_gap || (g.a < x && x < g.b);
      ASSERT_NE(in_gap, f.contains(x)) << f.literal() << " x=" << x;
    }
    for (std::size_t i = 0; i + 1 < f.intervals().size(); ++i) ASSERT_LT(f.intervals()[i].b, f.intervals()[i + 1].a);
  }
}

TEST(GroupAt, Examples) {
  EXPECT_NEAR(std::abs(group_at(gen_of(mat({{0.0}})), 7.0)(0, 0) - 1.0), 0.0, 1e-15);
  const auto j = gen_of(mat({{0.0, 1.0}, {0.0, 0.0}}));
  EXPECT_LE((group_at(j, 3.5) - mat({{1.0, 3.5}, {0.0, 1.0}})).norm(), 1e-13);
  const auto d = gen_of(mat({{I, 0.0}, {0.0, -I}}));
  EXPECT_LE((group_at(d, std::numbers::pi) + CMatrix::Identity(2, 2)).norm(), 1e-14);
}

TEST(GroupAt, MatchesExpmAndGroupLaw) {
  gen::Rng r(52);
  for (int k = 0; k < 40; ++k) {
    const auto G = random_generator(r);
    const double t = r.uniform(-5.0, 5.0);
    const CMatrix e = group_at(G, t);
    const CMatrix o = expm(CMatrix(t * G.matrix()));
    ASSERT_LE((e - o).norm(), 1e-9 * std::max(1.0, o.norm())) << G.description();
    const double s = r.uniform(-100.0, 100.0);
    const double u = r.uniform(-100.0, 100.0);
    const CMatrix lhs = group_at(G, s) * group_at(G, u);
    const CMatrix rhs = group_at(G, s + u);
    ASSERT_LE(op_norm(lhs - rhs), 1e-9 * std::max(1.0, op_norm(rhs))) << G.description();
  }
}

TEST(Spectral, ResidualsOnRandomStructures) {
  gen::Rng r(53);
  for (int k = 0; k < 100; ++k) {
    const auto G = random_generator(r);
    ASSERT_LE(G.residuals().max(), 1e-10) << G.description();
    const auto F = MatrixGenerator::from_matrix(G.matrix());
    ASSERT_LE(F.residuals().max(), 1e-8) << G.description();
    ASSERT_EQ(F.max_index(), G.max_index()) << G.description();
  }
}

TEST(Growth, Examples) {
  gen::Rng r(54);
  const CMatrix h = gen::skew_hermitian(r, 4);
  const auto sk = growth_exponent(gen_of(h));
  EXPECT_LE(sk.a, 0.05);
  EXPECT_LE(sk.M, 1.01);
  const auto j2 = growth_exponent(MatrixGenerator::from_jordan({{0.0, 2}}));
  EXPECT_GE(j2.a, 0.95);
  EXPECT_LE(j2.a, 1.05);
  const auto j3 = growth_exponent(MatrixGenerator::from_jordan({{1.0, 3}}));
  EXPECT_GE(j3.a, 1.9);
  EXPECT_LE(j3.a, 2.1);
  EXPECT_THROW(growth_exponent(gen_of(mat({{1.0}}))), hbu::DomainError);
}

TEST(Resolvent, Examples) {
  EXPECT_NEAR(std::abs(resolvent(gen_of(mat({{0.0}})), 2.0)(0, 0) - 0.5), 0.0, 1e-15);
  const Complex l(0.3, -1.2);
  const auto R = resolvent(gen_of(mat({{0.0, 1.0}, {0.0, 0.0}})), l);
  EXPECT_LE((R - mat({{1.0 / l, 1.0 / (l * l)}, {0.0, 1.0 / l}})).norm(), 1e-14);
  EXPECT_THROW(resolvent(gen_of(mat({{I}})), I), hbu::SingularityError);
}

TEST(Resolvent, IdentityAndEstimate) {
  gen::Rng r(55);
  for (int k = 0; k < 50; ++k) {
    const auto G = random_generator(r);
    const Complex l(r.uniform(-2, 2), r.uniform(-4, 4));
    const Complex m(r.uniform(-2, 2), r.uniform(-4, 4));
    if (std::abs(l.real()) < 0.05 || std::abs(m.real()) < 0.05) continue;
    const CMatrix Rl = resolvent(G, l);
    const CMatrix Rm = resolvent(G, m);
    ASSERT_LE((Rl - Rm - (m - l) * Rl * Rm).norm(), 1e-10 * std::max(1.0, Rl.norm() * Rm.norm())) << G.description();
    const int a = G.nominal_degree();
    double worst = 0.0;
    for (int j = 0; j < 20; ++j) {
      const double re = std::pow(10.0, -3.0 + 0.15 * j);
      const double v = op_norm(resolvent(G, {re, r.uniform(-4, 4)})) * std::pow(re, a + 1);
      worst = std::max(worst, v);
    }
    const double M = growth_constant(G, a);
    ASSERT_LE(worst, 10.0 * M * std::tgamma(a + 1.0)) << G.description();
  }
}

TEST(CarlemanQuadrature, Examples) {
  auto q = carleman_quadrature(gen_of(mat({{0.0}})), 1.0);
  EXPECT_NEAR(std::abs(q.value(0, 0) - 1.0), 0.0, 1e-10);
  q = carleman_quadrature(gen_of(mat({{I}})), 1.0);
  EXPECT_NEAR(std::abs(q.value(0, 0) - 1.0 / (1.0 - I)), 0.0, 1e-10);
  q = carleman_quadrature(MatrixGenerator::from_jordan({{0.0, 2}}), 0.5);
  EXPECT_LE((q.value - mat({{2.0, 4.0}, {0.0, 2.0}})).norm(), 1e-9);
  EXPECT_THROW(carleman_quadrature(gen_of(mat({{0.0}})), {0.0, 1.0}), hbu::DomainError);
}

TEST(DOp, Examples) {
  EXPECT_NEAR(std::abs(D_op(gen_of(mat({{0.0}})), 0.5, 0.0)(0, 0) - 4.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(D_op(gen_of(mat({{I}})), 1.0, 0.0)(0, 0) - 1.0), 0.0, 1e-14);
}

TEST(DOp, IdentitiesOnGrid) {
  gen::Rng r(56);
  for (int k = 0; k < 30; ++k) {
    const auto G = random_generator(r);
    for (int j = 0; j < 10; ++j) {
      const double alpha = r.log_uniform(1e-6, 1.0);
      const double beta = r.uniform(-10.0, 10.0);
      const auto res = resolvent_identities(G, alpha, beta);
      ASSERT_LE(res.de1, 1e-10) << G.description() << " alpha=" << alpha << " beta=" << beta;
      ASSERT_LE(res.de2, 1e-10) << G.description() << " alpha=" << alpha << " beta=" << beta;
      // Independent oracle: the same quantity from Eigen's LU.
      const CMatrix A = G.matrix();
      const CMatrix Id = CMatrix::Identity(A.rows(), A.cols());
      const CMatrix d = (Complex(alpha, beta) * Id - A).lu().inverse() - (Complex(-alpha, beta) * Id - A).lu().inverse();
      const CMatrix ours = D_op(G, alpha, beta);
      ASSERT_LE((ours - d).norm(), 1e-7 * d.norm()) << G.description();
      const CVector y = CVector::Random(A.rows());
      ASSERT_LE((D_apply_modal(G, alpha, beta, y) - ours * G.spectral().V * y).norm(),
                1e-8 * std::max(1.0, (ours * G.spectral().V * y).norm()));
    }
  }
}

TEST(LocalSpectrum, Examples) {
  const auto G = gen_of(mat({{I, 0.0}, {0.0, 2.0 * I}}));
  auto s = local_spectrum(G, vec({1.0, 0.0}));
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(std::abs(s[0] - I), 0.0, 1e-12);
  EXPECT_EQ(local_spectrum(G, vec({1.0, 1.0})).size(), 2u);
  EXPECT_TRUE(local_spectrum(G, vec({0.0, 0.0})).empty());
}

TEST(SpectralSubspace, Examples) {
  const auto G = gen_of(mat({{I, 0.0}, {0.0, 2.0 * I}}));
  const auto x1 = spectral_subspace(G, ClosedRealSet::point(1.0));
  EXPECT_EQ(x1.dim(), 1);
  EXPECT_TRUE(x1.contains(vec({1.0, 0.0})));
  EXPECT_EQ(spectral_subspace(G, ClosedRealSet()).dim(), 0);
  EXPECT_EQ(spectral_subspace(G, ClosedRealSet::whole_line()).dim(), 2);
}

TEST(SpectralSubspace, Invariance) {
  gen::Rng r(57);
  for (int k = 0; k < 40; ++k) {
    const auto G = random_generator(r);
    const auto F = gen::real_set(r);
    const auto X = spectral_subspace(G, F);
    if (X.dim() == 0) continue;
    const CMatrix AX = G.matrix() * X.basis();
    for (Eigen::Index c = 0; c < AX.cols(); ++c) ASSERT_TRUE(X.contains(AX.col(c), 1e-8)) << G.description();
    const double t = r.uniform(-10.0, 10.0);
    ASSERT_TRUE(same_subspace(Subspace::span(group_at(G, t) * X.basis()), X)) << G.description();
  }
}

TEST(Ranges, Examples) {
  const auto N = MatrixGenerator::from_jordan({{0.0, 2}});
  EXPECT_EQ(range_power(N, 0.0, 2).dim(), 0);
  const auto r1 = range_power(N, 0.0, 1);
  EXPECT_EQ(r1.dim(), 1);
  EXPECT_TRUE(r1.contains(vec({1.0, 0.0})));
  EXPECT_EQ(range_power(N, 5.0, 3).dim(), 2);
  EXPECT_EQ(ranges_intersection(N, ClosedRealSet::point(1.0), 2).dim(), 0);
  EXPECT_TRUE(same_subspace(ranges_intersection(N, ClosedRealSet::point(1.0), 1), r1));
  EXPECT_EQ(ranges_intersection(N, set({{-1.0, 1.0}}), 1).dim(), 2);
}

TEST(Ranges, StabiliseAtIndex) {
  gen::Rng r(58);
  for (int k = 0; k < 40; ++k) {
    const auto G = random_generator(r);
    for (const auto& b : G.spectral().blocks) {
      const double beta = b.lambda.imag();
      int prev = G.dim() + 1;
      for (int n = 1; n <= b.index + 2; ++n) {
        const int d = range_power(G, beta, n).dim();
        if (n <= b.index)
          ASSERT_LT(d, prev) << G.description() << " n=" << n;
        else
          ASSERT_EQ(d, prev) << G.description() << " n=" << n;
        prev = d;
      }
    }
  }
}

TEST(Ranges, IntersectionEqualsSpectralSubspace) {
  gen::Rng r(59);
  for (int k = 0; k < 60; ++k) {
    const auto G = random_generator(r);
    const auto F = gen::real_set(r);
    const int n = std::max(2, G.max_index());
    ASSERT_TRUE(same_subspace(ranges_intersection(G, F, n), spectral_subspace(G, F)))
        << G.description() << " F=" << F.literal();
  }
}

TEST(Membership, Examples) {
  const auto G = gen_of(mat({{I, 0.0}, {0.0, 2.0 * I}}));
  const auto F = ClosedRealSet::point(1.0);
  EXPECT_EQ(limit_membership(G, F, vec({1.0, 0.0})).verdict, Verdict::Member);
  const auto e2 = limit_membership(G, F, vec({0.0, 1.0}));
  EXPECT_EQ(e2.verdict, Verdict::NonMember);
  for (const auto& ev : e2.evidence)
    if (std::abs(ev.beta - 2.0) < 1e-12)
      for (std::size_t k = 0; k < ev.alphas.size(); ++k) EXPECT_NEAR(ev.norms[k] * ev.alphas[k], 2.0, 1e-9);
  EXPECT_EQ(limit_membership(G, ClosedRealSet(), vec({0.0, 0.0})).verdict, Verdict::Member);
}

TEST(Membership, BoundedOnScalarZero) {
  // sup_alpha 2 alpha / (alpha^2 + beta^2) = 1/|beta| off zero, unbounded at beta = 0.
  const auto G = gen_of(mat({{0.0}}));
  const auto res = bounded_membership(G, set({{1.0, 2.0}}), vec({1.0}));
  EXPECT_EQ(res.verdict, Verdict::NonMember);
  for (const auto& ev : res.evidence) {
    if (ev.beta == 0.0)
      EXPECT_EQ(ev.verdict, Verdict::NonMember);
    else
      EXPECT_NEAR(ev.sup, 1.0 / std::abs(ev.beta), 1e-9 / std::abs(ev.beta)) << ev.beta;
  }
  EXPECT_EQ(bounded_membership(G, set({{1.0, 2.0}}), vec({0.0})).verdict, Verdict::Member);
}

TEST(Membership, ForwardInclusion) {
  gen::Rng r(60);
  for (int k = 0; k < 30; ++k) {
    const auto G = random_generator(r);
    const auto F = gen::real_set(r);
    const CVector y = modal_inside(r, G, F);
    ASSERT_NE(bounded_membership_modal(G, F, y).verdict, Verdict::NonMember) << G.description();
    ASSERT_EQ(limit_membership_modal(G, F, y).verdict, Verdict::Member) << G.description();
    ASSERT_TRUE(spectral_subspace(G, F).contains(G.spectral().V * y)) << G.description();
  }
}

TEST(Membership, ModalAgreesWithSpectral) {
  gen::Rng r(61);
  for (int k = 0; k < 40; ++k) {
    const auto G = random_generator(r);
    const auto F = gen::real_set(r);
    CVector y = CVector::Zero(G.dim());
    bool inside = true;
    for (const auto& b : G.spectral().blocks) {
      if (!r.coin()) continue;
      for (int i = 0; i < b.multiplicity; ++i) y(b.offset + i) = r.complex_normal();
      inside = inside && F.contains(b.lambda.imag());
    }
    const auto v = limit_membership_modal(G, F, y).verdict;
    ASSERT_EQ(v, inside ? Verdict::Member : Verdict::NonMember) << G.description() << " F=" << F.literal();
  }
}

TEST(Membership, TransportAlongPowerRegions) {
  gen::Rng r(62);
  for (int k = 0; k < 30; ++k) {
    const auto G = random_generator(r);
    const auto F = gen::real_set(r);
    const CVector y = modal_inside(r, G, F);
    for (const auto& ev : limit_membership_modal(G, F, y).evidence)
      ASSERT_TRUE(transport_check(G, y, ev.beta, G.nominal_degree()).tends_to_zero) << G.description();
  }
}

TEST(TriangularGroup, Examples) {
  const auto Z = gen_of(mat({{0.0, 0.0}, {0.0, 0.0}}));
  const CMatrix B = mat({{1.0, 2.0}, {-1.0, I}});
  const auto z = triangular_group(Z, Z, B, 3.0);
  EXPECT_LE((z.value.topRightCorner(2, 2) - 3.0 * B).norm(), 1e-12);
  EXPECT_LE((z.value.topLeftCorner(2, 2) - CMatrix::Identity(2, 2)).norm(), 1e-14);
  EXPECT_LE(z.value.bottomLeftCorner(2, 2).norm(), 0.0);
  const auto s = triangular_group(gen_of(mat({{I}})), gen_of(mat({{-I}})), mat({{1.0}}), 1.3);
  EXPECT_NEAR(std::abs(s.value(0, 1) - std::sin(1.3)), 0.0, 1e-12);
}

TEST(TriangularGroup, MatchesBlockExponential) {
  gen::Rng r(63);
  for (int k = 0; k < 20; ++k) {
    const int n1 = r.integer(1, 3), n2 = r.integer(1, 3);
    const CMatrix A1 = gen::skew_hermitian(r, n1);
    const CMatrix A2 = gen::skew_hermitian(r, n2);
    const CMatrix B = gen::matrix(r, n1, n2);
    CMatrix big = CMatrix::Zero(n1 + n2, n1 + n2);
    big.topLeftCorner(n1, n1) = A1;
    big.topRightCorner(n1, n2) = B;
    big.bottomRightCorner(n2, n2) = A2;
    const double t = r.uniform(-4.0, 4.0);
    const auto tri = triangular_group(gen_of(A1), gen_of(A2), B, t);
    ASSERT_LE((tri.value - expm(CMatrix(t * big))).norm(), 1e-8);
    if (k < 5) EXPECT_LE(growth_exponent(gen_of(big)).a, 1.05);
  }
}

TEST(Pairing, ScalarZeroGenerator) {
  const auto G = gen_of(mat({{0.0}}));
  const auto f = TestFunction::gaussian(0.3, 0.7);
  const auto p = distribution_pairing(G, f, 1.0, 30.0);
  // int e^{-|t|} f^(t) dt by composite Simpson on [-40, 40].
  Complex s = 0.0;
  const int n = 400000;
  const double h = 80.0 / n;
  for (int k = 0; k <= n; ++k) {
    const double t = -40.0 + k * h;
    const double w = (k == 0 || k == n) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    s += w * std::exp(-std::abs(t)) * f.transform(t);
  }
  s *= h / 3.0;
  EXPECT_NEAR(std::abs(p.value(0, 0) - s), 0.0, 1e-8);
  EXPECT_NEAR(std::abs(pairing_by_resolvents(G, f, 1.0).value(0, 0) - s), 0.0, 1e-8);
}

TEST(Pairing, BothSidesAgree) {
  const auto G = gen_of(mat({{I}}));
  const auto f = TestFunction::gaussian(1.0, 0.5);
  const auto lhs = distribution_pairing(G, f, 0.01, 40.0);
  const auto rhs = pairing_by_resolvents(G, f, 0.01);
  EXPECT_LE((lhs.value - rhs.value).norm(), 1e-6);
}

TEST(Pairing, EvenBumpIsHermitianAtZero) {
  gen::Rng r(64);
  const CMatrix A = gen::skew_hermitian(r, 3);
  const auto f = TestFunction::bump(0.0, 1.5);
  const auto p = distribution_pairing(gen_of(A), f, 0.0, 150.0, 1e-6);
  EXPECT_LE((p.value - p.value.adjoint()).norm(), 1e-8 * std::max(1.0, p.value.norm()));
}

TEST(Pairing, BumpTransformOracle) {
  const auto f = TestFunction::bump(0.4, 1.2);
  for (double t : {0.0, 0.7, 3.0, 11.0}) {
    Complex s = 0.0;
    const int n = 20000;
    const double h = 2.4 / n;
    for (int k = 1; k < n; ++k) {
      const double x = -0.8 + k * h;
      s += std::exp(Complex(0.0, -x * t)) * f(x);
    }
    s *= h;
    EXPECT_NEAR(std::abs(f.transform(t) - s), 0.0, 1e-9) << t;
  }
}

TEST(Poisson, Examples) {
  auto p = poisson_identity_selfadjoint(mat({{I}}), vec({1.0}), 1.0, 0.0);
  EXPECT_NEAR(std::abs(p.first - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(p.second, 1.0, 1e-14);
  const double s = 1.0 / std::sqrt(2.0);
  p = poisson_identity_selfadjoint(mat({{I, 0.0}, {0.0, 3.0 * I}}), vec({s, s}), 0.5, 3.0);
  const double want = 2 * 0.5 * (0.5 / (0.25 + 4.0) + 0.5 / 0.25);
  EXPECT_NEAR(std::abs(p.first - want), 0.0, 1e-12);
  EXPECT_NEAR(p.second, want, 1e-12);
  EXPECT_THROW(poisson_identity_selfadjoint(mat({{1.0}}), vec({1.0}), 1.0, 0.0), hbu::Error);
}

TEST(Poisson, RandomSkewHermitian) {
  gen::Rng r(65);
  for (int k = 0; k < 100; ++k) {
    const int n = r.integer(1, 8);
    const CMatrix A = gen::skew_hermitian(r, n);
    const CVector x = gen::vector(r, n);
    const auto p = poisson_identity_selfadjoint(A, x, r.log_uniform(1e-3, 2.0), r.uniform(-5, 5));
    ASSERT_NEAR(std::abs(p.first - p.second), 0.0, 1e-10 * std::max(1.0, p.second));
  }
}
