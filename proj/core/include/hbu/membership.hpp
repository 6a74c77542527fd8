#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "hbu/operator_group.hpp"

namespace hbu::opgroup {

enum class Verdict { Member, NonMember, Inconclusive };

const char* to_string(Verdict v);

/// Decay evidence of ||D(alpha_k + i beta) x|| at one test height.
struct BetaEvidence {
  double beta = 0.0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<double> alphas;
  std::vector<double> norms;
  double tail_max = 0.0;
  /// Slope of log||D x|| against log alpha over the tail.
  double slope = std::numeric_limits<double>::quiet_NaN();
  /// sup over alpha (bounded_membership only).
  double sup = 0.0;
};

struct MembershipResult {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<BetaEvidence> evidence;
  std::uint64_t seed = 0;
};

struct MembershipOptions {
  /// alpha_k = 2^{-k}, k = k_min..k_max.
  int k_min = 0;
  int k_max = 40;
  int tail = 10;
  /// tol = rel_tol * max(1, ||x||).
  double rel_tol = 1e-6;
  std::uint64_t seed = 20240601;
  /// Random off-spectrum heights per gap of R \ F.
  int random_per_gap = 3;
};

/// Eigenvalue heights outside F plus `random_per_gap` uniform draws per gap
/// of R \ F. Draws keep 10% of the gap length from its ends (unbounded gaps
/// are cut 10 units from their finite end) and stay 0.4 away from every
/// eigenvalue height; gaps too narrow for that contribute nothing.
std::vector<double> test_heights(const MatrixGenerator& G, const ClosedRealSet& F,
                                 const MembershipOptions& opt = {});

/// lim_{alpha -> 0+} D(alpha + i beta) x = 0 for every test height outside F.
///
/// Per height: Member when the last `tail` norms are below tol with
/// positive log-slope, NonMember when they are all above tol without
/// decay, Inconclusive otherwise. Any NonMember height decides the result.
MembershipResult limit_membership(const MatrixGenerator& G, const ClosedRealSet& F,
                                  const CVector& x, const MembershipOptions& opt = {});
/// Same with x = V y given by modal coordinates y (no rounding leakage
/// between root subspaces).
MembershipResult limit_membership_modal(const MatrixGenerator& G, const ClosedRealSet& F,
                                        const CVector& y, const MembershipOptions& opt = {});

/// sup_{alpha > 0} ||D(alpha + i beta) x|| < inf for every test height.
///
/// alpha runs over 2^{10} .. 2^{-40}; a height is unbounded when the tail
/// grows like alpha^{-s}, s > 1/2. The sup is refined by Brent's method
/// around the largest sample.
MembershipResult bounded_membership(const MatrixGenerator& G, const ClosedRealSet& F,
                                    const CVector& x, const MembershipOptions& opt = {});
MembershipResult bounded_membership_modal(const MatrixGenerator& G, const ClosedRealSet& F,
                                          const CVector& y, const MembershipOptions& opt = {});

/// ||D(lambda) x|| along a path in the region |Im lambda - beta| <= h(Re lambda)
/// with h(t) = t^{a+1} (linear for a = 0).
struct TransportCheck {
  bool tends_to_zero = false;
  std::vector<Complex> lambdas;
  std::vector<double> norms;
};

TransportCheck transport_check(const MatrixGenerator& G, const CVector& y, double beta, int a,
                               int points = 40, double rel_tol = 1e-6);

}  // namespace hbu::opgroup
