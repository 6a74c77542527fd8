#pragma once

#include <limits>
#include <string>
#include <vector>

#include "hbu/geometry.hpp"
#include "hbu/growth.hpp"
#include "hbu/harmonic.hpp"

namespace hbu::harmonic {

enum class LimitMode { ZeroLimit, MaxPrinciple };
enum class LimitDecision { TendsToZero, BoundedByOne, Diverges, Inconclusive };

std::string to_string(LimitDecision d);

struct LimitOptions {
  int points = 40;
  double tol = 1e-3;
  /// Tails entirely below this are zero regardless of monotonicity.
  double floor = 1e-12;
};

struct LimitVerdict {
  geometry::Region region = geometry::HalfPlaneRegion{geometry::ApproachFunction::zero(), 0.0};
  Complex target;
  LimitDecision decision = LimitDecision::Inconclusive;
  /// Least-squares slope of log|u| against log|z - target| over the tail.
  double rate = std::numeric_limits<double>::quiet_NaN();
  std::vector<Complex> path;
  std::vector<double> samples;
};

/// Evaluates u along approach_path(region, points) and classifies the tail.
///
/// ZeroLimit: TendsToZero when the last quarter of |u| stays below tol and
/// does not exceed the previous quarter; Diverges above 1/tol. MaxPrinciple:
/// BoundedByOne when the tail of |u| is <= 1 + tol. Anything else is
/// Inconclusive. Evaluation failures are rethrown as EvaluationError.
LimitVerdict boundary_limit(const HarmonicFunction& u, const geometry::Region& region,
                            LimitMode mode = LimitMode::ZeroLimit, const LimitOptions& opt = {});

struct UniquenessReport {
  GrowthClass growth;
  std::vector<double> anchors;
  std::vector<LimitVerdict> verdicts;
  bool all_tend_to_zero = false;
  /// Growth sits strictly inside the admissible scale for h.
  bool within_budget = false;
  bool predicts_zero = false;
  /// Largest |u| over the interior sample set.
  double interior_max = 0.0;
  /// Growth and limits predict u = 0 yet interior samples are nonzero.
  bool contradiction = false;
  std::string note;
};

struct UniquenessOptions {
  LimitOptions limit;
  ClassifierOptions classifier;
  /// Slack subtracted from each critical exponent.
  double margin = 0.1;
  double interior_tol = 1e-6;
};

/// Largest admissible exponent for the given class and approach function,
/// or a negative value when the class never fits the scale. Bounded is
/// always admissible.
double growth_budget(const geometry::ApproachFunction& h, GrowthTag tag);

/// Growth class plus limits at each anchor (angles on the disc, real
/// anchors x0 on Q) combined into a consistency check.
UniquenessReport uniqueness_report(const HarmonicFunction& u, const geometry::ApproachFunction& h,
                                   const std::vector<double>& anchors,
                                   const UniquenessOptions& opt = {});

}  // namespace hbu::harmonic
