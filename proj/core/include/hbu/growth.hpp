#pragma once

#include <string>
#include <vector>

#include "hbu/harmonic.hpp"

namespace hbu::harmonic {

/// Sampled maximum envelope of u.
///
/// On the disc the parameter is the radius r and the maxima run over
/// circles; on Q it is the height y and the maxima run over horizontal
/// segments. `max_abs_u[k] >= |max_u[k]|` always holds.
struct GrowthProfile {
  Domain domain = Domain::UnitDisc;
  std::vector<double> grid;
  std::vector<double> max_u;
  std::vector<double> max_abs_u;
  int resolution = 0;
};

/// Envelope of u over the grid (radii or heights in (0,1)) using
/// `resolution` angular (horizontal) samples refined by a local maximiser.
GrowthProfile envelope(const HarmonicFunction& u, const std::vector<double>& grid,
                       int resolution = 2048);

enum class GrowthTag { Bounded, Poly, Exp, DoubleExp, Inconclusive };

std::string to_string(GrowthTag tag);

/// Fitted class Q ~ C * s^{-p}, s = 1-r (or y), where Q is M, log+ M or
/// log+ log+ M for Poly, Exp, DoubleExp respectively.
struct GrowthClass {
  GrowthTag tag = GrowthTag::Inconclusive;
  double exponent = 0.0;
  double constant = 0.0;
  /// RMS residual of the accepted fit in log coordinates; for
  /// Inconclusive the smallest residual among the attempted fits.
  double residual = 0.0;
  int points = 0;
};

struct ClassifierOptions {
  /// Samples with s = 1-r (or y) above this are ignored.
  double window = 0.1;
  double max_residual = 0.05;
  /// Slopes below this count as Bounded.
  double bounded_slope = 0.05;
  int min_points = 12;
};

/// Lowest class in Bounded < Poly < Exp < DoubleExp whose fit passes.
/// Throws ParameterError with fewer than `min_points` samples in the window.
GrowthClass classify_growth(const GrowthProfile& profile, const ClassifierOptions& opt = {});

}  // namespace hbu::harmonic
