#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hbu::potential {

/// Decreasing majorant w: (0,2) -> [1, inf).
class Majorant {
 public:
  enum class Kind { Constant, PowerLaw, ExpLaw, Custom };

  /// w = v, v >= 1.
  static Majorant constant(double v);
  /// w = max(1, y^{-p}), p > 0.
  static Majorant power_law(double p);
  /// w = exp(y^{-p}), p > 0.
  static Majorant exp_law(double p);
  /// Piecewise-linear through (y, w) samples with y strictly increasing in
  /// (0,2), w non-increasing and >= 1; held constant outside the table.
  static Majorant custom(std::vector<std::pair<double, double>> table);

  double operator()(double y) const;

  /// inf{ y in (0,2) : w(y) <= s }, 0 when every y qualifies, 2 when none.
  double inverse(double s) const;

  Kind kind() const { return kind_; }
  double parameter() const { return param_; }
  const std::vector<std::pair<double, double>>& table() const { return table_; }
  std::string literal() const;

 private:
  Majorant(Kind k, double p) : kind_(k), param_(p) {}
  Kind kind_;
  double param_;
  std::vector<std::pair<double, double>> table_;
};

enum class DomarFailure { None, SumExceeds, CutoffInsufficient, Divergent };

std::string to_string(DomarFailure f);

struct DomarResult {
  bool pass = false;
  double T = 0.0;
  int cutoff = 0;
  /// sum_{k=0}^{K} w^{-1}(2^k T).
  double partial_sum = 0.0;
  /// Certified upper bound for the terms k > K (infinite when divergent).
  double tail_bound = 0.0;
  /// 2T on pass.
  double bound = 0.0;
  DomarFailure failure = DomarFailure::None;
  /// First k whose partial sum exceeds 1/10.
  std::optional<int> crossing_index;
};

/// Sum condition sum_k w^{-1}(2^k T) <= 1/10 with cutoff K.
DomarResult domar_check(const Majorant& w, double T, int K);

/// Upper bound on sum_{k>K} w^{-1}(2^k T); +inf when the series diverges.
double domar_tail_bound(const Majorant& w, double T, int K);

/// Smallest cutoff with tail bound <= target, or nullopt past 1e8 terms.
std::optional<int> domar_cutoff(const Majorant& w, double T, double target = 1e-7);

struct MinimalT {
  bool found = false;
  double T = 0.0;
  /// Every term vanishes at T (the sum is a step function of T).
  bool degenerate = false;
  int iterations = 0;
};

/// Least T in [1e-12, 1e12] passing domar_check, to relative 1e-8.
MinimalT domar_minimal_T(const Majorant& w);

/// Half-width beta of the strip-like domain { |y| < beta(x) }.
class WidthFunction {
 public:
  /// beta(x) = e^{N-1} for x <= e^N and x exp(-(log x / N)^2) beyond.
  static WidthFunction canonical(double N);
  static WidthFunction general(std::function<double(double)> beta);

  double operator()(double x) const;
  bool is_canonical() const { return canonical_; }
  double N() const { return N_; }

 private:
  WidthFunction() = default;
  bool canonical_ = false;
  double N_ = 0.0;
  std::function<double(double)> beta_;
};

struct CarlemanBound {
  /// (8/pi) exp(-pi I); underflows to 0 for wide bands.
  double value = 0.0;
  double log_value = 0.0;
  /// I = int_{r1}^{r2} dr / beta~(r).
  double integral = 0.0;
  double log_integral = 0.0;
};

/// Ahlfors-Carleman bound for the harmonic measure of the far piece beyond
/// [r1, r2]. The canonical family uses the denominator r exp(-(log r/N)^2)
/// on the whole band; a general width uses beta(r).
CarlemanBound carleman_measure_bound(const WidthFunction& beta, double r1, double r2);

struct SectorCertificate {
  bool certified = false;
  double bound = 0.0;
  double log_bound = 0.0;
  /// Exponents of the far piece (index 0) and of n = 2..M-1.
  std::vector<double> term_exponents;
  /// omega(zeta, right arc) - omega(zeta, left arc) at zeta = z e^{1-N}.
  double near_measure = 0.0;
  std::string reason;
};

/// Checks exp[(n-1)^2] >= 2 delta n exp[(1-gamma)(n+1)^2] for n = 1..M
/// (ParameterError naming the first violating n) and assembles
///   1 + exp[(NM)^{1/gamma} - N e^{(M-1)^2}]
///     + sum_{2<=n<M} exp[delta n N e^{(1-gamma)(n+1)^2} - N e^{(n-1)^2}].
/// Certified when that bound is <= 3 and the near pieces satisfy
/// near_measure <= e^{-N/2}.
SectorCertificate sector_certificate(double gamma, double delta, int N, int M,
                                     std::complex<double> z);

}  // namespace hbu::potential
