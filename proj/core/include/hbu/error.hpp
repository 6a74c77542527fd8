#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace hbu {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a map or function (poles, |w| >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameter. `index()` names the offending term when
/// the failure is attached to an index (e.g. the first violated inequality).
class ParameterError : public Error {
 public:
  explicit ParameterError(const std::string& what, std::optional<int> index = std::nullopt)
      : Error(what), index_(index) {}
  std::optional<int> index() const { return index_; }

 private:
  std::optional<int> index_;
};

/// Discretisation too coarse for the requested tolerance.
class ResolutionError : public Error {
 public:
  ResolutionError(const std::string& what, double estimate, double tolerance)
      : Error(what), estimate_(estimate), tolerance_(tolerance) {}
  double estimate() const { return estimate_; }
  double tolerance() const { return tolerance_; }

 private:
  double estimate_;
  double tolerance_;
};

/// Attempt to invert at (or numerically on) the spectrum.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Quadrature did not reach the requested accuracy.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const { return achieved_; }

 private:
  double achieved_;
};

/// Evaluation failure at a specific point, re-raised with that point.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, std::complex<double> point)
      : Error(what), point_(point) {}
  std::complex<double> point() const { return point_; }

 private:
  std::complex<double> point_;
};

/// Malformed literal, config or input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hbu
