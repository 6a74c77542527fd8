#pragma once

// Hand-rolled generators for property tests. Every property runs a fixed
// number of cases from a fixed seed; failures print the case index.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hbu/real_set.hpp"
#include "hbu/spectral.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(eng_); }
  double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(eng_); }
  double normal() { return std::normal_distribution<double>()(eng_); }
  std::complex<double> complex_normal() { return {normal(), normal()}; }
  bool coin() { return integer(0, 1) == 1; }
  std::uint64_t seed() { return eng_(); }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(integer(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

inline Eigen::VectorXcd vector(Rng& r, int n) {
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = r.complex_normal();
  return v;
}

inline Eigen::MatrixXcd matrix(Rng& r, int rows, int cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = r.complex_normal();
  return m;
}

/// A = i H with H Hermitian.
inline Eigen::MatrixXcd skew_hermitian(Rng& r, int n) {
  const Eigen::MatrixXcd g = matrix(r, n, n);
  return std::complex<double>(0.0, 0.5) * (g + g.adjoint());
}

/// Heights from a small lattice so that coincidences (shared root
/// subspaces) occur; total dimension <= max_dim, indices <= max_index.
inline std::vector<hbu::opgroup::JordanBlockSpec> jordan_spec(Rng& r, int max_dim, int max_index) {
  std::vector<hbu::opgroup::JordanBlockSpec> spec;
  int dim = 0;
  const int blocks = r.integer(1, 4);
  for (int b = 0; b < blocks; ++b) {
    const int size = r.integer(1, max_index);
    if (dim + size > max_dim) break;
    spec.push_back({0.5 * r.integer(-6, 6), size});
    dim += size;
  }
  if (spec.empty()) spec.push_back({0.5 * r.integer(-6, 6), 1});
  return spec;
}

/// Union of 0..3 closed intervals with endpoints on a half-integer lattice,
/// occasionally unbounded.
inline hbu::opgroup::ClosedRealSet real_set(Rng& r) {
  std::vector<hbu::opgroup::ClosedRealSet::Interval> parts;
  const int n = r.integer(0, 3);
  for (int k = 0; k < n; ++k) {
    double a = 0.5 * r.integer(-8, 8);
    double b = a + 0.5 * r.integer(0, 4);
    if (r.integer(0, 5) == 0) a = -std::numeric_limits<double>::infinity();
    if (r.integer(0, 5) == 0) b = std::numeric_limits<double>::infinity();
    parts.push_back({a, b});
  }
  return hbu::opgroup::ClosedRealSet::from_intervals(parts);
}

}  // namespace gen
