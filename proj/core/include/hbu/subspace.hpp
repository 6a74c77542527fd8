#pragma once

#include <vector>

#include <Eigen/Dense>

namespace hbu::opgroup {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Subspace of C^n held by an orthonormal basis.
class Subspace {
 public:
  explicit Subspace(int ambient = 0) : basis_(ambient, 0) {}
  /// Column space of `columns`; singular values below tol * max(1, s_max)
  /// are dropped.
  static Subspace span(const CMatrix& columns, double tol = 1e-10);
  static Subspace full(int n);

  const CMatrix& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  int ambient() const { return static_cast<int>(basis_.rows()); }
  CMatrix projector() const { return basis_ * basis_.adjoint(); }
  /// ||x - P x|| <= tol * ||x||.
  bool contains(const CVector& x, double tol = 1e-8) const;

 private:
  CMatrix basis_;
};

/// Principal angles in increasing order (min(dim a, dim b) of them),
/// computed from sines so that small angles keep full accuracy.
std::vector<double> principal_angles(const Subspace& a, const Subspace& b);

/// Equal dimension and largest principal angle <= tol.
bool same_subspace(const Subspace& a, const Subspace& b, double tol = 1e-8);

Subspace intersect(const Subspace& a, const Subspace& b, double tol = 1e-8);

}  // namespace hbu::opgroup
