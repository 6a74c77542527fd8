#include "hbu/subspace.hpp"

#include <algorithm>
#include <cmath>

#include "hbu/error.hpp"

namespace hbu::opgroup {

Subspace Subspace::span(const CMatrix& columns, double tol) {
  Subspace s(static_cast<int>(columns.rows()));
  if (columns.cols() == 0 || columns.rows() == 0) return s;
  Eigen::BDCSVD<CMatrix> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
  int rank = 0;
  while (rank < sv.size() && sv(rank) > cut) ++rank;
  s.basis_ = svd.matrixU().leftCols(rank);
  return s;
}

Subspace Subspace::full(int n) {
  Subspace s(n);
  s.basis_ = CMatrix::Identity(n, n);
  return s;
}

bool Subspace::contains(const CVector& x, double tol) const {
  const double nx = x.norm();
  if (nx == 0.0) return true;
  const CVector r = x - basis_ * (basis_.adjoint() * x);
  return r.norm() <= tol * nx;
}

std::vector<double> principal_angles(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw ParameterError("subspaces live in different spaces");
  const Subspace& big = a.dim() >= b.dim() ? a : b;
  const Subspace& small = a.dim() >= b.dim() ? b : a;
  std::vector<double> out;
  if (small.dim() == 0) return out;
  const CMatrix r = small.basis() - big.basis() * (big.basis().adjoint() * small.basis());
  Eigen::JacobiSVD<CMatrix> svd(r);
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) out.push_back(std::asin(std::min(1.0, sv(i))));
  std::sort(out.begin(), out.end());
  return out;
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient() != b.ambient() || a.dim() != b.dim()) return false;
  const auto ang = principal_angles(a, b);
  return ang.empty() || ang.back() <= tol;
}

Subspace intersect(const Subspace& a, const Subspace& b, double tol) {
  if (a.ambient() != b.ambient()) throw ParameterError("subspaces live in different spaces");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient());
  // Coefficients c with Qa c in b: null space of (I - Pb) Qa.
  const CMatrix r = a.basis() - b.basis() * (b.basis().adjoint() * a.basis());
  Eigen::JacobiSVD<CMatrix> svd(r, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const Eigen::Index k = a.dim();
  int nullity = 0;
  for (Eigen::Index i = 0; i < k; ++i) {
    const double s = i < sv.size() ? sv(i) : 0.0;
    if (s <= tol) ++nullity;
  }
  const CMatrix coeffs = svd.matrixV().rightCols(nullity);
  return Subspace::span(a.basis() * coeffs);
}

}  // namespace hbu::opgroup
