#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "hbu/subspace.hpp"

namespace hbu::opgroup {

using Complex = std::complex<double>;

/// Jordan block with eigenvalue i * height.
struct JordanBlockSpec {
  double height;
  int size;
};

/// Root subspace of one eigenvalue in modal coordinates.
struct SpectralBlock {
  Complex lambda;
  /// Algebraic multiplicity (columns of the block).
  int multiplicity = 0;
  /// Nilpotency order of the nilpotent part.
  int index = 0;
  /// First column of the block in the modal basis.
  int offset = 0;
  /// Nilpotent part in modal coordinates (multiplicity x multiplicity).
  CMatrix nilpotent;
};

/// A = V * blockdiag(lambda_j + Nb_j) * V^{-1}.
struct SpectralData {
  CMatrix V;
  CMatrix Vinv;
  std::vector<SpectralBlock> blocks;

  CMatrix projection(std::size_t j) const;
  CMatrix nilpotent_part(std::size_t j) const;
};

/// Residuals of the spectral-resolution identities (max over blocks).
struct SpectralResiduals {
  double partition = 0.0;      // ||sum P_j - I||
  double orthogonality = 0.0;  // ||P_j P_k - delta_jk P_j||
  double reconstruction = 0.0; // ||A - sum(lambda_j P_j + N_j)|| / max(1, ||A||)
  double nilpotency = 0.0;     // ||N_j^{m_j}|| and ||N_j P_j - N_j||
  double max() const;
};

/// Complex square matrix with its cached root-subspace decomposition.
class MatrixGenerator {
 public:
  /// A = S J S^{-1} with J the prescribed Jordan form and S = I + 0.3 G / sqrt(n)
  /// for a complex Gaussian G drawn from `seed` (S = I without a seed).
  /// Blocks sharing a height form one root subspace.
  static MatrixGenerator from_jordan(const std::vector<JordanBlockSpec>& spec,
                                     std::optional<std::uint64_t> seed = std::nullopt);

  /// Decomposition by Schur eigenvalues, clustering and contour-integral
  /// projections. Throws Error when no clustering threshold down to 1e-8
  /// yields nilpotent parts.
  static MatrixGenerator from_matrix(const CMatrix& A);

  const CMatrix& matrix() const { return A_; }
  const SpectralData& spectral() const { return data_; }
  int dim() const { return static_cast<int>(A_.rows()); }
  const std::string& description() const { return description_; }

  SpectralResiduals residuals() const;
  /// Largest Jordan index among eigenvalues.
  int max_index() const;
  /// Growth degree of e^{tA} when the spectrum is imaginary: max index - 1.
  int nominal_degree() const { return max_index() - 1; }
  bool spectrum_on_imaginary_axis(double tol = 1e-10) const;

 private:
  CMatrix A_;
  SpectralData data_;
  std::string description_;
};

/// f(A) = V blockdiag(sum_p c_{j,p} Nb_j^p) V^{-1} where `coeffs(lambda, m)`
/// returns the first m Taylor coefficients of f at lambda.
template <class Coeffs>
CMatrix functional_calculus(const SpectralData& s, Coeffs&& coeffs) {
  const Eigen::Index n = s.V.rows();
  CMatrix mid = CMatrix::Zero(n, n);
  for (const auto& b : s.blocks) {
    const std::vector<Complex> c = coeffs(b.lambda, b.multiplicity);
    CMatrix power = CMatrix::Identity(b.multiplicity, b.multiplicity);
    CMatrix acc = CMatrix::Zero(b.multiplicity, b.multiplicity);
    for (int p = 0; p < b.multiplicity && p < static_cast<int>(c.size()); ++p) {
      if (p > 0) power = power * b.nilpotent;
      if (p >= b.index) break;
      acc += c[static_cast<std::size_t>(p)] * power;
    }
    mid.block(b.offset, b.offset, b.multiplicity, b.multiplicity) = acc;
  }
  return s.V * mid * s.Vinv;
}

/// V blockdiag(sum_p c_{j,p} Nb_j^p) y for modal coordinates y.
template <class Coeffs>
CVector modal_apply(const SpectralData& s, Coeffs&& coeffs, const CVector& y) {
  CVector out = CVector::Zero(y.size());
  for (const auto& b : s.blocks) {
    CVector term = y.segment(b.offset, b.multiplicity);
    if (term.isZero(0.0)) continue;
    const std::vector<Complex> c = coeffs(b.lambda, b.multiplicity);
    CVector acc = CVector::Zero(b.multiplicity);
    for (int p = 0; p < b.index && p < static_cast<int>(c.size()); ++p) {
      if (p > 0) term = b.nilpotent * term;
      acc += c[static_cast<std::size_t>(p)] * term;
    }
    out.segment(b.offset, b.multiplicity) = acc;
  }
  return s.V * out;
}

/// f(A) x, evaluated on the modal coordinates V^{-1} x.
template <class Coeffs>
CVector functional_apply(const SpectralData& s, Coeffs&& coeffs, const CVector& x) {
  return modal_apply(s, std::forward<Coeffs>(coeffs), CVector(s.Vinv * x));
}

}  // namespace hbu::opgroup
