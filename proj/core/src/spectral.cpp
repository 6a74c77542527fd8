#include "hbu/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "hbu/error.hpp"

namespace hbu::opgroup {

namespace {

double fro(const CMatrix& m) { return m.norm(); }

int nilpotency_index(const CMatrix& nb, double scale, double tol) {
  const Eigen::Index m = nb.rows();
  CMatrix power = CMatrix::Identity(m, m);
  for (int p = 1; p <= m; ++p) {
    power = power * nb;
    if (fro(power) <= tol * std::pow(scale, p)) return p;
  }
  return -1;
}

struct Cluster {
  std::vector<int> members;
  Complex center;
  double radius = 0.0;
};

std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& ev, double tau) {
  const int n = static_cast<int>(ev.size());
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) i = parent[static_cast<std::size_t>(i)];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(ev(i) - ev(j)) <= tau) parent[static_cast<std::size_t>(find(j))] = find(i);
  std::vector<Cluster> out;
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].members.push_back(i);
  }
  for (auto& c : out) {
    Complex s = 0.0;
    for (int i : c.members) s += ev(i);
    c.center = s / static_cast<double>(c.members.size());
    for (int i : c.members) c.radius = std::max(c.radius, std::abs(ev(i) - c.center));
  }
  return out;
}

std::optional<SpectralData> decompose(const CMatrix& A, const Eigen::VectorXcd& ev, double tau,
                                      double scale) {
  const Eigen::Index n = A.rows();
  const auto clusters = cluster_eigenvalues(ev, tau);
  SpectralData data;
  data.V = CMatrix::Zero(n, n);
  data.Vinv = CMatrix::Zero(n, n);
  const CMatrix I = CMatrix::Identity(n, n);
  int offset = 0;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    const auto& cl = clusters[c];
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ev.size(); ++i)
      if (std::find(cl.members.begin(), cl.members.end(), static_cast<int>(i)) == cl.members.end())
        gap = std::min(gap, std::abs(ev(i) - cl.center));
    if (!(gap > 2.0 * cl.radius)) return std::nullopt;
    const double rho = std::isinf(gap) ? cl.radius + scale : 0.5 * (cl.radius + gap);

    constexpr int K = 128;
    CMatrix P = CMatrix::Zero(n, n);
    for (int k = 0; k < K; ++k) {
      const Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / K);
      const Complex z = cl.center + rho * e;
      P += (rho * e) * (z * I - A).partialPivLu().inverse();
    }
    P /= static_cast<double>(K);

    const int m = static_cast<int>(cl.members.size());
    Eigen::BDCSVD<CMatrix> svd(P, Eigen::ComputeThinU);
    const CMatrix Vj = svd.matrixU().leftCols(m);
    const CMatrix Wj = Vj.adjoint() * P;
    const Complex lambda = (A * P).trace() / P.trace();
    SpectralBlock b;
    b.lambda = lambda;
    b.multiplicity = m;
    b.offset = offset;
    b.nilpotent = Wj * A * Vj - lambda * CMatrix::Identity(m, m);
    b.index = nilpotency_index(b.nilpotent, scale, 1e-8);
    if (b.index < 0) return std::nullopt;
    if (b.index == 1) b.nilpotent.setZero();
    data.V.middleCols(offset, m) = Vj;
    data.Vinv.middleRows(offset, m) = Wj;
    data.blocks.push_back(std::move(b));
    offset += m;
  }
  return data;
}

}  // namespace

CMatrix SpectralData::projection(std::size_t j) const {
  const auto& b = blocks.at(j);
  return V.middleCols(b.offset, b.multiplicity) * Vinv.middleRows(b.offset, b.multiplicity);
}

CMatrix SpectralData::nilpotent_part(std::size_t j) const {
  const auto& b = blocks.at(j);
  return V.middleCols(b.offset, b.multiplicity) * b.nilpotent *
         Vinv.middleRows(b.offset, b.multiplicity);
}

double SpectralResiduals::max() const {
  return std::max({partition, orthogonality, reconstruction, nilpotency});
}

MatrixGenerator MatrixGenerator::from_jordan(const std::vector<JordanBlockSpec>& spec,
                                             std::optional<std::uint64_t> seed) {
  if (spec.empty()) throw ParameterError("Jordan spec is empty");
  std::vector<double> heights;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (spec[i].size < 1) throw ParameterError("Jordan block size must be >= 1", static_cast<int>(i));
    if (!std::isfinite(spec[i].height)) throw ParameterError("Jordan height must be finite", static_cast<int>(i));
    if (std::find(heights.begin(), heights.end(), spec[i].height) == heights.end())
      heights.push_back(spec[i].height);
  }
  int n = 0;
  for (const auto& s : spec) n += s.size;

  MatrixGenerator g;
  CMatrix J = CMatrix::Zero(n, n);
  int offset = 0;
  for (double h : heights) {
    const Complex lambda(0.0, h);
    SpectralBlock b;
    b.lambda = lambda;
    b.offset = offset;
    int inner = 0;
    for (const auto& s : spec) {
      if (s.height != h) continue;
      for (int k = 0; k < s.size; ++k) {
        J(offset + inner + k, offset + inner + k) = lambda;
        if (k + 1 < s.size) J(offset + inner + k, offset + inner + k + 1) = 1.0;
      }
      inner += s.size;
      b.index = std::max(b.index, s.size);
    }
    b.multiplicity = inner;
    b.nilpotent = J.block(offset, offset, inner, inner) - lambda * CMatrix::Identity(inner, inner);
    g.data_.blocks.push_back(std::move(b));
    offset += inner;
  }

  CMatrix S = CMatrix::Identity(n, n);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double scale = 0.3 / std::sqrt(static_cast<double>(n)) / std::numbers::sqrt2;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) S(i, j) += scale * Complex(normal(rng), normal(rng));
  }
  g.data_.V = S;
  g.data_.Vinv = S.partialPivLu().inverse();
  g.A_ = S * J * g.data_.Vinv;

  std::ostringstream os;
  os << "jordan:[";
  for (std::size_t i = 0; i < spec.size(); ++i)
    os << (i ? "," : "") << '(' << spec[i].height << ',' << spec[i].size << ')';
  os << ']';
  if (seed) os << "@" << *seed;
  g.description_ = os.str();
  return g;
}

MatrixGenerator MatrixGenerator::from_matrix(const CMatrix& A) {
  if (A.rows() != A.cols() || A.rows() < 1) throw ParameterError("matrix must be square and non-empty");
  if (!A.allFinite()) throw ParameterError("matrix has non-finite entries");
  const double scale = std::max(1.0, A.norm());
  Eigen::ComplexSchur<CMatrix> schur(A, false);
  const Eigen::VectorXcd ev = schur.matrixT().diagonal();

  MatrixGenerator g;
  g.A_ = A;
  bool done = false;
  for (double tau = 1e-3; tau >= 1e-8 * 0.999; tau /= 10.0) {
    auto d = decompose(A, ev, tau * scale, scale);
    if (!d) continue;
    g.data_ = std::move(*d);
    if (g.residuals().max() <= 1e-8) {
      done = true;
      break;
    }
  }
  if (!done) throw Error("spectral decomposition failed for every clustering threshold");
  std::ostringstream os;
  os << "matrix(n=" << A.rows() << ")";
  g.description_ = os.str();
  return g;
}

SpectralResiduals MatrixGenerator::residuals() const {
  SpectralResiduals r;
  const Eigen::Index n = A_.rows();
  const double scale = std::max(1.0, A_.norm());
  std::vector<CMatrix> P;
  std::vector<CMatrix> N;
  CMatrix sum = CMatrix::Zero(n, n);
  CMatrix rec = CMatrix::Zero(n, n);
  for (std::size_t j = 0; j < data_.blocks.size(); ++j) {
    P.push_back(data_.projection(j));
    N.push_back(data_.nilpotent_part(j));
    sum += P.back();
    rec += data_.blocks[j].lambda * P.back() + N.back();
  }
  r.partition = fro(sum - CMatrix::Identity(n, n));
  r.reconstruction = fro(A_ - rec) / scale;
  for (std::size_t j = 0; j < P.size(); ++j) {
    r.orthogonality = std::max(r.orthogonality, fro(P[j] * P[j] - P[j]));
    for (std::size_t k = 0; k < P.size(); ++k)
      if (k != j) r.orthogonality = std::max(r.orthogonality, fro(P[j] * P[k]));
    CMatrix power = CMatrix::Identity(n, n);
    for (int p = 0; p < data_.blocks[j].multiplicity; ++p) power = power * N[j];
    r.nilpotency = std::max(r.nilpotency,
                            fro(power) / std::pow(scale, data_.blocks[j].multiplicity));
    r.nilpotency = std::max(r.nilpotency, fro(N[j] * P[j] - N[j]) / scale);
  }
  return r;
}

int MatrixGenerator::max_index() const {
  int m = 0;
  for (const auto& b : data_.blocks) m = std::max(m, b.index);
  return m;
}

bool MatrixGenerator::spectrum_on_imaginary_axis(double tol) const {
  for (const auto& b : data_.blocks)
    if (std::abs(b.lambda.real()) > tol * std::max(1.0, std::abs(b.lambda))) return false;
  return true;
}

}  // namespace hbu::opgroup
