// Dense complex matrices and the operator primitives everything else builds
// on: tensor products, Hermitian eigendecomposition, entropy, random unitaries.
// Storage is Eigen; target dimensions are small (<= 16 per subsystem), so
// everything is dense and exact-ish.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

#include "qcorr/common.hpp"
#include "qcorr/rng.hpp"

namespace qcorr {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RealMat = Eigen::MatrixXd;
using RealVec = Eigen::VectorXd;

inline Mat dagger(const Mat& m) { return m.adjoint(); }

inline bool is_finite(const Mat& m) { return m.allFinite(); }

inline double hermiticity_defect(const Mat& m) {
  return (m - m.adjoint()).norm();
}

inline bool is_hermitian(const Mat& m, double tol = kStateTol) {
  if (m.rows() != m.cols()) return false;
  return hermiticity_defect(m) <= tol * static_cast<double>(m.rows());
}

// Kronecker product; dims multiply.
inline Mat tensor_product(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

struct EigResult {
  RealVec values;  // ascending
  Mat vectors;     // columns are the orthonormal eigenvectors
};

// Eigendecomposition for Hermitian input only; rejects anything else.
inline EigResult eig_hermitian(const Mat& m) {
  if (!is_hermitian(m)) throw DomainError("eig_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  if (solver.info() != Eigen::Success)
    throw DomainError("eig_hermitian: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

inline RealVec eigenvalues_hermitian(const Mat& m) {
  return eig_hermitian(m).values;
}

inline double min_eigenvalue(const Mat& m) {
  return eigenvalues_hermitian(m).minCoeff();
}

inline bool is_psd(const Mat& m, double tol = kStateTol) {
  if (!is_hermitian(m, tol)) return false;
  return min_eigenvalue(m) >= -tol * static_cast<double>(m.rows());
}

// S = -sum lambda log2 lambda with 0 log 0 := 0.  Eigenvalues in
// [-kEigenvalueFloor, 0] clamp to zero; anything lower means the input is
// not a density operator.
inline double von_neumann_entropy(const Mat& rho) {
  const RealVec ev = eigenvalues_hermitian(rho);
  if (std::abs(rho.trace().real() - 1.0) > kStateTol * static_cast<double>(rho.rows()) ||
      std::abs(rho.trace().imag()) > kStateTol)
    throw DomainError("von_neumann_entropy: trace is not 1");
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    double lam = ev(i);
    if (lam < -kEigenvalueFloor)
      throw DomainError("von_neumann_entropy: negative eigenvalue beyond noise floor");
    if (lam <= 0.0) continue;
    s -= lam * std::log2(lam);
  }
  return s;
}

// Shannon entropy in bits of a nonnegative vector summing to ~1.
inline double shannon_entropy(const RealVec& p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) s -= p(i) * std::log2(p(i));
  return s;
}

// Principal square root of a PSD matrix via its eigensystem.
inline Mat psd_sqrt(const Mat& m) {
  const EigResult eg = eig_hermitian(m);
  Mat d = Mat::Zero(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < eg.values.size(); ++i)
    d(i, i) = std::sqrt(std::max(0.0, eg.values(i)));
  return eg.vectors * d * eg.vectors.adjoint();
}

// exp(iH) for Hermitian H.
inline Mat unitary_from_hermitian(const Mat& h) {
  const EigResult eg = eig_hermitian(h);
  Mat d = Mat::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < eg.values.size(); ++i)
    d(i, i) = std::exp(cxd(0.0, eg.values(i)));
  return eg.vectors * d * eg.vectors.adjoint();
}

// --- Standard matrices ------------------------------------------------------

inline Mat identity(Eigen::Index d) { return Mat::Identity(d, d); }

inline Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline Mat pauli_y() {
  Mat m(2, 2);
  m << cxd(0, 0), cxd(0, -1), cxd(0, 1), cxd(0, 0);
  return m;
}

inline Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline Vec basis_ket(Eigen::Index d, Eigen::Index j) {
  Vec v = Vec::Zero(d);
  v(j) = 1.0;
  return v;
}

inline Mat projector(const Vec& v) { return v * v.adjoint(); }

// Discrete Fourier transform matrix, F_{jk} = omega^{jk} / sqrt(d).
inline Mat fourier_matrix(Eigen::Index d) {
  Mat f(d, d);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index k = 0; k < d; ++k)
      f(j, k) = std::exp(cxd(0.0, w * static_cast<double>(j * k))) /
                std::sqrt(static_cast<double>(d));
  return f;
}

// Cyclic shift X|j> = |j+1 mod d>.
inline Mat shift_matrix(Eigen::Index d) {
  Mat x = Mat::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) x((j + 1) % d, j) = 1.0;
  return x;
}

// --- Random objects (all deterministic given the Rng state) -----------------

inline Mat random_ginibre(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  Mat g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = cxd(rng.gauss(), rng.gauss());
  return g;
}

// Haar-ish random unitary via QR of a Ginibre matrix with phase fixing.
inline Mat random_unitary(Rng& rng, Eigen::Index d) {
  const Mat g = random_ginibre(rng, d, d);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const cxd rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

inline Mat random_hermitian(Rng& rng, Eigen::Index d) {
  const Mat g = random_ginibre(rng, d, d);
  return (g + g.adjoint()) / 2.0;
}

// Full-rank random density operator, rho = GG^dag / tr.
inline Mat random_density(Rng& rng, Eigen::Index d) {
  const Mat g = random_ginibre(rng, d, d);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

inline Vec random_pure_ket(Rng& rng, Eigen::Index d) {
  Vec v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = cxd(rng.gauss(), rng.gauss());
  v.normalize();
  return v;
}

}  // namespace qcorr
