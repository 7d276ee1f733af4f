#include "sik/linalg.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#ifdef SIK_HAVE_LAPACKE
#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>
#include <cblas.h>
#endif

namespace sik {

namespace {

constexpr Eigen::Index kDenseLimit = 512;

#ifdef SIK_HAVE_LAPACKE
bool lapack_schur(const CMatrix& A, bool compute_q, SchurForm& out) {
  const lapack_int n = static_cast<lapack_int>(A.rows());
  CMatrix T = A;
  CMatrix Q = compute_q ? CMatrix(n, n) : CMatrix(1, 1);
  CVector w(n);
  lapack_int sdim = 0;
  const lapack_int info = LAPACKE_zgees(LAPACK_COL_MAJOR, compute_q ? 'V' : 'N', 'N', nullptr, n, T.data(), n, &sdim, w.data(),
                                        Q.data(), compute_q ? n : 1);
  if (info != 0) return false;
  T.triangularView<Eigen::StrictlyLower>().setZero();

  const double scale = std::max(A.norm(), 1e-300);
  if (compute_q) {
    const CMatrix R = multiply(A, Q) - multiply(Q, T);
    if (!(R.norm() <= 1e-10 * scale)) return false;
    CMatrix G = multiply(Q, Q, true, false);
    G.diagonal().array() -= 1.0;
    if (!(G.norm() <= 1e-10 * std::sqrt(static_cast<double>(n)))) return false;
    out.Q = std::move(Q);
  } else {
    const Complex diff = T.diagonal().sum() - A.trace();
    if (!(std::abs(diff) <= 1e-10 * scale * std::sqrt(static_cast<double>(n)))) return false;
  }
  out.T = std::move(T);
  return true;
}
#endif

}  // namespace

bool lapack_backend_enabled() {
#ifdef SIK_HAVE_LAPACKE
  return true;
#else
  return false;
#endif
}

SchurForm complex_schur(const CMatrix& A, bool compute_q) {
  SchurForm out;
  if (A.size() == 0) return out;
#ifdef SIK_HAVE_LAPACKE
  if (lapack_schur(A, compute_q, out)) return out;
#endif
  Eigen::ComplexSchur<CMatrix> schur(A, compute_q);
  if (schur.info() != Eigen::Success) throw std::runtime_error("complex_schur: Schur iteration did not converge");
  out.T = schur.matrixT();
  if (compute_q) out.Q = schur.matrixU();
  return out;
}

CMatrix multiply(const CMatrix& A, const CMatrix& B, bool adjoint_a, bool adjoint_b) {
  const Eigen::Index m = adjoint_a ? A.cols() : A.rows();
  const Eigen::Index k = adjoint_a ? A.rows() : A.cols();
  const Eigen::Index kb = adjoint_b ? B.cols() : B.rows();
  const Eigen::Index n = adjoint_b ? B.rows() : B.cols();
  if (k != kb) throw std::invalid_argument("multiply: inner dimensions differ");
#ifdef SIK_HAVE_LAPACKE
  if (m > 0 && n > 0 && k > 0) {
    CMatrix C(m, n);
    const Complex one(1.0), zero(0.0);
    cblas_zgemm(CblasColMajor, adjoint_a ? CblasConjTrans : CblasNoTrans, adjoint_b ? CblasConjTrans : CblasNoTrans,
                static_cast<blasint>(m), static_cast<blasint>(n), static_cast<blasint>(k), &one, A.data(),
                static_cast<blasint>(A.rows()), B.data(), static_cast<blasint>(B.rows()), &zero, C.data(), static_cast<blasint>(m));
    return C;
  }
#endif
  if (adjoint_a && adjoint_b) return A.adjoint() * B.adjoint();
  if (adjoint_a) return A.adjoint() * B;
  if (adjoint_b) return A * B.adjoint();
  return A * B;
}

double spectral_norm(const CMatrix& A) {
  if (A.size() == 0) return 0.0;
  if (std::max(A.rows(), A.cols()) <= kDenseLimit) {
    const CMatrix G = A.cols() <= A.rows() ? CMatrix(A.adjoint() * A) : CMatrix(A * A.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(G, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  CVector x = CVector::LinSpaced(A.cols(), 1.0, 2.0);
  x.normalize();
  double best = 0.0;
  for (int it = 0; it < 200; ++it) {
    const CVector y = A * x;
    const double value = y.norm();
    CVector z = A.adjoint() * y;
    const double zn = z.norm();
    if (zn == 0.0) break;
    x = z / zn;
    const bool converged = std::abs(value - best) <= 1e-10 * value;
    best = std::max(best, value);
    if (converged) break;
  }
  return best;
}

double sigma_max_nonnegative(const Eigen::MatrixXd& W) {
  if (W.size() == 0) return 0.0;
  if (std::max(W.rows(), W.cols()) <= kDenseLimit) {
    const Eigen::MatrixXd G = W.transpose() * W;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  // W^T W is entrywise nonnegative, so a positive start vector converges to
  // the Perron vector.
  Eigen::VectorXd x = Eigen::VectorXd::Ones(W.cols()).normalized();
  double value = 0.0;
  for (int it = 0; it < 10000; ++it) {
    const Eigen::VectorXd y = W * x;
    const double next = y.norm();
    Eigen::VectorXd z = W.transpose() * y;
    const double zn = z.norm();
    if (zn == 0.0) return 0.0;
    x = z / zn;
    if (std::abs(next - value) <= 1e-10 * next) return next;
    value = next;
  }
  return value;
}

}  // namespace sik
