#include "sik/index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "sik/linalg.hpp"

namespace sik {

namespace {

constexpr double kRankCutoff = 1e-8;

std::string neutral_message(std::size_t position, double pivot) {
  std::ostringstream os;
  os << "indefinite Gram-Schmidt: vector " << position << " is neutral ([w, w] = " << pivot << ")";
  return os.str();
}

// Singular values within a factor 10 of the cutoff make the rank ambiguous.
int decided_rank(const Eigen::VectorXd& sigma, double cutoff, const char* what) {
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    const double s = sigma(i);
    if (s > cutoff / 10.0 && s < cutoff * 10.0) {
      std::ostringstream os;
      os << "addition rule: singular value " << s << " of " << what << " is within a factor 10 of the cutoff " << cutoff;
      throw DegenerateRestriction(os.str());
    }
    if (s > cutoff) ++rank;
  }
  return rank;
}

// Orthonormal basis of span(S), rank decided relative to the largest singular value.
CMatrix orthonormal_span(const CMatrix& S) {
  if (S.cols() == 0) return CMatrix(S.rows(), 0);
  Eigen::BDCSVD<CMatrix> svd(S, Eigen::ComputeThinU);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  const int r = smax > 0.0 ? decided_rank(sigma / smax, kRankCutoff, "S1") : 0;
  return svd.matrixU().leftCols(r);
}

}  // namespace

NeutralVectorEncountered::NeutralVectorEncountered(std::size_t position, double pivot)
    : std::runtime_error(neutral_message(position, pivot)), position_(position), pivot_(pivot) {}

Inertia inertia_from_eigenvalues(const Eigen::VectorXd& eigenvalues, double zero_tol) {
  Inertia in;
  in.zero_tol = zero_tol;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    const double v = eigenvalues(i);
    if (v > zero_tol)
      ++in.n_plus;
    else if (v < -zero_tol)
      ++in.n_minus;
    else
      ++in.n_zero;
  }
  return in;
}

Inertia inertia_hermitian(const CMatrix& H, std::optional<double> zero_tol) {
  if (H.rows() != H.cols()) throw std::invalid_argument("inertia_hermitian: matrix must be square");
  if (H.size() == 0) return Inertia{0, 0, 0, zero_tol.value_or(0.0)};
  const double scale = std::max(1.0, H.norm());
  const double defect = (H - H.adjoint()).norm();
  if (defect > 1e-10 * scale) {
    std::ostringstream os;
    os << "inertia_hermitian: ||H - H^H||_F = " << defect << " exceeds 1e-10 max(1, ||H||_F)";
    throw NonHermitianInput(os.str());
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_part(H), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = es.eigenvalues();
  const double norm2 = ev.cwiseAbs().maxCoeff();
  return inertia_from_eigenvalues(ev, zero_tol.value_or(1e-8 * norm2));
}

SpectralCount count_from_eigenvalues(std::vector<Complex> eigenvalues, double axis_tol) {
  SpectralCount out;
  out.counts.zero_tol = axis_tol;
  out.axis_gap = std::numeric_limits<double>::infinity();
  for (const Complex& z : eigenvalues) {
    const double re = z.real();
    out.axis_gap = std::min(out.axis_gap, std::abs(re));
    if (re > axis_tol)
      ++out.counts.n_plus;
    else if (re < -axis_tol)
      ++out.counts.n_minus;
    else
      ++out.counts.n_zero;
  }
  out.eigenvalues = std::move(eigenvalues);
  return out;
}

SpectralCount instability_index_general(const CMatrix& A, std::optional<double> axis_tol) {
  if (A.rows() != A.cols()) throw std::invalid_argument("instability_index_general: matrix must be square");
  if (A.size() == 0) return count_from_eigenvalues({}, axis_tol.value_or(0.0));
  const SchurForm schur = complex_schur(A, /*compute_q=*/false);
  std::vector<Complex> ev(A.rows());
  for (Eigen::Index i = 0; i < A.rows(); ++i) ev[i] = schur.T(i, i);
  const double tol = axis_tol ? *axis_tol : 1e-8 * spectral_norm(A);
  return count_from_eigenvalues(std::move(ev), tol);
}

EigenConditioning conditioning_diagnostic(const CMatrix& A) {
  EigenConditioning d;
  const double anorm = spectral_norm(A);
  if (A.size() == 0 || anorm == 0.0) return d;

  Eigen::ComplexEigenSolver<CMatrix> es(A, /*computeEigenvectors=*/true);
  const CMatrix& V = es.eigenvectors();
  const CVector& lambda = es.eigenvalues();
  d.axis_gap = lambda.real().cwiseAbs().minCoeff();

  Eigen::FullPivLU<CMatrix> lu(V);
  if (!lu.isInvertible()) {
    d.reconstruction_residual = std::numeric_limits<double>::infinity();
    d.max_condition = std::numeric_limits<double>::infinity();
    d.perturbation_bound = std::numeric_limits<double>::infinity();
    d.unreliable = true;
    return d;
  }
  const CMatrix Vinv = lu.inverse();
  const CMatrix rebuilt = V * lambda.asDiagonal() * Vinv;
  d.reconstruction_residual = spectral_norm(A - rebuilt) / anorm;

  // Rows of V^{-1} are the left eigenvectors scaled so that y_i^H x_i = 1.
  for (Eigen::Index i = 0; i < V.cols(); ++i) {
    const double c = V.col(i).norm() * Vinv.row(i).norm();
    d.max_condition = std::max(d.max_condition, c);
  }
  d.perturbation_bound = d.max_condition * std::numeric_limits<double>::epsilon() * anorm;
  d.unreliable = d.reconstruction_residual > 1e-8 || d.perturbation_bound >= d.axis_gap;
  return d;
}

CMatrix u_orth_complement(const CMatrix& U, const CMatrix& S) {
  const Eigen::Index n = U.rows();
  if (S.cols() == 0) return CMatrix::Identity(n, n);
  const CMatrix M = S.adjoint() * U;
  Eigen::BDCSVD<CMatrix> svd(M, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double smax = sigma.size() > 0 ? sigma(0) : 0.0;
  int r = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > kRankCutoff * smax) ++r;
  }
  return svd.matrixV().rightCols(n - r);
}

AdditionRule addition_rule_check(const CMatrix& U, const CMatrix& S1) {
  AdditionRule out;
  out.lhs = inertia_hermitian(U).n_plus;

  const CMatrix B1 = orthonormal_span(S1);
  const CMatrix B2 = u_orth_complement(U, B1);
  if (B1.cols() > 0) out.kappa_restricted1 = inertia_hermitian(hermitian_part(B1.adjoint() * U * B1)).n_plus;
  if (B2.cols() > 0) out.kappa_restricted2 = inertia_hermitian(hermitian_part(B2.adjoint() * U * B2)).n_plus;

  CMatrix joined(U.rows(), B1.cols() + B2.cols());
  joined << B1, B2;
  if (joined.cols() > 0) {
    Eigen::BDCSVD<CMatrix> svd(joined);
    const int rank = decided_rank(svd.singularValues(), kRankCutoff, "[B1 B2]");
    out.intersection_dim = static_cast<int>(joined.cols()) - rank;
  }
  return out;
}

IndefiniteBasis indefinite_gram_schmidt(const CMatrix& U, const CMatrix& vectors, double tol) {
  const double unorm = spectral_norm(U);
  IndefiniteBasis out;
  out.vectors = CMatrix(vectors.rows(), vectors.cols());
  out.signs.reserve(vectors.cols());

  for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
    CVector w = vectors.col(k);
    // Two projection passes against the accepted vectors.
    for (int pass = 0; pass < 2; ++pass) {
      const CVector Uw = U * w;
      for (Eigen::Index j = 0; j < k; ++j) {
        // [w, v_j] = v_j^H U w, and [v_j, v_j] = sign_j.
        const Complex coef = out.vectors.col(j).dot(Uw) * static_cast<double>(out.signs[j]);
        w -= coef * out.vectors.col(j);
      }
    }
    const double wn2 = w.squaredNorm();
    const double pivot = w.dot(U * w).real();
    if (!(std::abs(pivot) > tol * unorm * wn2) || wn2 == 0.0) throw NeutralVectorEncountered(static_cast<std::size_t>(k), pivot);
    out.vectors.col(k) = w / std::sqrt(std::abs(pivot));
    out.signs.push_back(pivot > 0.0 ? 1 : -1);
  }
  return out;
}

}  // namespace sik
