// Small dense helpers shared by the solver and the norm estimators.
#pragma once

#include <Eigen/Dense>

#include "sik/fourier.hpp"

namespace sik {

/// ||A||_2. Up to 512 rows from the eigenvalues of A^H A; above that a power
/// iteration on A^H A, which returns a lower bound within a few percent.
double spectral_norm(const CMatrix& A);

/// Largest singular value of an entrywise nonnegative matrix. Dense
/// eigenvalues of W^T W up to 512 rows, power iteration (tol 1e-10, at most 10^4 steps) above.
double sigma_max_nonnegative(const Eigen::MatrixXd& W);

/// A = Q T Q^H with T upper triangular.
struct SchurForm {
  CMatrix T;
  CMatrix Q;  // empty unless requested
};

/// Complex Schur form. With the LAPACK backend (zgees) the result is checked:
/// ||A Q - Q T||_F and ||Q^H Q - I||_F must stay below 1e-10 relative, and an
/// eigenvalues-only run must reproduce trace(A). On failure, or without the
/// backend, Eigen's ComplexSchur is used.
SchurForm complex_schur(const CMatrix& A, bool compute_q);

/// op(A) op(B) with op the identity or the conjugate transpose; zgemm when the
/// LAPACK backend is enabled.
CMatrix multiply(const CMatrix& A, const CMatrix& B, bool adjoint_a = false, bool adjoint_b = false);

/// True when complex_schur and multiply go through LAPACK/BLAS.
bool lapack_backend_enabled();

inline CMatrix hermitian_part(const CMatrix& H) { return 0.5 * (H + H.adjoint()); }

}  // namespace sik
