// Brute-force references: the dispersion relation of constant-coefficient
// operators and a vectorized (Kronecker) Lyapunov solver for small matrices.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "sik/fourier.hpp"
#include "sik/index.hpp"

namespace sik {

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Modes |p| <= N with -p^4 + a p^2 - c > 0. For constant coefficients
/// lambda_p = -p^4 + a p^2 + i b p - c, so b never changes the count.
int dispersion_index(double a, double b, double c, int N);

/// Largest n accepted by the Kronecker solvers.
inline constexpr Eigen::Index kKroneckerMaxSize = 12;

/// Solves A^H U + U A = V through (I (x) A^H + A^T (x) I) vec U = vec V.
/// Throws SingularSystem when the n^2 x n^2 system is rank deficient or the
/// residual exceeds 1e-10 (relative to ||V||).
CMatrix kronecker_lyapunov(const CMatrix& A, const CMatrix& V);

/// Real counterpart in any Eigen-compatible scalar type; used with boost
/// multiprecision to get past double precision on the 3x3 showcase.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> kronecker_lyapunov_real(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& V) {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  const Eigen::Index n = A.rows();
  if (n > kKroneckerMaxSize) throw std::invalid_argument("kronecker_lyapunov_real: n exceeds the oracle size cap");
  Mat big = Mat::Zero(n * n, n * n);
  // vec(A^T U) = (I (x) A^T) vec U and vec(U A) = (A^T (x) I) vec U.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        big(j * n + i, j * n + k) += A(k, i);
        big(j * n + i, k * n + i) += A(k, j);
      }
    }
  }
  Vec rhs(n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) rhs(j * n + i) = V(i, j);
  Eigen::FullPivLU<Mat> lu(big);
  if (!lu.isInvertible()) throw SingularSystem("kronecker_lyapunov_real: singular Kronecker system");
  const Vec x = lu.solve(rhs);
  Mat U(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) U(i, j) = x(j * n + i);
  return Mat((U + U.transpose()) / Scalar(2));
}

/// Inertia of a real symmetric matrix in the given scalar type, read off the
/// pivots of a diagonally pivoted LDL^T factorization (Sylvester's law of
/// inertia). Needs nonzero pivots, which holds for definite matrices.
template <typename Scalar>
Inertia inertia_symmetric_real(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& H, double zero_tol) {
  Eigen::LDLT<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> ldlt(H);
  if (ldlt.info() != Eigen::Success) throw std::runtime_error("inertia_symmetric_real: LDL^T factorization failed");
  Inertia in;
  in.zero_tol = zero_tol;
  const auto d = ldlt.vectorD();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    const Scalar v = d(i);
    if (v > Scalar(zero_tol))
      ++in.n_plus;
    else if (v < Scalar(-zero_tol))
      ++in.n_minus;
    else
      ++in.n_zero;
  }
  return in;
}

/// The 3x3 showcase
///   [ 1e4+1   1e6   1e4   ]
///   [ 1e6     2     1e6   ]
///   [ -1e4   -1e6  -1e4+1 ]
/// with eigenvalues 1, 1, 2 that double-precision eig gets badly wrong.
Eigen::Matrix3d intro_matrix();
/// T with T A T^{-1} = intro_upper_triangular().
Eigen::Matrix3d intro_similarity();
/// [[1, 1e6, 1e4], [0, 2, 1e6], [0, 0, 1]].
Eigen::Matrix3d intro_upper_triangular();

/// Inertia of the Lyapunov solution of the showcase matrix, computed in
/// 113-bit binary floating point.
Inertia intro_lyapunov_inertia_extended();

/// n x n complex Gaussian matrix whose eigenvalues all satisfy
/// |Re lambda| >= margin (rejection sampling).
CMatrix random_axis_separated(std::mt19937_64& rng, int n, double margin);

struct TausskyReport {
  int trials = 0;
  int agreements = 0;
};

/// Positive inertia of the Bartels-Stewart solution of A^H U + U A = I
/// against the Schur right-half-plane count on random axis-separated matrices.
TausskyReport taussky_check(int trials, std::uint64_t seed, int n = 6, double margin = 0.1);

/// Largest relative difference between kronecker_lyapunov and the
/// Bartels-Stewart solver on random axis-separated matrices of size <= 12.
double kronecker_cross_check(int trials, std::uint64_t seed);

}  // namespace sik
