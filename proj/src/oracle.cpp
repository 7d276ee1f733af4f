// Boost goes first: with the LAPACKE backend Eigen pulls in <complex.h>,
// whose `I` macro breaks later Boost headers.
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "sik/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "sik/lyapunov.hpp"

namespace sik {

int dispersion_index(double a, double /*b*/, double c, int N) {
  int count = 0;
  for (int p = -N; p <= N; ++p) {
    const double q = static_cast<double>(p);
    const double q2 = q * q;
    if (-q2 * q2 + a * q2 - c > 0.0) ++count;
  }
  return count;
}

CMatrix kronecker_lyapunov(const CMatrix& A, const CMatrix& V) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n || V.rows() != n || V.cols() != n) throw std::invalid_argument("kronecker_lyapunov: shape mismatch");
  if (n > kKroneckerMaxSize) throw std::invalid_argument("kronecker_lyapunov: n exceeds the oracle size cap");
  const CMatrix Ah = A.adjoint();
  CMatrix big = CMatrix::Zero(n * n, n * n);
  // Column-major vec: vec(A^H U) = (I (x) A^H) vec U, vec(U A) = (A^T (x) I) vec U.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index k = 0; k < n; ++k) {
        big(j * n + i, j * n + k) += Ah(i, k);
        big(j * n + i, k * n + i) += A(k, j);
      }
    }
  }
  CVector rhs(n * n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) rhs(j * n + i) = V(i, j);

  Eigen::FullPivLU<CMatrix> lu(big);
  if (!lu.isInvertible()) throw SingularSystem("kronecker_lyapunov: singular Kronecker system");
  const CVector x = lu.solve(rhs);
  CMatrix U(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) U(i, j) = x(j * n + i);

  const double scale = std::max(1.0, V.norm());
  const double res = (A.adjoint() * U + U * A - V).norm();
  if (res > 1e-10 * scale) {
    std::ostringstream os;
    os << "kronecker_lyapunov: residual " << res << " too large; system is numerically singular";
    throw SingularSystem(os.str());
  }
  return U;
}

Eigen::Matrix3d intro_matrix() {
  Eigen::Matrix3d A;
  A << 1e4 + 1, 1e6, 1e4,  //
      1e6, 2, 1e6,         //
      -1e4, -1e6, -(1e4 - 1);
  return A;
}

Eigen::Matrix3d intro_similarity() {
  Eigen::Matrix3d T;
  T << 1, 0, 0,  //
      0, 1, 0,   //
      1, 0, 1;
  return T;
}

Eigen::Matrix3d intro_upper_triangular() {
  Eigen::Matrix3d R;
  R << 1, 1e6, 1e4,  //
      0, 2, 1e6,     //
      0, 0, 1;
  return R;
}

Inertia intro_lyapunov_inertia_extended() {
  using Quad = boost::multiprecision::cpp_bin_float_quad;
  using QMat = Eigen::Matrix<Quad, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Matrix3d A = intro_matrix();
  QMat Aq(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Aq(i, j) = Quad(A(i, j));
  const QMat U = kronecker_lyapunov_real<Quad>(Aq, QMat::Identity(3, 3));
  return inertia_symmetric_real<Quad>(U, 0.0);
}

CMatrix random_axis_separated(std::mt19937_64& rng, int n, double margin) {
  std::normal_distribution<double> g(0.0, 1.0);
  for (;;) {
    CMatrix A(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) A(i, j) = Complex(g(rng), g(rng));
    Eigen::ComplexEigenSolver<CMatrix> es(A, /*computeEigenvectors=*/false);
    if (es.eigenvalues().real().cwiseAbs().minCoeff() >= margin) return A;
  }
}

TausskyReport taussky_check(int trials, std::uint64_t seed, int n, double margin) {
  std::mt19937_64 rng(seed);
  TausskyReport rep;
  for (int t = 0; t < trials; ++t) {
    const CMatrix A = random_axis_separated(rng, n, margin);
    const DenseLyapunov sol = solve_lyapunov_identity(A);
    const int kappa_u = inertia_hermitian(sol.U).n_plus;
    const int kappa_a = instability_index_general(A).counts.n_plus;
    ++rep.trials;
    if (kappa_u == kappa_a) ++rep.agreements;
  }
  return rep;
}

double kronecker_cross_check(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, static_cast<int>(kKroneckerMaxSize));
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int n = size(rng);
    const CMatrix A = random_axis_separated(rng, n, 0.1);
    const CMatrix Uk = kronecker_lyapunov(A, CMatrix::Identity(n, n));
    const CMatrix Ub = solve_lyapunov_identity(A).U;
    worst = std::max(worst, (Uk - Ub).norm() / Uk.norm());
  }
  return worst;
}

}  // namespace sik
