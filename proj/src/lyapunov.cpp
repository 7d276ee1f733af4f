#include "sik/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sik/linalg.hpp"

namespace sik {

namespace {

std::string pencil_message(double gap, double threshold) {
  std::ostringstream os;
  os << "near-singular Lyapunov pencil: min |lambda_i + conj(lambda_j)| = " << gap << " <= " << threshold;
  return os.str();
}

// Derivatives of cos(s)cosh(s) and sin(s)sinh(s) with respect to s.
double f1(double s, int k) {
  const double c = std::cos(s), sn = std::sin(s), ch = std::cosh(s), sh = std::sinh(s);
  switch (k) {
    case 0: return c * ch;
    case 1: return -sn * ch + c * sh;
    case 2: return -2.0 * sn * sh;
    default: return -2.0 * (c * sh + sn * ch);
  }
}

double f2(double s, int k) {
  const double c = std::cos(s), sn = std::sin(s), ch = std::cosh(s), sh = std::sinh(s);
  switch (k) {
    case 0: return sn * sh;
    case 1: return c * sh + sn * ch;
    case 2: return 2.0 * c * ch;
    default: return 2.0 * (c * sh - sn * ch);
  }
}

struct ClosedFormCoefficients {
  double c1;
  double c2;
};

// u0'(0+) = 0 and u0'''(0+) = -1/4; the evenness about pi then gives the
// jump u0'''(0+) - u0'''(0-) = -1/2.
const ClosedFormCoefficients& closed_form_coefficients() {
  static const ClosedFormCoefficients coeffs = [] {
    const double s0 = -kPi / std::sqrt(2.0);
    Eigen::Matrix2d m;
    m << f1(s0, 1), f2(s0, 1), f1(s0, 3), f2(s0, 3);
    const Eigen::Vector2d rhs(0.0, -0.25 * 2.0 * std::sqrt(2.0));
    const Eigen::Vector2d c = m.fullPivLu().solve(rhs);
    return ClosedFormCoefficients{c(0), c(1)};
  }();
  return coeffs;
}

}  // namespace

NearSingularPencil::NearSingularPencil(double gap, double threshold, std::vector<Complex> eigenvalues)
    : std::runtime_error(pencil_message(gap, threshold)),
      gap_(gap),
      threshold_(threshold),
      eigenvalues_(std::move(eigenvalues)) {}

GreenKernel GreenKernel::build(int N) {
  if (N < 0) throw std::invalid_argument("GreenKernel: N must be nonnegative");
  GreenKernel g;
  g.N = N;
  g.diag_coeffs.resize(2 * N + 1);
  for (int p = -N; p <= N; ++p) {
    const double q = static_cast<double>(p);
    g.diag_coeffs[p + N] = -1.0 / (4.0 * kPi * (1.0 + q * q * q * q));
  }
  return g;
}

Kernel2D GreenKernel::kernel() const {
  Kernel2D F(N);
  for (int p = -N; p <= N; ++p) F.at(p, -p) = coeff(p);
  return F;
}

SpectralMatrix GreenKernel::as_operator() const {
  CMatrix m = CMatrix::Zero(2 * N + 1, 2 * N + 1);
  for (int p = -N; p <= N; ++p) m(p + N, p + N) = kTwoPi * coeff(p);
  return SpectralMatrix(N, std::move(m));
}

double GreenKernel::closed_form(double x) { return closed_form_derivative(x, 0); }

double GreenKernel::closed_form_derivative(double x, int k) {
  x = std::fmod(x, kTwoPi);
  if (x < 0.0) x += kTwoPi;
  const auto& c = closed_form_coefficients();
  const double s = (x - kPi) / std::sqrt(2.0);
  const double scale = std::pow(std::sqrt(0.5), k);
  return scale * (c.c1 * f1(s, k) + c.c2 * f2(s, k));
}

SpectralMatrix to_operator(const Kernel2D& F) {
  const int N = F.N;
  CMatrix m(2 * N + 1, 2 * N + 1);
  for (int p = -N; p <= N; ++p) {
    for (int q = -N; q <= N; ++q) m(p + N, q + N) = kTwoPi * F.at(p, -q);
  }
  return SpectralMatrix(N, std::move(m));
}

Kernel2D to_kernel(const SpectralMatrix& U) {
  Kernel2D F(U.N);
  for (int p = -U.N; p <= U.N; ++p) {
    for (int q = -U.N; q <= U.N; ++q) F.at(p, q) = U.at(p, -q) / kTwoPi;
  }
  return F;
}

std::vector<int> LyapunovSolution::active_indices() const {
  std::vector<int> idx;
  idx.reserve(2 * N + 1);
  for (int i = 0; i < 2 * N + 1; ++i) {
    if (mean_deflated && i == N) continue;
    idx.push_back(i);
  }
  return idx;
}

DenseLyapunov solve_lyapunov_identity(const CMatrix& A, double pencil_tol, std::optional<double> pencil_threshold) {
  const Eigen::Index n = A.rows();
  if (A.cols() != n) throw std::invalid_argument("solve_lyapunov_identity: A must be square");
  DenseLyapunov out;
  if (n == 0) return out;

  const SchurForm schur = complex_schur(A, /*compute_q=*/true);
  const CMatrix& T = schur.T;
  const CMatrix& Q = schur.Q;

  out.eigenvalues.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues[i] = T(i, i);

  if (!pencil_threshold) out.a_norm = spectral_norm(A);
  double gap = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) gap = std::min(gap, std::abs(T(i, i) + std::conj(T(j, j))));
  }
  out.pencil_gap = gap;
  const double threshold = pencil_threshold ? *pencil_threshold : pencil_tol * out.a_norm;
  if (!(gap > threshold)) throw NearSingularPencil(gap, threshold, out.eigenvalues);

  // T^H Y + Y T = I, one column at a time:
  //   (T^H + t_jj) y_j = e_j - sum_{k<j} t_kj y_k
  // and T^H + t_jj is lower triangular.
  CMatrix Y = CMatrix::Zero(n, n);
  CVector rhs(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    rhs.setZero();
    rhs(j) = 1.0;
    if (j > 0) rhs.noalias() -= Y.leftCols(j) * T.col(j).head(j);
    const Complex shift = T(j, j);
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex acc = rhs(i);
      if (i > 0) acc -= T.col(i).head(i).dot(Y.col(j).head(i));
      Y(i, j) = acc / (std::conj(T(i, i)) + shift);
    }
  }

  CMatrix U = multiply(multiply(Q, Y), Q, false, true);
  const double unorm = U.norm();
  out.hermitian_defect = unorm > 0.0 ? (U - U.adjoint()).norm() / unorm : 0.0;
  U = hermitian_part(U);

  CMatrix R = multiply(A, U, true, false);
  R += multiply(U, A);
  R.diagonal().array() -= 1.0;
  out.residual = R.norm() / std::sqrt(static_cast<double>(n));
  out.U = std::move(U);
  return out;
}

LyapunovSolution solve_finite_lyapunov(const SpectralMatrix& A_N, const LyapunovOptions& opts) {
  const int N = A_N.N;
  const int n = A_N.size();
  LyapunovSolution sol;
  sol.N = N;
  sol.mean_deflated = opts.deflate_mean && n > 1 && A_N.entries.row(N).isZero(0.0);

  const GreenKernel g = GreenKernel::build(N);
  CMatrix U = CMatrix::Zero(n, n);

  if (sol.mean_deflated) {
    const std::vector<int> idx = sol.active_indices();
    const CMatrix sub = A_N.entries(idx, idx);
    DenseLyapunov dense = solve_lyapunov_identity(sub, opts.pencil_tol, opts.pencil_threshold);
    U(idx, idx) = dense.U;
    U(N, N) = kTwoPi * g.coeff(0);
    sol.residual = dense.residual;
    sol.hermitian_defect = dense.hermitian_defect;
    sol.eigenvalues = std::move(dense.eigenvalues);
    sol.pencil_gap = dense.pencil_gap;
    sol.a_norm = dense.a_norm;
  } else {
    DenseLyapunov dense = solve_lyapunov_identity(A_N.entries, opts.pencil_tol, opts.pencil_threshold);
    U = std::move(dense.U);
    sol.residual = dense.residual;
    sol.hermitian_defect = dense.hermitian_defect;
    sol.eigenvalues = std::move(dense.eigenvalues);
    sol.pencil_gap = dense.pencil_gap;
    sol.a_norm = dense.a_norm;
  }

  sol.U = SpectralMatrix(N, std::move(U));
  sol.K = to_kernel(sol.U);
  for (int p = -N; p <= N; ++p) sol.K.at(p, -p) -= g.coeff(p);
  return sol;
}

}  // namespace sik
