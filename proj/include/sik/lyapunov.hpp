// Truncated Lyapunov equation A_N^H U + U A_N = I, the Green kernel U0 of
// -D^4 = -(d^4/dx^4 + 1), and the split U = U0 + K.
#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "sik/fourier.hpp"
#include "sik/operator.hpp"

namespace sik {

/// sigma(A) and sigma(-A^H) (numerically) intersect: some eigenvalue sits on
/// or near the imaginary axis and the Lyapunov equation has no usable
/// solution.
class NearSingularPencil : public std::runtime_error {
 public:
  NearSingularPencil(double gap, double threshold, std::vector<Complex> eigenvalues);

  /// min |lambda_i + conj(lambda_j)|
  double gap() const { return gap_; }
  double threshold() const { return threshold_; }
  const std::vector<Complex>& eigenvalues() const { return eigenvalues_; }

 private:
  double gap_;
  double threshold_;
  std::vector<Complex> eigenvalues_;
};

/// Green kernel U0(x, y) = u0(x - y) = -(1/4pi) sum_p e^{ip(x-y)} / (1 + p^4).
struct GreenKernel {
  int N = 0;
  std::vector<double> diag_coeffs;  // u0^(p), p = -N..N

  static GreenKernel build(int N);

  double coeff(int p) const { return diag_coeffs[p + N]; }
  /// Kernel view: F^(p, -p) = u0^(p).
  Kernel2D kernel() const;
  /// Operator view: diag(-1 / (2 (1 + p^4))) = -D^{-4} / 2.
  SpectralMatrix as_operator() const;

  /// u0(x) = C1 cos(s) cosh(s) + C2 sin(s) sinh(s), s = (x - pi)/sqrt 2, for
  /// x in [0, 2pi] (periodically extended). C1, C2 make u0 C^1-periodic with
  /// a jump of -1/2 in u0''' at 0.
  static double closed_form(double x);
  /// k-th derivative (k <= 3) of closed_form on the open interval (0, 2pi).
  static double closed_form_derivative(double x, int k);
};

/// Operator matrix of the integral operator with kernel F:
/// (F phi)^(p) = 2pi sum_q F^(p, -q) phi^(q).
SpectralMatrix to_operator(const Kernel2D& F);
/// Inverse of to_operator.
Kernel2D to_kernel(const SpectralMatrix& U);

struct LyapunovOptions {
  /// NearSingularPencil when min|lambda_i + conj(lambda_j)| <= pencil_tol ||A_N||_2.
  double pencil_tol = 1e-10;
  /// Absolute threshold replacing pencil_tol ||A_N||_2 when set.
  std::optional<double> pencil_threshold;
  /// Solve on the mean-zero modes when row p = 0 of A_N vanishes (c == 0).
  bool deflate_mean = true;
};

struct LyapunovSolution {
  int N = 0;
  /// Hermitian solution in the operator view. With a deflated mean the
  /// p = 0 row and column carry the U0 value -1/2 and nothing else.
  SpectralMatrix U;
  /// U - U0 in the kernel view; zero on the p = 0 mode when deflated.
  Kernel2D K;
  /// ||A^H U + U A - I||_F / sqrt(n) over the solved modes.
  double residual = 0.0;
  /// ||U - U^H||_F / ||U||_F before the result was symmetrized.
  double hermitian_defect = 0.0;
  /// Schur diagonal of the solved block.
  std::vector<Complex> eigenvalues;
  double pencil_gap = 0.0;
  double a_norm = 0.0;
  bool mean_deflated = false;

  /// Mode indices (as matrix indices) the equation was solved on.
  std::vector<int> active_indices() const;
};

/// Dense Bartels-Stewart solve of A^H U + U A = I: complex Schur form
/// A = Q T Q^H, then column-wise substitution on T^H Y + Y T = I and U = Q Y Q^H.
struct DenseLyapunov {
  CMatrix U;
  std::vector<Complex> eigenvalues;
  double residual = 0.0;
  double hermitian_defect = 0.0;
  double pencil_gap = 0.0;
  double a_norm = 0.0;
};

/// The pencil test uses `pencil_threshold` when given, else pencil_tol ||A||_2
/// (a_norm is only filled in the latter case).
DenseLyapunov solve_lyapunov_identity(const CMatrix& A, double pencil_tol = 1e-10,
                                      std::optional<double> pencil_threshold = std::nullopt);

LyapunovSolution solve_finite_lyapunov(const SpectralMatrix& A_N, const LyapunovOptions& opts = {});

}  // namespace sik
