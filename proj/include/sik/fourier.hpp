// Trigonometric polynomials and doubly periodic kernels on [0, 2pi].
//
// Coefficient convention: f^(p) = (1/2pi) * int_0^{2pi} f(x) e^{-ipx} dx, so
// f(x) = sum_p f^(p) e^{ipx}. Every matrix and kernel in the library uses it.
#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace sik {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Finitely supported Fourier series. Coefficients are stored densely for
/// modes -max_mode..max_mode.
class TrigPoly {
 public:
  TrigPoly() : coeffs_(1, Complex(0.0)) {}

  /// `coeffs[k]` is the coefficient of mode k - (coeffs.size() - 1) / 2.
  /// When `real` is set the coefficients are checked for conjugate symmetry
  /// and then symmetrized exactly.
  TrigPoly(std::vector<Complex> coeffs, bool real);

  static TrigPoly constant(double value);
  /// Real polynomial from its coefficients at modes 0, 1, ..., m; negative
  /// modes follow from conjugate symmetry. The mode-0 value must be real.
  static TrigPoly real_from_nonnegative(std::span<const Complex> nonneg);
  /// amp * cos(p x)
  static TrigPoly cosine(int p, double amp = 1.0);
  /// amp * sin(p x)
  static TrigPoly sine(int p, double amp = 1.0);

  int max_mode() const { return static_cast<int>(coeffs_.size() / 2); }
  bool is_real() const { return real_; }
  Complex coeff(int p) const;
  const std::vector<Complex>& coefficients() const { return coeffs_; }

  Complex operator()(double x) const;
  /// Values at x_j = 2 pi j / n.
  std::vector<Complex> sample(int n) const;

  /// Sum of |f^(p)|.
  double l1_norm() const;
  /// Sum of |p| |f^(p)|, an upper bound for sup |f'|.
  double derivative_l1_norm() const;
  bool is_zero() const;

  TrigPoly operator+(const TrigPoly& other) const;
  TrigPoly operator-(const TrigPoly& other) const;
  TrigPoly operator*(double s) const;

 private:
  void trim();

  std::vector<Complex> coeffs_;
  bool real_ = true;
};

/// Coefficients of modes -max_mode..max_mode from values on the uniform grid
/// x_j = 2 pi j / n. Exact whenever n > 2 * (true max mode).
TrigPoly from_samples(std::span<const Complex> values, int max_mode, bool real);

TrigPoly tp_multiply(const TrigPoly& f, const TrigPoly& g);
TrigPoly tp_derivative(const TrigPoly& f, int order);

/// ||f||_{H^s} with ||f||^2 = 2 pi sum (1 + p^4)^{s/2} |f^(p)|^2.
double sobolev_norm(const TrigPoly& f, double s);

/// Next power of two >= 4 * max_mode + 4; large enough that products of two
/// polynomials of this order are sampled without aliasing.
int sampling_grid_size(int max_mode);

/// Fourier coefficients of a function on the square, modes |p|, |q| <= N.
/// coeffs(p + N, q + N) holds F^(p, q).
struct Kernel2D {
  int N = 0;
  CMatrix coeffs;

  Kernel2D() = default;
  explicit Kernel2D(int order) : N(order), coeffs(CMatrix::Zero(2 * order + 1, 2 * order + 1)) {}

  Complex& at(int p, int q) { return coeffs(p + N, q + N); }
  Complex at(int p, int q) const { return coeffs(p + N, q + N); }
  Complex operator()(double x, double y) const;
};

/// ||F||_{H^s} with ||F||^2 = 4 pi^2 sum (2 + p^4 + q^4)^{s/2} |F^(p,q)|^2.
double kernel2d_sobolev_norm(const Kernel2D& F, double s);

/// Constant C with ||a phi||_{L2} <= C ||a||_{H1} ||phi||_{L2}, namely
/// (S / 2pi)^{1/2} with S = sum_p (1 + p^4)^{-1/2}. The series is summed up to
/// |p| = 10^6 and the remainder is bounded above by the integral tail, so the
/// result is an upper bound (about 0.766).
double leibnitz_constant();

/// The rounded value 0.52 quoted in the literature for the same inequality. It
/// does not follow from the series above, which sums to about 3.69 rather than
/// 1.68; kept for comparison runs only.
inline constexpr double kLiteratureLeibnitzConstant = 0.52;

}  // namespace sik
