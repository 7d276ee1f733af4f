// Fourier matrices of the periodic fourth-order operator
//
//   A[h] = -h'''' - (a h)'' + (b h)' - c h
//
// and its adjoint, plus the a-priori constants derived from the coefficients.
#pragma once

#include <string>

#include "sik/fourier.hpp"

namespace sik {

/// Real coefficients (a, b, c) of A.
struct OperatorSpec {
  TrigPoly a;
  TrigPoly b;
  TrigPoly c;

  OperatorSpec() = default;
  /// Throws std::invalid_argument unless all three polynomials are real.
  OperatorSpec(TrigPoly a_, TrigPoly b_, TrigPoly c_);

  static OperatorSpec constant(double a, double b, double c);

  /// Thin-film rimming flow linearization
  ///   -d/dx { (1 - alpha1 cos x) h + alpha2 sin x h' + alpha3 (h' + h''') }
  /// divided by alpha3 > 0, which gives
  ///   a = 1 + (alpha2/alpha3) sin x,
  ///   b = -(1 - (alpha1 + alpha2) cos x) / alpha3,
  ///   c = 0.
  /// Dividing by alpha3 does not change the instability index.
  static OperatorSpec benilov(double alpha1, double alpha2, double alpha3);

  int max_mode() const;
  /// c == 0: every A[h] has zero mean, so the mean-zero modes form an
  /// invariant subspace and 0 is an eigenvalue.
  bool conserves_mean() const { return c.is_zero(); }
};

/// Dense matrix of a truncated operator in the basis e^{ipx}, |p| <= N.
/// Row = output mode p, column = input mode q; index = mode + N.
struct SpectralMatrix {
  int N = 0;
  CMatrix entries;

  SpectralMatrix() = default;
  SpectralMatrix(int order, CMatrix m) : N(order), entries(std::move(m)) {}

  int size() const { return 2 * N + 1; }
  static int index(int N, int p) { return p + N; }
  Complex at(int p, int q) const { return entries(p + N, q + N); }
};

/// Matrix of P_N A P_N:
///   entry(p, q) = -q^4 [p = q] + p^2 a^(p-q) + i p b^(p-q) - c^(p-q).
/// Warns on stderr when N is below the coefficient order.
SpectralMatrix assemble_A(const OperatorSpec& spec, int N);

/// Matrix of P_N A* P_N with A*[f] = -f'''' - a f'' - b f' - c f:
///   entry(p, q) = -q^4 [p = q] + q^2 a^(p-q) - i q b^(p-q) - c^(p-q).
SpectralMatrix assemble_A_star(const OperatorSpec& spec, int N);

/// diag((1 + p^4)^{k/4}), |p| <= N; the matrix of D^k.
Eigen::VectorXd d_power_diagonal(int N, double k);

/// Both bounds on ||A* + D^4||_{H^2 -> L^2}.
struct MBounds {
  double sobolev = 0.0;  // C (||a||_H1 + ||b||_H1 + ||c - 1||_H1)
  double l1 = 0.0;       // sum |a^| + |b^| + |(c - 1)^|
  double value() const { return sobolev < l1 ? sobolev : l1; }
};

MBounds m_bounds(const OperatorSpec& spec, double leibnitz = leibnitz_constant());
/// min(sobolev, l1) from m_bounds.
double constant_M(const OperatorSpec& spec, double leibnitz = leibnitz_constant());

/// Upper bound for max_x Re f(x): maximum over a 4096-point grid plus
/// sum |p||f^(p)| times the grid spacing.
double certified_max(const TrigPoly& f);

/// Vertex lambda0 and half-angle theta of a sector containing the numerical
/// range of A.
struct SectorParams {
  double lambda0 = 0.0;
  double theta = 0.0;
};

/// lambda0 = max of
///   1/2 (1 + max{-a'' + b' - c} + (max[a]_+)^2)   and
///   1/2 (1 + max{-a'' + b' - 2c} + (max[a]_+)^2),
/// theta = atan(max |a' - b|). The first expression alone fails the
/// coercivity bound Re<f, (lambda0 - A) f> >= ||f||_{H2}^2 / 2 when c < 0
/// somewhere; the second is what the bound needs, and taking the larger of
/// the two keeps every vertex sound.
SectorParams sector_params(const OperatorSpec& spec);

}  // namespace sik
