#include "sik/operator.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace sik {

namespace {

constexpr int kMaxGrid = 4096;

void warn_if_truncated(const OperatorSpec& spec, int N) {
  if (N < spec.max_mode()) {
    std::clog << "sik: truncation order N=" << N << " is below the coefficient order " << spec.max_mode()
              << "; coefficients beyond N are dropped\n";
  }
}

template <typename Entry>
SpectralMatrix assemble(const OperatorSpec& spec, int N, Entry entry) {
  if (N < 0) throw std::invalid_argument("assemble: N must be nonnegative");
  warn_if_truncated(spec, N);
  const int n = 2 * N + 1;
  const int band = spec.max_mode();
  CMatrix m = CMatrix::Zero(n, n);
  for (int q = -N; q <= N; ++q) {
    const int lo = std::max(-N, q - band);
    const int hi = std::min(N, q + band);
    for (int p = lo; p <= hi; ++p) m(p + N, q + N) = entry(p, q);
  }
  return SpectralMatrix(N, std::move(m));
}

double quartic(int p) {
  const double d = static_cast<double>(p);
  return d * d * d * d;
}

}  // namespace

OperatorSpec::OperatorSpec(TrigPoly a_, TrigPoly b_, TrigPoly c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (!a.is_real() || !b.is_real() || !c.is_real()) {
    throw std::invalid_argument("OperatorSpec: coefficients a, b, c must be real-valued");
  }
}

OperatorSpec OperatorSpec::constant(double a, double b, double c) {
  return OperatorSpec(TrigPoly::constant(a), TrigPoly::constant(b), TrigPoly::constant(c));
}

OperatorSpec OperatorSpec::benilov(double alpha1, double alpha2, double alpha3) {
  if (!(alpha3 > 0.0)) throw std::invalid_argument("benilov: alpha3 must be positive");
  TrigPoly a = TrigPoly::constant(1.0) + TrigPoly::sine(1, alpha2 / alpha3);
  TrigPoly b = (TrigPoly::constant(-1.0) + TrigPoly::cosine(1, alpha1 + alpha2)) * (1.0 / alpha3);
  return OperatorSpec(std::move(a), std::move(b), TrigPoly());
}

int OperatorSpec::max_mode() const { return std::max({a.max_mode(), b.max_mode(), c.max_mode()}); }

SpectralMatrix assemble_A(const OperatorSpec& spec, int N) {
  return assemble(spec, N, [&](int p, int q) {
    const int d = p - q;
    Complex v = static_cast<double>(p) * p * spec.a.coeff(d) + Complex(0.0, p) * spec.b.coeff(d) - spec.c.coeff(d);
    if (d == 0) v -= quartic(q);
    return v;
  });
}

SpectralMatrix assemble_A_star(const OperatorSpec& spec, int N) {
  return assemble(spec, N, [&](int p, int q) {
    const int d = p - q;
    Complex v = static_cast<double>(q) * q * spec.a.coeff(d) - Complex(0.0, q) * spec.b.coeff(d) - spec.c.coeff(d);
    if (d == 0) v -= quartic(q);
    return v;
  });
}

Eigen::VectorXd d_power_diagonal(int N, double k) {
  Eigen::VectorXd d(2 * N + 1);
  for (int p = -N; p <= N; ++p) d(p + N) = std::pow(1.0 + quartic(p), 0.25 * k);
  return d;
}

MBounds m_bounds(const OperatorSpec& spec, double leibnitz) {
  const TrigPoly c_minus_one = spec.c - TrigPoly::constant(1.0);
  MBounds m;
  m.sobolev = leibnitz * (sobolev_norm(spec.a, 1.0) + sobolev_norm(spec.b, 1.0) + sobolev_norm(c_minus_one, 1.0));
  m.l1 = spec.a.l1_norm() + spec.b.l1_norm() + c_minus_one.l1_norm();
  return m;
}

double constant_M(const OperatorSpec& spec, double leibnitz) { return m_bounds(spec, leibnitz).value(); }

double certified_max(const TrigPoly& f) {
  const int n = std::max(kMaxGrid, sampling_grid_size(f.max_mode()));
  double best = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) best = std::max(best, f(kTwoPi * j / n).real());
  return best + f.derivative_l1_norm() * (kTwoPi / n);
}

SectorParams sector_params(const OperatorSpec& spec) {
  const TrigPoly a1 = tp_derivative(spec.a, 1);
  const TrigPoly a2 = tp_derivative(spec.a, 2);
  const TrigPoly b1 = tp_derivative(spec.b, 1);
  const TrigPoly lower = b1 - a2;  // -a'' + b'
  const double a_plus = std::max(0.0, certified_max(spec.a));
  const double g1 = certified_max(lower - spec.c);
  const double g2 = certified_max(lower - spec.c * 2.0);
  SectorParams s;
  s.lambda0 = 0.5 * (1.0 + std::max(g1, g2) + a_plus * a_plus);
  const TrigPoly skew = a1 - spec.b;
  const double skew_max = std::max(certified_max(skew), certified_max(skew * -1.0));
  s.theta = std::atan(std::max(0.0, skew_max));
  return s;
}

}  // namespace sik
