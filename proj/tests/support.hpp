// Shared fixtures for the test binaries: random specs and references that do
// not go through the library's own coefficient arithmetic.
#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "sik/fourier.hpp"
#include "sik/operator.hpp"

namespace sik::test {

/// f(x) = c0 + sum_k (cos_c[k] cos((k+1)x) + sin_c[k] sin((k+1)x)), with
/// derivatives evaluated in closed form.
struct RealSeries {
  double c0 = 0.0;
  std::vector<double> cos_c;
  std::vector<double> sin_c;

  int order() const { return static_cast<int>(cos_c.size()); }

  double eval(double x, int deriv = 0) const {
    double v = deriv == 0 ? c0 : 0.0;
    for (int k = 1; k <= order(); ++k) {
      const double kd = k;
      const double scale = std::pow(kd, deriv);
      // d^n/dx^n cos(kx) = k^n cos(kx + n pi/2), likewise for sin.
      const double ph = kd * x + deriv * kPi / 2.0;
      v += scale * (cos_c[k - 1] * std::cos(ph) + sin_c[k - 1] * std::sin(ph));
    }
    return v;
  }

  TrigPoly poly() const {
    std::vector<Complex> nonneg(order() + 1);
    nonneg[0] = c0;
    for (int k = 1; k <= order(); ++k) nonneg[k] = Complex(cos_c[k - 1], -sin_c[k - 1]) / 2.0;
    return TrigPoly::real_from_nonnegative(nonneg);
  }
};

inline RealSeries random_series(std::mt19937_64& rng, int order, double amp) {
  std::uniform_real_distribution<double> u(-amp, amp);
  RealSeries s;
  s.c0 = u(rng);
  for (int k = 0; k < order; ++k) {
    s.cos_c.push_back(u(rng) / (k + 1));
    s.sin_c.push_back(u(rng) / (k + 1));
  }
  return s;
}

inline RealSeries derivative_series(const RealSeries& s) {
  RealSeries d;
  for (int k = 1; k <= s.order(); ++k) {
    d.cos_c.push_back(k * s.sin_c[k - 1]);
    d.sin_c.push_back(-k * s.cos_c[k - 1]);
  }
  return d;
}

struct SeriesSpec {
  RealSeries a, b, c;
  OperatorSpec spec() const { return OperatorSpec(a.poly(), b.poly(), c.poly()); }
};

inline SeriesSpec random_series_spec(std::mt19937_64& rng, int order, double amp) {
  return {random_series(rng, order, amp), random_series(rng, order, amp), random_series(rng, order, amp)};
}

/// <A e^{iqx}, e^{ipx}> / 2pi by the trapezoidal rule, exact for trigonometric
/// integrands of degree below n_grid.
inline Complex quadrature_entry(const SeriesSpec& s, int p, int q, int n_grid = 256) {
  const Complex iq(0.0, q);
  Complex sum = 0.0;
  for (int j = 0; j < n_grid; ++j) {
    const double x = kTwoPi * j / n_grid;
    const Complex h = std::exp(Complex(0.0, q * x));
    const Complex h1 = iq * h, h2 = iq * h1, h4 = iq * iq * h2;
    const Complex ah2 = s.a.eval(x, 2) * h + 2.0 * s.a.eval(x, 1) * h1 + s.a.eval(x) * h2;
    const Complex bh1 = s.b.eval(x, 1) * h + s.b.eval(x) * h1;
    const Complex Ah = -h4 - ah2 + bh1 - s.c.eval(x) * h;
    sum += Ah * std::exp(Complex(0.0, -p * x));
  }
  return sum / static_cast<double>(n_grid);
}

/// Constant-coefficient spec with every -p^4 + a p^2 - c (|p| <= N) at least
/// `margin` away from zero.
struct ConstantSpec {
  double a, b, c;
};

inline std::vector<ConstantSpec> random_constant_specs(std::uint64_t seed, int count, int N, double margin = 1e-6) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<ConstantSpec> out;
  while (static_cast<int>(out.size()) < count) {
    const ConstantSpec s{u(rng), u(rng), u(rng)};
    bool near = false;
    for (int p = 0; p <= N; ++p) {
      const double pp = static_cast<double>(p) * p;
      near = near || std::abs(-pp * pp + s.a * pp - s.c) < margin;
    }
    if (!near) out.push_back(s);
  }
  return out;
}

inline CMatrix random_complex(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  const CMatrix g = random_complex(rng, n, n);
  return (g + g.adjoint()) / 2.0;
}

}  // namespace sik::test
