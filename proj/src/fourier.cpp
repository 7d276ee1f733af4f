#include "sik/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sik {

namespace {

constexpr double kSymmetryTol = 1e-12;

double weight4(int p) {
  const double q = static_cast<double>(p);
  return 1.0 + q * q * q * q;
}

}  // namespace

TrigPoly::TrigPoly(std::vector<Complex> coeffs, bool real) : coeffs_(std::move(coeffs)), real_(real) {
  if (coeffs_.empty() || coeffs_.size() % 2 == 0) {
    throw std::invalid_argument("TrigPoly: coefficient vector must have odd length 2m+1");
  }
  if (real_) {
    const int m = max_mode();
    double scale = 1.0;
    for (const auto& c : coeffs_) scale = std::max(scale, std::abs(c));
    for (int p = 0; p <= m; ++p) {
      const Complex plus = coeffs_[m + p];
      const Complex minus = coeffs_[m - p];
      if (std::abs(minus - std::conj(plus)) > kSymmetryTol * scale) {
        throw std::invalid_argument("TrigPoly: coefficients of a real polynomial must satisfy c(-p) = conj(c(p))");
      }
      const Complex sym = 0.5 * (plus + std::conj(minus));
      coeffs_[m + p] = sym;
      coeffs_[m - p] = std::conj(sym);
    }
  }
  trim();
}

void TrigPoly::trim() {
  int m = max_mode();
  int keep = m;
  while (keep > 0 && coeffs_[m + keep] == Complex(0.0) && coeffs_[m - keep] == Complex(0.0)) --keep;
  if (keep != m) {
    coeffs_ = std::vector<Complex>(coeffs_.begin() + (m - keep), coeffs_.begin() + (m + keep + 1));
  }
}

TrigPoly TrigPoly::constant(double value) { return TrigPoly({Complex(value)}, true); }

TrigPoly TrigPoly::real_from_nonnegative(std::span<const Complex> nonneg) {
  if (nonneg.empty()) return TrigPoly();
  if (nonneg[0].imag() != 0.0) {
    throw std::invalid_argument("TrigPoly: mode-0 coefficient of a real polynomial must be real");
  }
  const int m = static_cast<int>(nonneg.size()) - 1;
  std::vector<Complex> c(2 * m + 1);
  for (int p = 0; p <= m; ++p) {
    c[m + p] = nonneg[p];
    c[m - p] = std::conj(nonneg[p]);
  }
  return TrigPoly(std::move(c), true);
}

TrigPoly TrigPoly::cosine(int p, double amp) {
  p = std::abs(p);
  if (p == 0) return constant(amp);
  std::vector<Complex> c(2 * p + 1);
  c.front() = c.back() = Complex(0.5 * amp);
  return TrigPoly(std::move(c), true);
}

TrigPoly TrigPoly::sine(int p, double amp) {
  if (p == 0) return TrigPoly();
  const double sign = p < 0 ? -1.0 : 1.0;
  p = std::abs(p);
  // sin(px) = (e^{ipx} - e^{-ipx}) / (2i)
  std::vector<Complex> c(2 * p + 1);
  c.back() = Complex(0.0, -0.5 * amp * sign);
  c.front() = Complex(0.0, 0.5 * amp * sign);
  return TrigPoly(std::move(c), true);
}

Complex TrigPoly::coeff(int p) const {
  const int m = max_mode();
  if (p < -m || p > m) return Complex(0.0);
  return coeffs_[m + p];
}

Complex TrigPoly::operator()(double x) const {
  const int m = max_mode();
  Complex sum(0.0);
  for (int p = -m; p <= m; ++p) sum += coeffs_[m + p] * std::polar(1.0, p * x);
  if (real_) return Complex(sum.real(), 0.0);
  return sum;
}

std::vector<Complex> TrigPoly::sample(int n) const {
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) out[j] = (*this)(kTwoPi * j / n);
  return out;
}

double TrigPoly::l1_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::abs(c);
  return s;
}

double TrigPoly::derivative_l1_norm() const {
  const int m = max_mode();
  double s = 0.0;
  for (int p = -m; p <= m; ++p) s += std::abs(p) * std::abs(coeffs_[m + p]);
  return s;
}

bool TrigPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) { return c == Complex(0.0); });
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
  const int m = std::max(max_mode(), other.max_mode());
  std::vector<Complex> c(2 * m + 1);
  for (int p = -m; p <= m; ++p) c[m + p] = coeff(p) + other.coeff(p);
  return TrigPoly(std::move(c), real_ && other.real_);
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const { return *this + other * -1.0; }

TrigPoly TrigPoly::operator*(double s) const {
  std::vector<Complex> c = coeffs_;
  for (auto& v : c) v *= s;
  return TrigPoly(std::move(c), real_);
}

TrigPoly from_samples(std::span<const Complex> values, int max_mode, bool real) {
  const int n = static_cast<int>(values.size());
  if (n < 2 * max_mode + 1) throw std::invalid_argument("from_samples: grid too coarse for requested modes");
  std::vector<Complex> c(2 * max_mode + 1);
  for (int p = -max_mode; p <= max_mode; ++p) {
    Complex sum(0.0);
    for (int j = 0; j < n; ++j) sum += values[j] * std::polar(1.0, -kTwoPi * p * j / n);
    c[max_mode + p] = sum / static_cast<double>(n);
  }
  if (real) {
    for (int p = 0; p <= max_mode; ++p) {
      const Complex sym = 0.5 * (c[max_mode + p] + std::conj(c[max_mode - p]));
      c[max_mode + p] = sym;
      c[max_mode - p] = std::conj(sym);
    }
  }
  return TrigPoly(std::move(c), real);
}

TrigPoly tp_multiply(const TrigPoly& f, const TrigPoly& g) {
  const int mf = f.max_mode();
  const int mg = g.max_mode();
  const int m = mf + mg;
  std::vector<Complex> c(2 * m + 1);
  for (int p = -mf; p <= mf; ++p) {
    const Complex fp = f.coeff(p);
    if (fp == Complex(0.0)) continue;
    for (int q = -mg; q <= mg; ++q) c[m + p + q] += fp * g.coeff(q);
  }
  return TrigPoly(std::move(c), f.is_real() && g.is_real());
}

TrigPoly tp_derivative(const TrigPoly& f, int order) {
  if (order < 0) throw std::invalid_argument("tp_derivative: order must be nonnegative");
  const int m = f.max_mode();
  std::vector<Complex> c(2 * m + 1);
  for (int p = -m; p <= m; ++p) c[m + p] = f.coeff(p) * std::pow(Complex(0.0, p), order);
  return TrigPoly(std::move(c), f.is_real());
}

double sobolev_norm(const TrigPoly& f, double s) {
  const int m = f.max_mode();
  double sum = 0.0;
  for (int p = -m; p <= m; ++p) sum += std::pow(weight4(p), 0.5 * s) * std::norm(f.coeff(p));
  return std::sqrt(kTwoPi * sum);
}

int sampling_grid_size(int max_mode) {
  int n = 1;
  while (n < 4 * max_mode + 4) n *= 2;
  return n;
}

Complex Kernel2D::operator()(double x, double y) const {
  Complex sum(0.0);
  for (int p = -N; p <= N; ++p) {
    for (int q = -N; q <= N; ++q) sum += at(p, q) * std::polar(1.0, p * x + q * y);
  }
  return sum;
}

double kernel2d_sobolev_norm(const Kernel2D& F, double s) {
  double sum = 0.0;
  for (int p = -F.N; p <= F.N; ++p) {
    for (int q = -F.N; q <= F.N; ++q) {
      const double w = weight4(p) + weight4(q);
      sum += std::pow(w, 0.5 * s) * std::norm(F.at(p, q));
    }
  }
  return 2.0 * kPi * std::sqrt(sum);
}

double leibnitz_constant() {
  static const double value = [] {
    constexpr int kTerms = 1000000;
    // Summed from the small end so the tail terms are not lost.
    double s = 0.0;
    for (int p = kTerms; p >= 1; --p) s += 2.0 / std::sqrt(weight4(p));
    s += 1.0;
    // (1 + p^4)^{-1/2} < p^{-2}, and sum_{p > P} p^{-2} < 1 / P, on both sides.
    s += 2.0 / kTerms;
    return std::sqrt(s / kTwoPi);
  }();
  return value;
}

}  // namespace sik
