#include "sik/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "sik/linalg.hpp"

namespace sik {

namespace {

std::string delta_message(double delta) {
  std::ostringstream os;
  os << "delta_N = M N^-2 = " << delta << " >= 1; increase N";
  return os.str();
}

}  // namespace

DeltaTooLarge::DeltaTooLarge(double delta) : std::runtime_error(delta_message(delta)), delta_(delta) {}

Eigen::MatrixXd weighted_magnitudes(const Kernel2D& F) {
  const int n = 2 * F.N + 1;
  Eigen::VectorXd p4(n);
  for (int p = -F.N; p <= F.N; ++p) {
    const double d = static_cast<double>(p);
    p4(p + F.N) = d * d * d * d;
  }
  Eigen::MatrixXd W(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) W(i, j) = (2.0 + p4(i) + p4(j)) * std::abs(F.coeffs(i, j));
  }
  return W;
}

double triple_norm(const Kernel2D& F) { return kTwoPi * sigma_max_nonnegative(weighted_magnitudes(F)); }

Kernel2D outside_block(const Kernel2D& F, int n) {
  Kernel2D out = F;
  const int lo = std::max(-F.N, -n);
  const int hi = std::min(F.N, n);
  if (lo > hi) return out;
  const int len = hi - lo + 1;
  out.coeffs.block(lo + F.N, lo + F.N, len, len).setZero();
  return out;
}

double lambda_max_statistic(const LyapunovSolution& sol) { return triple_norm(sol.K); }

TailReport estimate_triple_U(const LyapunovSolution& sol, double M) {
  TailReport r;
  r.N = sol.N;
  r.delta_N = sol.N > 0 ? M / (static_cast<double>(sol.N) * sol.N) : std::numeric_limits<double>::infinity();
  if (!(r.delta_N < 1.0)) throw DeltaTooLarge(r.delta_N);
  r.lambda_max = lambda_max_statistic(sol);
  r.tripleU_lower = 1.0;
  r.tripleU_upper = (1.0 + r.lambda_max) / (1.0 - r.delta_N);
  return r;
}

double tail_bound(double M, int N, double tripleU) {
  if (N < 1) throw std::invalid_argument("tail_bound: N must be at least 1");
  return M * tripleU / (static_cast<double>(N) * N);
}

}  // namespace sik
