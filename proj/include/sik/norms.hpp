// The phase-insensitive kernel norm
//
//   |||F||| = 4 pi^2 sup_{||phi|| = ||psi|| = 1} sum (2 + p^4 + q^4) |F^(p,q)| |phi^(p)| |psi^(q)|
//
// and the estimates of |||U||| built on it.
#pragma once

#include <stdexcept>

#include "sik/fourier.hpp"
#include "sik/lyapunov.hpp"

namespace sik {

/// delta_N = M / N^2 >= 1; no estimate of |||U||| is available at this N.
class DeltaTooLarge : public std::runtime_error {
 public:
  explicit DeltaTooLarge(double delta);
  double delta() const { return delta_; }

 private:
  double delta_;
};

/// W(p, q) = (2 + p^4 + q^4) |F^(p, q)|.
Eigen::MatrixXd weighted_magnitudes(const Kernel2D& F);

/// 2 pi sigma_max(W). With ||phi||^2 = 2 pi sum |phi^|^2 this equals the
/// supremum in the definition.
double triple_norm(const Kernel2D& F);

/// F with every coefficient |p|, |q| <= n removed, i.e. F - P_n F P_n.
Kernel2D outside_block(const Kernel2D& F, int n);

/// |||P_N K P_N||| for the solved K = U - U0.
double lambda_max_statistic(const LyapunovSolution& sol);

struct TailReport {
  int N = 0;
  double delta_N = 0.0;        // M N^{-2}
  double tripleU_lower = 1.0;  // |||U||| >= 1 always
  double tripleU_upper = 1.0;  // (1 + lambda_max) / (1 - delta_N)
  double lambda_max = 0.0;
  bool usable() const { return delta_N < 1.0; }
};

/// Bracket 1 <= |||U||| <= (1 + |||P_N K P_N|||) / (1 - M N^{-2}).
/// Throws DeltaTooLarge when M N^{-2} >= 1.
TailReport estimate_triple_U(const LyapunovSolution& sol, double M);

/// Upper bound M N^{-2} |||U||| for |||K - P_N K P_N|||.
double tail_bound(double M, int N, double tripleU);

}  // namespace sik
