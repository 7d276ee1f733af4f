// Adaptive truncation: grow N until N^2 > M (1 + sqrt(1 + M)) |||U||| holds
// with the computed upper bound for |||U|||, then read off the index of
// P_N A P_N from both its Schur form and the inertia of U_N.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sik/operator.hpp"

namespace sik {

enum class CertStatus { Certified, ConditionNotMet, SpectraTouchAxis };

std::string to_string(CertStatus s);

/// Scales for the axis and pencil tolerances of a truncated operator.
/// ||A_N||_2 ~ N^4 grows without bound, so relative tolerances are taken
/// against the bounded graph-norm quantity ||A_N (I + D^4)^{-1}||_2 instead,
/// never going below 16 eps ||A_N||_2, the backward error of the Schur form.
struct ToleranceScale {
  double graph_norm = 0.0;  // ||A_N (I + D^4)^{-1}||_2
  double a_norm = 0.0;      // ||A_N||_2
  double absolute(double rel) const;
};

ToleranceScale tolerance_scale(const SpectralMatrix& A_N);

struct CertifyOptions {
  int N_min = 8;
  int max_N = 2048;
  bool with_uinv = false;
  /// Both relative to ToleranceScale.
  double pencil_tol = 1e-10;
  double axis_tol = 1e-8;
  /// Leibnitz constant for M; leibnitz_constant() when unset.
  std::optional<double> leibnitz;
  int max_iterations = 20;
  bool deflate_mean = true;
};

struct Certificate {
  std::string spec_digest;
  double M = 0.0;
  int N_final = 0;
  double delta_N = 0.0;
  double c_N = 0.0;
  double tripleU_upper = 0.0;
  bool cond1_ok = false;
  bool cond2_ok = false;
  int kappa_schur = 0;
  std::optional<int> kappa_lyapunov;
  std::optional<int> kappa_uinv;
  double residual = 0.0;
  double axis_gap = 0.0;
  CertStatus status = CertStatus::ConditionNotMet;

  // Diagnostics kept out of the JSON record.
  double lambda_max = 0.0;
  bool mean_deflated = false;
  std::vector<int> N_history;

  /// kappa_lyapunov when available, otherwise kappa_schur.
  int kappa() const { return kappa_lyapunov ? *kappa_lyapunov : kappa_schur; }
};

/// Hex SHA-256 of a canonical text rendering of (a, b, c).
std::string spec_digest(const OperatorSpec& spec);

Certificate certified_index(const OperatorSpec& spec, const CertifyOptions& opts = {});

/// Right-half-plane count of P_N A P_N with the certificate's axis tolerance.
int schur_count(const OperatorSpec& spec, int N, double axis_tol = 1e-8);

struct CrossValidation {
  int N = 0;
  int kappa_N = 0;
  int kappa_2N = 0;
  bool count_stable = false;
  /// ||(D^2 P_N U P_N D^2)^{-1}|| against 2 (1 + M) / c_N; the bound is only
  /// meaningful when c_N > 0.
  double inverse_norm = 0.0;
  double inverse_bound = 0.0;
  bool inverse_ok = false;
  /// Smallest eigenvalue of A_N^H U_N + U_N A_N (U_N the truncated solution).
  double lyap_min_eig = 0.0;
  /// Same with U_N replaced by P_N U_{2N} P_N.
  double lyap_min_eig_projected = 0.0;
  bool lyap_ok = false;
};

CrossValidation cross_validate(const Certificate& cert, const OperatorSpec& spec, const CertifyOptions& opts = {});

nlohmann::ordered_json to_json(const Certificate& cert);
/// Two-space indented JSON with shortest round-trip doubles and a trailing newline.
std::string certificate_json_text(const Certificate& cert);

}  // namespace sik
