#include "sik/certify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "sik/index.hpp"
#include "sik/linalg.hpp"
#include "sik/lyapunov.hpp"
#include "sik/norms.hpp"
#include "sik/numfmt.hpp"

namespace sik {

namespace {

void append_poly(std::string& out, const char* name, const TrigPoly& f) {
  out += name;
  out += ':';
  for (int p = 0; p <= f.max_mode(); ++p) {
    const Complex z = f.coeff(p);
    out += std::to_string(p);
    out += '=';
    out += format_double(z.real());
    out += ',';
    out += format_double(z.imag());
    out += ';';
  }
  out += '\n';
}

struct Attempt {
  LyapunovSolution sol;
  TailReport tail;
  ToleranceScale scale;
};

LyapunovOptions lyapunov_options(const CertifyOptions& opts, const ToleranceScale& ts) {
  LyapunovOptions lopts;
  lopts.pencil_tol = opts.pencil_tol;
  lopts.pencil_threshold = ts.absolute(opts.pencil_tol);
  lopts.deflate_mean = opts.deflate_mean;
  return lopts;
}

int ceil_int(double x) {
  if (!(x < static_cast<double>(std::numeric_limits<int>::max()))) return std::numeric_limits<int>::max();
  return static_cast<int>(std::ceil(x));
}

// Counts over the solved block. A deflated mean mode only adds the exact
// eigenvalue 0, which is neither counted nor part of the axis gap.
void fill_schur(Certificate& cert, const std::vector<Complex>& solved, double axis_tol) {
  const SpectralCount sc = count_from_eigenvalues(solved, axis_tol);
  cert.kappa_schur = sc.counts.n_plus;
  cert.axis_gap = sc.axis_gap;
}

}  // namespace

double ToleranceScale::absolute(double rel) const {
  return std::max(rel * graph_norm, 16.0 * std::numeric_limits<double>::epsilon() * a_norm);
}

ToleranceScale tolerance_scale(const SpectralMatrix& A_N) {
  ToleranceScale ts;
  const Eigen::VectorXd d4 = d_power_diagonal(A_N.N, 4.0);
  ts.graph_norm = spectral_norm(A_N.entries * d4.cwiseInverse().asDiagonal());
  ts.a_norm = spectral_norm(A_N.entries);
  return ts;
}

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::ConditionNotMet: return "ConditionNotMet";
    case CertStatus::SpectraTouchAxis: return "SpectraTouchAxis";
  }
  return "ConditionNotMet";
}

std::string spec_digest(const OperatorSpec& spec) {
  std::string text;
  append_poly(text, "a", spec.a);
  append_poly(text, "b", spec.b);
  append_poly(text, "c", spec.c);

  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream os;
  os << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(md[i]);
  return os.str();
}

int schur_count(const OperatorSpec& spec, int N, double axis_tol) {
  const SpectralMatrix A = assemble_A(spec, N);
  return instability_index_general(A.entries, tolerance_scale(A).absolute(axis_tol)).counts.n_plus;
}

Certificate certified_index(const OperatorSpec& spec, const CertifyOptions& opts) {
  Certificate cert;
  cert.spec_digest = spec_digest(spec);
  cert.M = constant_M(spec, opts.leibnitz ? *opts.leibnitz : leibnitz_constant());
  const double M = cert.M;
  const double growth = M * (1.0 + std::sqrt(1.0 + M));

  int N = std::max({opts.N_min, ceil_int(std::sqrt(2.0 * M)), spec.max_mode() + 4, 1});
  if (N > opts.max_N) N = std::max(opts.max_N, 1);

  std::optional<Attempt> last;
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    cert.N_history.push_back(N);
    const SpectralMatrix A = assemble_A(spec, N);
    const ToleranceScale ts = tolerance_scale(A);
    LyapunovSolution sol;
    try {
      sol = solve_finite_lyapunov(A, lyapunov_options(opts, ts));
    } catch (const NearSingularPencil& e) {
      cert.N_final = N;
      cert.status = CertStatus::SpectraTouchAxis;
      cert.mean_deflated = opts.deflate_mean && spec.conserves_mean();
      fill_schur(cert, e.eigenvalues(), ts.absolute(opts.axis_tol));
      cert.delta_N = M / (static_cast<double>(N) * N);
      return cert;
    }
    TailReport tail;
    try {
      tail = estimate_triple_U(sol, M);
    } catch (const DeltaTooLarge& e) {
      // Only reachable when max_N < sqrt(M); no finite bound on |||U|||.
      tail.N = N;
      tail.delta_N = e.delta();
      tail.lambda_max = lambda_max_statistic(sol);
      tail.tripleU_upper = std::numeric_limits<double>::infinity();
    }
    const double N2 = static_cast<double>(N) * N;
    const bool cond2 = N2 > growth * tail.tripleU_upper;
    last = Attempt{std::move(sol), tail, ts};
    if (cond2 || N >= opts.max_N) break;

    int next = ceil_int(1.1 * ceil_int(std::sqrt(growth * tail.tripleU_upper))) + 8;
    next = std::max(next, N + 1);
    N = std::min(next, opts.max_N);
  }

  const LyapunovSolution& sol = last->sol;
  const TailReport& tail = last->tail;
  const double N2 = static_cast<double>(sol.N) * sol.N;
  cert.N_final = sol.N;
  cert.delta_N = tail.delta_N;
  cert.tripleU_upper = tail.tripleU_upper;
  cert.lambda_max = tail.lambda_max;
  cert.c_N = 1.0 - M * M * tail.tripleU_upper / (N2 * N2);
  cert.cond1_ok = N2 > M * tail.tripleU_upper;
  cert.cond2_ok = N2 > growth * tail.tripleU_upper;
  cert.residual = sol.residual;
  cert.mean_deflated = sol.mean_deflated;

  fill_schur(cert, sol.eigenvalues, last->scale.absolute(opts.axis_tol));
  cert.kappa_lyapunov = inertia_hermitian(sol.U.entries).n_plus;

  if (opts.with_uinv) {
    const int N2x = 2 * sol.N;
    const SpectralMatrix A2 = assemble_A(spec, N2x);
    const LyapunovSolution big = solve_finite_lyapunov(A2, lyapunov_options(opts, tolerance_scale(A2)));
    const CMatrix Uinv = big.U.entries.inverse();
    const CMatrix block = hermitian_part(Uinv.block(N2x - sol.N, N2x - sol.N, 2 * sol.N + 1, 2 * sol.N + 1));
    cert.kappa_uinv = inertia_hermitian(block).n_plus;
  }

  const bool routes_agree = cert.kappa_schur == *cert.kappa_lyapunov && (!cert.kappa_uinv || *cert.kappa_uinv == cert.kappa_schur);
  cert.status = cert.cond2_ok && routes_agree ? CertStatus::Certified : CertStatus::ConditionNotMet;
  return cert;
}

CrossValidation cross_validate(const Certificate& cert, const OperatorSpec& spec, const CertifyOptions& opts) {
  CrossValidation cv;
  const int N = cert.N_final;
  cv.N = N;
  cv.kappa_N = schur_count(spec, N, opts.axis_tol);
  cv.kappa_2N = schur_count(spec, 2 * N, opts.axis_tol);
  cv.count_stable = cv.kappa_N == cv.kappa_2N;

  const SpectralMatrix A = assemble_A(spec, N);
  const SpectralMatrix A2 = assemble_A(spec, 2 * N);
  const LyapunovSolution sol = solve_finite_lyapunov(A, lyapunov_options(opts, tolerance_scale(A)));
  const LyapunovSolution big = solve_finite_lyapunov(A2, lyapunov_options(opts, tolerance_scale(A2)));
  const std::vector<int> idx = sol.active_indices();

  // D^2 P_N U P_N D^2 with U approximated by U_{2N}.
  const CMatrix Ublock = big.U.entries.block(N, N, 2 * N + 1, 2 * N + 1);
  const Eigen::VectorXd d2 = d_power_diagonal(N, 2.0);
  const CMatrix weighted = d2.asDiagonal() * Ublock * d2.asDiagonal();
  cv.inverse_norm = spectral_norm(weighted.inverse());
  cv.inverse_bound = cert.c_N > 0.0 ? 2.0 * (1.0 + cert.M) / cert.c_N : std::numeric_limits<double>::infinity();
  cv.inverse_ok = cert.c_N > 0.0 && cv.inverse_norm <= cv.inverse_bound;

  auto min_eig = [&](const CMatrix& U) {
    const CMatrix Asub = A.entries(idx, idx);
    const CMatrix Usub = U(idx, idx);
    const CMatrix L = hermitian_part(Asub.adjoint() * Usub + Usub * Asub);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(L, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  };
  cv.lyap_min_eig = min_eig(sol.U.entries);
  cv.lyap_min_eig_projected = min_eig(Ublock);
  cv.lyap_ok = cv.lyap_min_eig >= cert.c_N - 1e-6 && cv.lyap_min_eig_projected >= cert.c_N - 1e-6;
  return cv;
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["spec_digest"] = cert.spec_digest;
  j["M"] = cert.M;
  j["N_final"] = cert.N_final;
  j["delta_N"] = cert.delta_N;
  j["c_N"] = cert.c_N;
  j["tripleU_upper"] = cert.tripleU_upper;
  j["cond1_ok"] = cert.cond1_ok;
  j["cond2_ok"] = cert.cond2_ok;
  j["kappa_schur"] = cert.kappa_schur;
  j["kappa_lyapunov"] = cert.kappa_lyapunov ? nlohmann::ordered_json(*cert.kappa_lyapunov) : nlohmann::ordered_json(nullptr);
  j["kappa_uinv"] = cert.kappa_uinv ? nlohmann::ordered_json(*cert.kappa_uinv) : nlohmann::ordered_json(nullptr);
  j["residual"] = cert.residual;
  j["axis_gap"] = cert.axis_gap;
  j["status"] = to_string(cert.status);
  return j;
}

std::string certificate_json_text(const Certificate& cert) { return to_json(cert).dump(2) + "\n"; }

}  // namespace sik
