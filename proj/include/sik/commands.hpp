// Subcommands of the `sik` tool. Each returns the process exit code:
// 0 Certified / success, 1 configuration or I/O error, 2 ConditionNotMet,
// 3 SpectraTouchAxis.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sik/config.hpp"

namespace sik {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitConditionNotMet = 2;
inline constexpr int kExitSpectraTouchAxis = 3;

int exit_code(CertStatus s);

/// ceil(sqrt(M (1 + sqrt(1 + M)))), the truncation order below which the
/// spectrum of P_N A P_N is not expected to be trustworthy when |||U||| ~ 1.
int suggested_cutoff(double M);

struct SpectrumResult {
  int N = 0;
  double M = 0.0;
  int cutoff_N = 0;
  int unstable_count = 0;
  /// Sorted by decreasing real part, then decreasing imaginary part.
  std::vector<Complex> eigenvalues;
};

/// Eigenvalues of P_N A P_N. Without an explicit N the truncation is
/// max(2 cutoff_N, max_mode + 4, 8).
SpectrumResult compute_spectrum(const OperatorSpec& spec, std::optional<int> N, const CertifyOptions& opts);

struct SweepRow {
  BenilovParams alpha;
  std::optional<int> kappa;
  std::string status;
  std::optional<int> N_final;
};

/// Runs every grid point, at most `jobs` at a time; rows come back in grid
/// order. Failures are recorded in the status column.
std::vector<SweepRow> run_sweep(const SweepGrid& grid, const CertifyOptions& opts, int jobs);

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string spectrum_csv(const SpectrumResult& s);
std::string spectrum_sidecar_json(const SpectrumResult& s);
/// `out.csv` -> `out.json`; any other name gets `.json` appended.
std::string sidecar_path(const std::string& csv_path);

int cmd_index(const std::string& config_path, const std::optional<std::string>& out, std::ostream& log);
int cmd_spectrum(const std::string& config_path, const std::optional<std::string>& out, std::ostream& log);
int cmd_sweep(const std::string& config_path, const std::optional<std::string>& out, int jobs, std::ostream& log);
int cmd_validate(std::ostream& out);

}  // namespace sik
