#include "sik/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "sik/index.hpp"
#include "sik/linalg.hpp"
#include "sik/lyapunov.hpp"
#include "sik/norms.hpp"
#include "sik/numfmt.hpp"
#include "sik/oracle.hpp"

namespace sik {

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("--out", "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw ConfigError("--out", "write to '" + path + "' failed");
}

std::string resolve_out(const std::optional<std::string>& cli, const RunConfig& cfg) {
  if (cli) return *cli;
  if (cfg.output) return *cfg.output;
  throw ConfigError("output", "no output path (pass --out or set 'output')");
}

const OperatorSpec& require_spec(const RunConfig& cfg) {
  if (!cfg.spec) throw ConfigError("coefficients", "missing");
  return *cfg.spec;
}

std::string optional_int(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

int exit_code(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return kExitOk;
    case CertStatus::ConditionNotMet: return kExitConditionNotMet;
    case CertStatus::SpectraTouchAxis: return kExitSpectraTouchAxis;
  }
  return kExitConditionNotMet;
}

int suggested_cutoff(double M) { return static_cast<int>(std::ceil(std::sqrt(M * (1.0 + std::sqrt(1.0 + M))))); }

SpectrumResult compute_spectrum(const OperatorSpec& spec, std::optional<int> N, const CertifyOptions& opts) {
  SpectrumResult r;
  r.M = constant_M(spec, opts.leibnitz ? *opts.leibnitz : leibnitz_constant());
  r.cutoff_N = suggested_cutoff(r.M);
  r.N = N ? *N : std::max({2 * r.cutoff_N, spec.max_mode() + 4, 8});
  const SpectralMatrix A = assemble_A(spec, r.N);
  SpectralCount sc = instability_index_general(A.entries, tolerance_scale(A).absolute(opts.axis_tol));
  r.unstable_count = sc.counts.n_plus;
  r.eigenvalues = std::move(sc.eigenvalues);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
  return r;
}

std::vector<SweepRow> run_sweep(const SweepGrid& grid, const CertifyOptions& opts, int jobs) {
  const std::vector<BenilovParams> pts = grid.points();
  std::vector<SweepRow> rows(pts.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pts.size()) return;
      SweepRow& row = rows[i];
      row.alpha = pts[i];
      if (!(pts[i].alpha3 > 0.0)) {
        row.status = "config_error";
        continue;
      }
      try {
        const OperatorSpec spec = OperatorSpec::benilov(pts[i].alpha1, pts[i].alpha2, pts[i].alpha3);
        const Certificate cert = certified_index(spec, opts);
        row.kappa = cert.kappa();
        row.status = to_string(cert.status);
        row.N_final = cert.N_final;
      } catch (const std::exception&) {
        row.status = "error";
      }
    }
  };

  const int n_threads = std::max(1, std::min<int>(jobs, static_cast<int>(pts.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "alpha1,alpha2,alpha3,kappa,status,N_final\n";
  for (const SweepRow& r : rows) {
    out += format_double(r.alpha.alpha1) + ',' + format_double(r.alpha.alpha2) + ',' + format_double(r.alpha.alpha3) + ',';
    out += optional_int(r.kappa) + ',' + r.status + ',' + optional_int(r.N_final) + '\n';
  }
  return out;
}

std::string spectrum_csv(const SpectrumResult& s) {
  std::string out = "re,im\n";
  for (const Complex& z : s.eigenvalues) out += format_double(z.real()) + ',' + format_double(z.imag()) + '\n';
  return out;
}

std::string spectrum_sidecar_json(const SpectrumResult& s) {
  nlohmann::ordered_json j;
  j["N"] = s.N;
  j["M"] = s.M;
  j["cutoff_N"] = s.cutoff_N;
  j["cutoff_dimension"] = 2 * s.cutoff_N + 1;
  j["unstable_count"] = s.unstable_count;
  return j.dump(2) + "\n";
}

std::string sidecar_path(const std::string& csv_path) {
  const std::string ext = ".csv";
  if (csv_path.size() > ext.size() && csv_path.compare(csv_path.size() - ext.size(), ext.size(), ext) == 0)
    return csv_path.substr(0, csv_path.size() - ext.size()) + ".json";
  return csv_path + ".json";
}

int cmd_index(const std::string& config_path, const std::optional<std::string>& out, std::ostream& log) {
  try {
    const RunConfig cfg = load_config(config_path);
    const OperatorSpec& spec = require_spec(cfg);
    const std::string path = resolve_out(out, cfg);
    const Certificate cert = certified_index(spec, cfg.options);
    write_file(path, certificate_json_text(cert));
    log << to_string(cert.status) << ": kappa = " << cert.kappa() << " at N = " << cert.N_final << " (N tried:";
    for (int n : cert.N_history) log << ' ' << n;
    log << ")\n";
    return exit_code(cert.status);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_spectrum(const std::string& config_path, const std::optional<std::string>& out, std::ostream& log) {
  try {
    const RunConfig cfg = load_config(config_path);
    const OperatorSpec& spec = require_spec(cfg);
    const std::string path = resolve_out(out, cfg);
    const SpectrumResult s = compute_spectrum(spec, cfg.spectrum_N, cfg.options);
    write_file(path, spectrum_csv(s));
    write_file(sidecar_path(path), spectrum_sidecar_json(s));
    log << s.eigenvalues.size() << " eigenvalues at N = " << s.N << ", " << s.unstable_count << " with Re > 0\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_sweep(const std::string& config_path, const std::optional<std::string>& out, int jobs, std::ostream& log) {
  try {
    const RunConfig cfg = load_config(config_path);
    if (!cfg.sweep) throw ConfigError("sweep", "missing");
    const std::string path = resolve_out(out, cfg);
    const std::vector<SweepRow> rows = run_sweep(*cfg.sweep, cfg.options, jobs);
    write_file(path, sweep_csv(rows));
    log << rows.size() << " sweep rows written\n";
    return kExitOk;
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int cmd_validate(std::ostream& out) {
  bool all = true;
  auto report = [&](bool ok, const std::string& name, const std::string& detail) {
    out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    all = all && ok;
  };

  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    int agree = 0, total = 0;
    while (total < 20) {
      const double a = u(rng), b = u(rng), c = u(rng);
      const int N = 8;
      bool near_axis = false;
      for (int p = 0; p <= N; ++p) near_axis = near_axis || std::abs(-std::pow(p, 4) + a * p * p - c) < 1e-6;
      if (near_axis) continue;
      ++total;
      const SpectralMatrix A = assemble_A(OperatorSpec::constant(a, b, c), N);
      if (instability_index_general(A.entries).counts.n_plus == dispersion_index(a, b, c, N)) ++agree;
    }
    report(agree == total, "dispersion", std::to_string(agree) + "/" + std::to_string(total) + " Schur counts match");
  }
  {
    const double worst = kronecker_cross_check(50, 11);
    report(worst <= 1e-8, "kronecker", "max relative difference " + format_double(worst));
  }
  {
    const TausskyReport t = taussky_check(100, 2024);
    report(t.agreements == t.trials, "taussky", std::to_string(t.agreements) + "/" + std::to_string(t.trials) + " agreements");
  }
  {
    double worst = 0.0;
    std::string values;
    for (int N : {8, 32, 128}) {
      const double v = triple_norm(GreenKernel::build(N).kernel());
      worst = std::max(worst, std::abs(v - 1.0));
      values += (values.empty() ? "" : ", ") + format_double(v);
    }
    report(worst <= 1e-12, "tripleU0", "|||U0||| = " + values);
  }
  {
    const Inertia in = intro_lyapunov_inertia_extended();
    const bool ok = in.n_plus == 3 && in.n_minus == 0 && in.n_zero == 0;
    report(ok, "showcase", "extended-precision inertia (" + std::to_string(in.n_plus) + "," + std::to_string(in.n_minus) + "," +
                               std::to_string(in.n_zero) + ")");
  }
  return all ? kExitOk : kExitConfig;
}

}  // namespace sik
