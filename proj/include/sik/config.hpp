// JSON run configuration for the command-line tool.
//
//   {
//     "coefficients": {"benilov": {"alpha1": 0, "alpha2": 1, "alpha3": 0.02}},
//     "options": {"max_N": 2048, "with_uinv": false, "axis_tol": 1e-8},
//     "output": "cert.json"
//   }
//
// or "coefficients": {"fourier": {"a": [...], "b": [...], "c": [...]}} where
// each list holds entries for modes p >= 0 only, written as
// {"mode": p, "re": x, "im": y}, {"mode": p, "value": x} or [p, x, y].
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sik/certify.hpp"
#include "sik/operator.hpp"

namespace sik {

/// Invalid configuration; key() is the dotted path of the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct BenilovParams {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double alpha3 = 1.0;
};

struct SweepGrid {
  std::vector<double> alpha1;
  std::vector<double> alpha2;
  std::vector<double> alpha3;

  /// Cartesian product, alpha3 varying fastest.
  std::vector<BenilovParams> points() const;
};

struct RunConfig {
  std::optional<OperatorSpec> spec;
  std::optional<BenilovParams> benilov;
  CertifyOptions options;
  /// Truncation for the spectrum command.
  std::optional<int> spectrum_N;
  std::optional<std::string> output;
  std::optional<SweepGrid> sweep;
};

/// Value of SIK_LEIBNITZ_CONST if set; throws ConfigError when it is not a
/// positive number.
std::optional<double> leibnitz_from_env();

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

}  // namespace sik
