#include "sik/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace sik {

namespace {

using nlohmann::json;

double get_number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ConfigError(key, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(key, "expected a finite number");
  return v;
}

int get_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError(key, "expected an integer");
  return j.get<int>();
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key())) throw ConfigError(prefix + it.key(), "unknown key");
  }
}

TrigPoly parse_coeff_list(const json& list, const std::string& key) {
  if (!list.is_array()) throw ConfigError(key, "expected a list of coefficients");
  std::map<int, Complex> modes;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& e = list[i];
    const std::string ek = key + "[" + std::to_string(i) + "]";
    int mode = 0;
    double re = 0.0, im = 0.0;
    if (e.is_array()) {
      if (e.size() < 2 || e.size() > 3) throw ConfigError(ek, "expected [mode, re] or [mode, re, im]");
      mode = get_int(e[0], ek + "[0]");
      re = get_number(e[1], ek + "[1]");
      if (e.size() == 3) im = get_number(e[2], ek + "[2]");
    } else if (e.is_object()) {
      reject_unknown(e, {"mode", "re", "im", "value"}, ek + ".");
      if (!e.contains("mode")) throw ConfigError(ek + ".mode", "missing");
      mode = get_int(e["mode"], ek + ".mode");
      if (e.contains("value") && (e.contains("re") || e.contains("im")))
        throw ConfigError(ek + ".value", "give either value or re/im, not both");
      if (e.contains("value")) re = get_number(e["value"], ek + ".value");
      if (e.contains("re")) re = get_number(e["re"], ek + ".re");
      if (e.contains("im")) im = get_number(e["im"], ek + ".im");
    } else {
      throw ConfigError(ek, "expected an object or a list");
    }
    if (mode < 0) throw ConfigError(ek + ".mode", "modes must be >= 0; negative modes follow from conjugate symmetry");
    if (mode == 0 && im != 0.0) throw ConfigError(ek + ".im", "the mode-0 coefficient of a real function must be real");
    if (modes.count(mode)) throw ConfigError(ek + ".mode", "duplicate mode " + std::to_string(mode));
    modes[mode] = Complex(re, im);
  }
  const int m = modes.empty() ? 0 : modes.rbegin()->first;
  std::vector<Complex> nonneg(m + 1, Complex(0.0));
  for (const auto& [p, z] : modes) nonneg[p] = z;
  return TrigPoly::real_from_nonnegative(nonneg);
}

BenilovParams parse_benilov(const json& j) {
  const std::string prefix = "coefficients.benilov.";
  if (!j.is_object()) throw ConfigError("coefficients.benilov", "expected an object");
  reject_unknown(j, {"alpha1", "alpha2", "alpha3"}, prefix);
  BenilovParams bp;
  for (const char* name : {"alpha1", "alpha2", "alpha3"}) {
    if (!j.contains(name)) throw ConfigError(prefix + name, "missing");
  }
  bp.alpha1 = get_number(j["alpha1"], prefix + "alpha1");
  bp.alpha2 = get_number(j["alpha2"], prefix + "alpha2");
  bp.alpha3 = get_number(j["alpha3"], prefix + "alpha3");
  if (!(bp.alpha3 > 0.0)) throw ConfigError(prefix + "alpha3", "must be > 0");
  return bp;
}

std::vector<double> parse_axis(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_number()) {
    out.push_back(get_number(j, key));
    return out;
  }
  if (!j.is_array()) throw ConfigError(key, "expected a number or a list of numbers");
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(get_number(j[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

void parse_options(const json& j, RunConfig& cfg) {
  if (!j.is_object()) throw ConfigError("options", "expected an object");
  reject_unknown(j, {"max_N", "N_min", "N", "with_uinv", "pencil_tol", "axis_tol", "leibnitz", "max_iterations", "deflate_mean"},
                 "options.");
  CertifyOptions& o = cfg.options;
  if (j.contains("max_N")) {
    o.max_N = get_int(j["max_N"], "options.max_N");
    if (o.max_N < 1) throw ConfigError("options.max_N", "must be >= 1");
  }
  if (j.contains("N_min")) {
    o.N_min = get_int(j["N_min"], "options.N_min");
    if (o.N_min < 1) throw ConfigError("options.N_min", "must be >= 1");
  }
  if (j.contains("N")) {
    cfg.spectrum_N = get_int(j["N"], "options.N");
    if (*cfg.spectrum_N < 0) throw ConfigError("options.N", "must be >= 0");
  }
  if (j.contains("with_uinv")) {
    if (!j["with_uinv"].is_boolean()) throw ConfigError("options.with_uinv", "expected true or false");
    o.with_uinv = j["with_uinv"].get<bool>();
  }
  if (j.contains("deflate_mean")) {
    if (!j["deflate_mean"].is_boolean()) throw ConfigError("options.deflate_mean", "expected true or false");
    o.deflate_mean = j["deflate_mean"].get<bool>();
  }
  if (j.contains("pencil_tol")) {
    o.pencil_tol = get_number(j["pencil_tol"], "options.pencil_tol");
    if (!(o.pencil_tol >= 0.0)) throw ConfigError("options.pencil_tol", "must be >= 0");
  }
  if (j.contains("axis_tol")) {
    o.axis_tol = get_number(j["axis_tol"], "options.axis_tol");
    if (!(o.axis_tol >= 0.0)) throw ConfigError("options.axis_tol", "must be >= 0");
  }
  if (j.contains("leibnitz")) {
    const double c = get_number(j["leibnitz"], "options.leibnitz");
    if (!(c > 0.0)) throw ConfigError("options.leibnitz", "must be > 0");
    o.leibnitz = c;
  }
  if (j.contains("max_iterations")) {
    o.max_iterations = get_int(j["max_iterations"], "options.max_iterations");
    if (o.max_iterations < 1) throw ConfigError("options.max_iterations", "must be >= 1");
  }
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error("config error at '" + key + "': " + message), key_(std::move(key)) {}

std::vector<BenilovParams> SweepGrid::points() const {
  std::vector<BenilovParams> pts;
  pts.reserve(alpha1.size() * alpha2.size() * alpha3.size());
  for (double a1 : alpha1)
    for (double a2 : alpha2)
      for (double a3 : alpha3) pts.push_back(BenilovParams{a1, a2, a3});
  return pts;
}

std::optional<double> leibnitz_from_env() {
  const char* raw = std::getenv("SIK_LEIBNITZ_CONST");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw ConfigError("SIK_LEIBNITZ_CONST", std::string("expected a positive number, got '") + raw + "'");
  return v;
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("<root>", "expected a JSON object");
  reject_unknown(j, {"coefficients", "options", "output", "sweep"}, "");
  RunConfig cfg;

  if (j.contains("options")) parse_options(j["options"], cfg);
  if (!cfg.options.leibnitz) cfg.options.leibnitz = leibnitz_from_env();

  if (j.contains("output")) {
    if (!j["output"].is_string()) throw ConfigError("output", "expected a path string");
    cfg.output = j["output"].get<std::string>();
  }

  if (j.contains("coefficients")) {
    const json& c = j["coefficients"];
    if (!c.is_object()) throw ConfigError("coefficients", "expected an object");
    reject_unknown(c, {"benilov", "fourier"}, "coefficients.");
    const bool has_b = c.contains("benilov"), has_f = c.contains("fourier");
    if (has_b == has_f) throw ConfigError("coefficients", "exactly one of 'benilov' or 'fourier' is required");
    if (has_b) {
      cfg.benilov = parse_benilov(c["benilov"]);
      cfg.spec = OperatorSpec::benilov(cfg.benilov->alpha1, cfg.benilov->alpha2, cfg.benilov->alpha3);
    } else {
      const json& f = c["fourier"];
      if (!f.is_object()) throw ConfigError("coefficients.fourier", "expected an object");
      reject_unknown(f, {"a", "b", "c"}, "coefficients.fourier.");
      TrigPoly a, b, cc;
      if (f.contains("a")) a = parse_coeff_list(f["a"], "coefficients.fourier.a");
      if (f.contains("b")) b = parse_coeff_list(f["b"], "coefficients.fourier.b");
      if (f.contains("c")) cc = parse_coeff_list(f["c"], "coefficients.fourier.c");
      cfg.spec = OperatorSpec(a, b, cc);
    }
  }

  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    if (!s.is_object()) throw ConfigError("sweep", "expected an object");
    reject_unknown(s, {"alpha1", "alpha2", "alpha3"}, "sweep.");
    SweepGrid grid;
    for (const char* name : {"alpha1", "alpha2", "alpha3"}) {
      if (!s.contains(name)) throw ConfigError(std::string("sweep.") + name, "missing");
    }
    grid.alpha1 = parse_axis(s["alpha1"], "sweep.alpha1");
    grid.alpha2 = parse_axis(s["alpha2"], "sweep.alpha2");
    grid.alpha3 = parse_axis(s["alpha3"], "sweep.alpha3");
    cfg.sweep = std::move(grid);
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", std::string("invalid JSON: ") + e.what());
  }
  return parse_config(j);
}

}  // namespace sik
