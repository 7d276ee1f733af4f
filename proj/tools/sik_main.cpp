// sik: certified instability index of periodic fourth-order operators.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sik/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Certified instability index of -h'''' - (a h)'' + (b h)' - c h on the circle"};
  app.require_subcommand(1);

  std::string config;
  std::string out;
  int jobs = 1;

  auto* index = app.add_subcommand("index", "certify the index and write a certificate JSON");
  index->add_option("--config", config, "run configuration (JSON)")->required()->check(CLI::ExistingFile);
  index->add_option("--out", out, "certificate path (overrides 'output' in the config)");

  auto* spectrum = app.add_subcommand("spectrum", "write the eigenvalues of the truncated operator as CSV");
  spectrum->add_option("--config", config, "run configuration (JSON)")->required()->check(CLI::ExistingFile);
  spectrum->add_option("--out", out, "CSV path; a .json sidecar is written next to it");

  auto* sweep = app.add_subcommand("sweep", "certify every point of an alpha grid");
  sweep->add_option("--config", config, "run configuration with a 'sweep' grid (JSON)")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out, "CSV path");
  sweep->add_option("--jobs", jobs, "concurrent runs")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "run the built-in oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : sik::kExitConfig;
  }

  const std::optional<std::string> out_opt = out.empty() ? std::nullopt : std::optional<std::string>(out);
  try {
    if (*index) return sik::cmd_index(config, out_opt, std::cerr);
    if (*spectrum) return sik::cmd_spectrum(config, out_opt, std::cerr);
    if (*sweep) return sik::cmd_sweep(config, out_opt, jobs, std::cerr);
    if (*validate) return sik::cmd_validate(std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return sik::kExitConfig;
  }
  return sik::kExitConfig;
}
