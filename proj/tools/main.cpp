// mgp: batch front-end for the multifractional limit-process toolkit.
//
// usage: mgp <subcommand> <config.json> [--set path=value]... [--threads N]
//            [--out-dir DIR] [--dry-run]
//
// exit codes: 0 all checks pass, 1 some check failed, 2 configuration error,
//             3 numerical error (quadrature / factorization).

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mgp/errors.hpp"
#include "subcommands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"multifractional Gaussian process verification toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  int threads = -1;
  std::string out_dir;
  bool dry_run = false;

  for (const auto& name : mgp::cli::subcommand_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("config", config_path, "scenario configuration (JSON)")
        ->required();
    sub->add_option("--set", overrides,
                    "override a config value by dot path, e.g. --set quadrature.rel_tol=1e-6");
    sub->add_option("--threads", threads, "cap worker threads (0 = hardware)");
    sub->add_option("--out-dir", out_dir, "output directory override");
    sub->add_flag("--dry-run", dry_run, "validate config and print the plan only");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mgp::cli::kExitConfig;
  }

  const std::string sub = app.get_subcommands().front()->get_name();

  try {
    mgp::cli::ScenarioConfig cfg = mgp::cli::load_scenario(config_path, overrides);
    if (threads >= 0) cfg.threads = threads;
    mgp::cli::RunOptions opts;
    opts.dry_run = dry_run;
    if (!out_dir.empty()) {
      opts.output_dir_override = out_dir;
    } else if (const char* env = std::getenv("MGP_OUTPUT_DIR")) {
      opts.output_dir_override = env;
    }
    return mgp::cli::run_subcommand(sub, cfg, opts);
  } catch (const mgp::ConfigError& e) {
    std::fprintf(stderr, "error[config] %s\n", e.what());
    return mgp::cli::kExitConfig;
  } catch (const mgp::QuadratureError& e) {
    std::fprintf(stderr, "error[numeric] %s\n", e.what());
    return mgp::cli::kExitNumeric;
  } catch (const mgp::NotPsdError& e) {
    std::fprintf(stderr, "error[numeric] %s\n", e.what());
    return mgp::cli::kExitNumeric;
  } catch (const mgp::Error& e) {
    std::fprintf(stderr, "error[numeric] %s\n", e.what());
    return mgp::cli::kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error[internal] %s\n", e.what());
    return mgp::cli::kExitNumeric;
  }
}
