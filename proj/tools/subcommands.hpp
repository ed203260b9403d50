#pragma once

#include <string>
#include <vector>

#include "scenario.hpp"

namespace mgp::cli {

// exit codes
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct RunOptions {
  bool dry_run = false;
  std::string output_dir_override;  // --out-dir / MGP_OUTPUT_DIR
};

const std::vector<std::string>& subcommand_names();

// Executes one subcommand on a resolved scenario; writes artifacts
// atomically under the output directory and returns an exit code.
int run_subcommand(const std::string& name, const ScenarioConfig& cfg,
                   const RunOptions& opts);

}  // namespace mgp::cli
