// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace regenboot {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitRuntimeError = 1,
  kExitUsage = 2,
};

/// Entry point of the `regenboot` command. `args` excludes the program name.
///
/// Subcommands: simulate, bootstrap, ecdf-compare, coverage, ml-moments,
/// selftest. Command-line flags override values from --config.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace regenboot
