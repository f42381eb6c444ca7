// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace regenboot {

/// Everything a run depends on. JSON keys match the field names, except
/// `scale` which is spelled "L_const".
struct ExperimentConfig {
  std::vector<std::size_t> n{1000, 10000, 100000};
  std::size_t chains = 500;
  std::size_t boot_reps = 500;
  std::size_t true_reps = 2000;
  double level = 0.95;
  double beta = 0.5;
  double scale = 0.70710678118654752440;
  std::uint64_t seed = 1;
  /// 0 means "not set": fall back to REGEN_BOOT_WORKERS, then hardware.
  std::size_t workers = 0;
  std::string functional = "inv_square";
  std::optional<double> theta;
  /// "rbb", "rgb" or "both".
  std::string method = "both";
  /// "original" or "resampled".
  std::string studentization = "original";
  int max_moment = 4;
  std::size_t anchor = 0;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Throws ConfigError naming the first invalid field.
void validate(const ExperimentConfig& cfg);

/// Parses a JSON object, filling defaults and rejecting unknown keys.
/// Syntax errors report the line number.
ExperimentConfig parse_config(std::string_view json_text);

ExperimentConfig load_config(const std::filesystem::path& path);

/// Pretty-printed JSON with every field, suitable for parse_config.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace regenboot
