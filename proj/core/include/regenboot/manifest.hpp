// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace regenboot {

inline constexpr const char* kToolVersion = "0.1.0";

struct ManifestEntry {
  std::string path;  ///< relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

/// Provenance record of one CLI run. Timestamps live only here, never in
/// the data files.
struct RunManifest {
  std::uint64_t master_seed = 0;
  std::string experiment;
  /// Config snapshot as produced by config_to_json.
  std::string config_json;
  std::string tool_version = kToolVersion;
  std::string started_at;
  std::string finished_at;
  std::vector<ManifestEntry> outputs;
  /// Named derived seed roots, e.g. {"coverage": ...}.
  std::map<std::string, std::uint64_t> seed_roots;
  /// Free-form scalar results (KS distances, discard counts).
  std::map<std::string, double> results;
};

/// Lowercase hex SHA-256 of a file's bytes. Throws IoError.
std::string sha256_file(const std::filesystem::path& path);
std::string sha256_hex(std::string_view bytes);

/// Hashes `relative` under `out_dir` and appends it to the manifest.
void record_output(RunManifest& manifest, const std::filesystem::path& out_dir,
                   const std::string& relative);

/// UTC, ISO-8601 with second resolution.
std::string utc_timestamp();

std::string manifest_to_json(const RunManifest& manifest);

/// Writes through a temporary file and renames it into place.
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

}  // namespace regenboot
