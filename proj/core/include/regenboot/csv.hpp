// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace regenboot {

using CsvCell = std::variant<std::int64_t, double, std::string>;

/// Header plus rows, written RFC-4180 style with '\n' line endings.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;

  void add_row(std::vector<CsvCell> row);
};

/// 17 significant digits ("%.17g"), enough to round-trip every finite double.
std::string format_double(double x);

std::string to_csv_string(const CsvTable& table);

/// Throws IoError naming the path on failure.
void write_csv(const CsvTable& table, const std::filesystem::path& path);

/// Minimal RFC-4180 reader (quoted fields, doubled quotes). Returns all
/// records including the header.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

}  // namespace regenboot
