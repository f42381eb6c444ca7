// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace regenboot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer complete regeneration blocks than the estimator needs.
class InsufficientBlocks : public Error {
 public:
  InsufficientBlocks(std::size_t have, std::size_t need)
      : Error("insufficient regeneration blocks: have " + std::to_string(have) +
              ", need at least " + std::to_string(need)),
        have_(have),
        need_(need) {}

  std::size_t have() const noexcept { return have_; }
  std::size_t need() const noexcept { return need_; }

 private:
  std::size_t have_;
  std::size_t need_;
};

/// Block sums have zero spread, so studentization is undefined.
class ZeroVariance : public Error {
 public:
  ZeroVariance() : Error("block sums have zero variance; cannot studentize") {}
};

/// An RBB draw kept no complete block (the first drawn block alone exceeds n).
class DegenerateDraw : public Error {
 public:
  DegenerateDraw() : Error("degenerate bootstrap draw: no retained block") {}
};

/// Degenerate draws exceeded the redraw budget of a bootstrap distribution.
class TooManyDegenerate : public Error {
 public:
  explicit TooManyDegenerate(const std::string& what) : Error(what) {}
};

/// A parameter outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Configuration file could not be parsed or failed validation.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(what), field_(std::move(field)) {}

  /// Offending field name; empty for syntax errors.
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Filesystem failure, always carrying the offending path.
class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace regenboot
