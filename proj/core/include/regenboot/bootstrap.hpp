// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "regenboot/estimators.hpp"
#include "regenboot/random.hpp"
#include "regenboot/regeneration.hpp"

namespace regenboot {

/// RBB draws blocks until the rebuilt series is longer than n; RGB draws
/// exactly numreg blocks.
enum class BootstrapMethod { rbb, rgb };

std::string_view to_string(BootstrapMethod method) noexcept;
/// Accepts "rbb" or "rgb"; throws InvalidArgument otherwise.
BootstrapMethod parse_bootstrap_method(std::string_view name);

/// Which spread studentizes a bootstrap replicate.
enum class Studentization {
  original,   ///< sigma_hat of the observed blocks (default)
  resampled,  ///< sigma_hat* of the retained resampled blocks
};

/// One resampled block sequence, stored as 0-based block indices.
///
/// For RBB `indices` holds every draw including the one that pushed the
/// cumulative length past n; only the first k_star - 1 are retained.
struct BootstrapSample {
  BootstrapMethod method = BootstrapMethod::rbb;
  std::vector<std::uint32_t> indices;
  std::size_t total_length = 0;

  std::size_t k_star() const noexcept { return indices.size(); }
  std::size_t retained() const noexcept {
    if (method == BootstrapMethod::rgb) return indices.size();
    return indices.empty() ? 0 : indices.size() - 1;
  }
  /// Sum of lengths over the retained blocks.
  std::size_t retained_length(const BlockStatistics& stats) const noexcept;
};

/// Uniform draws with replacement until the cumulative length exceeds n
/// (strictly). Throws DegenerateDraw when no block is retained.
BootstrapSample rbb_draw(const BlockStatistics& stats, std::size_t n, RandomStream& rng);

/// Exactly numreg uniform draws with replacement.
BootstrapSample rgb_draw(const BlockStatistics& stats, RandomStream& rng);

/// sqrt(count) * (G* - G_n) / spread, with count = T*~ (RBB) or numreg (RGB).
double bootstrap_statistic(const BootstrapSample& sample, const BlockStatistics& stats,
                           Studentization studentization = Studentization::original);

/// Same, reusing a precomputed summary of the original blocks.
double bootstrap_statistic(const BootstrapSample& sample, const BlockStatistics& stats,
                           const EstimateSummary& original,
                           Studentization studentization = Studentization::original);

struct BootstrapReplicate {
  double statistic = 0.0;
  /// Blocks entering the statistic (T*~ for RBB, numreg for RGB).
  std::size_t count = 0;
};

struct BootstrapDistribution {
  BootstrapMethod method = BootstrapMethod::rbb;
  /// Replicate statistics, sorted ascending.
  std::vector<double> values;
  /// The same replicates in replicate order.
  std::vector<BootstrapReplicate> replicates;
  std::uint64_t seed = 0;
  std::size_t degenerate_draws = 0;

  std::size_t size() const noexcept { return values.size(); }
};

struct BootstrapOptions {
  Studentization studentization = Studentization::original;
  std::size_t workers = 1;
  /// A single replicate failing this many times in a row aborts the run.
  std::size_t max_consecutive_degenerate = 100;
  /// Total degenerate draws above this fraction of B abort the run.
  double max_degenerate_fraction = 0.01;
};

/// B replicate statistics. Replicate r draws from
/// derive_stream(seed, "boot", r), so the result is independent of the
/// worker count. Degenerate draws are redrawn from the same stream and
/// counted. When the observed block sums all coincide every replicate
/// statistic is 0 (the resampling law is a point mass at G_n).
BootstrapDistribution bootstrap_distribution(const BlockStatistics& stats, std::size_t n,
                                             std::size_t replicates, BootstrapMethod method,
                                             std::uint64_t seed,
                                             const BootstrapOptions& options = {});

/// Order-statistic quantile values[ceil(p * B) - 1], for 0 < p < 1.
double quantile(const BootstrapDistribution& dist, double p);
double quantile_sorted(std::span<const double> sorted, double p);

struct ConfidenceInterval {
  double lo = 0.0;
  double hi = 0.0;
  double level = 0.0;

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

/// [G_n - s q(1 - a/2), G_n - s q(a/2)] with s = sigma_hat / sqrt(numreg)
/// and a = 1 - level. The upper end uses the lower quantile.
ConfidenceInterval confidence_interval(double g_n, double sigma_hat, std::size_t numreg,
                                       const BootstrapDistribution& dist, double level);

/// G_n -/+ z_{1 - a/2} sigma_hat / sqrt(numreg).
ConfidenceInterval normal_confidence_interval(double g_n, double sigma_hat, std::size_t numreg,
                                              double level);

}  // namespace regenboot
