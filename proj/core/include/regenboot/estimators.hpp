// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "regenboot/regeneration.hpp"

namespace regenboot {

/// Block mean G_n, spread sigma_hat and the number of complete blocks.
struct EstimateSummary {
  double g_n = 0.0;
  double sigma_hat = 0.0;
  std::size_t numreg = 0;
  std::optional<double> theta_hint;
};

/// G_n = (1/numreg) * sum_j f(B_j). Throws InsufficientBlocks if numreg = 0.
double point_estimate(const BlockStatistics& stats);

/// Population-divisor variance of the block sums (divisor numreg, not
/// numreg - 1), by two passes. Throws InsufficientBlocks if numreg < 2.
double variance_estimate(const BlockStatistics& stats);

/// Same quantity in one pass (Welford). Kept for cross-checking.
double variance_estimate_single_pass(std::span<const double> f_sums);
/// Two-pass reference over raw sums.
double variance_estimate_two_pass(std::span<const double> f_sums);

/// sqrt(numreg) * (G_n - theta) / sigma_hat. Throws ZeroVariance when all
/// block sums coincide.
double studentized_statistic(const BlockStatistics& stats, double theta);

/// Requires numreg >= 2.
EstimateSummary summarize(const BlockStatistics& stats,
                          std::optional<double> theta_hint = std::nullopt);

/// T(n) / (n^beta * scale).
double normalized_visit_count(const BlockDecomposition& decomp, double beta, double scale);

}  // namespace regenboot
