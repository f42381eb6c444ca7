// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/estimators.hpp"

#include <cmath>

#include "regenboot/error.hpp"

namespace regenboot {

namespace {

double mean_of(std::span<const double> xs) {
  double acc = 0.0;
  for (const double x : xs) acc += x;
  return acc / static_cast<double>(xs.size());
}

}  // namespace

double point_estimate(const BlockStatistics& stats) {
  if (stats.numreg() < 1) throw InsufficientBlocks(stats.numreg(), 1);
  return mean_of(stats.f_sums);
}

double variance_estimate_two_pass(std::span<const double> f_sums) {
  if (f_sums.size() < 2) throw InsufficientBlocks(f_sums.size(), 2);
  const double m = mean_of(f_sums);
  double acc = 0.0;
  for (const double x : f_sums) acc += (x - m) * (x - m);
  return acc / static_cast<double>(f_sums.size());
}

double variance_estimate_single_pass(std::span<const double> f_sums) {
  if (f_sums.size() < 2) throw InsufficientBlocks(f_sums.size(), 2);
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (const double x : f_sums) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
  }
  return m2 / static_cast<double>(k);
}

double variance_estimate(const BlockStatistics& stats) {
  return variance_estimate_two_pass(stats.f_sums);
}

double studentized_statistic(const BlockStatistics& stats, double theta) {
  const double g = point_estimate(stats);
  const double sigma = std::sqrt(variance_estimate(stats));
  if (!(sigma > 0.0)) throw ZeroVariance();
  return std::sqrt(static_cast<double>(stats.numreg())) * (g - theta) / sigma;
}

EstimateSummary summarize(const BlockStatistics& stats, std::optional<double> theta_hint) {
  if (stats.numreg() < 2) throw InsufficientBlocks(stats.numreg(), 2);
  return EstimateSummary{point_estimate(stats), std::sqrt(variance_estimate(stats)),
                         stats.numreg(), theta_hint};
}

double normalized_visit_count(const BlockDecomposition& decomp, double beta, double scale) {
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("beta must lie in (0, 1)");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("normalization constant must be positive");
  }
  if (decomp.horizon() == 0) throw InvalidArgument("normalized visit count needs n >= 1");
  const auto n = static_cast<double>(decomp.horizon());
  if (decomp.visit_count() == 0) return 0.0;
  return static_cast<double>(decomp.visit_count()) / occupation_scale(n, beta, scale);
}

}  // namespace regenboot
