// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regenboot/distribution.hpp"
#include "regenboot/error.hpp"
#include "regenboot/parallel.hpp"

namespace regenboot {

std::string_view to_string(BootstrapMethod method) noexcept {
  return method == BootstrapMethod::rbb ? "rbb" : "rgb";
}

BootstrapMethod parse_bootstrap_method(std::string_view name) {
  if (name == "rbb") return BootstrapMethod::rbb;
  if (name == "rgb") return BootstrapMethod::rgb;
  throw InvalidArgument("unknown bootstrap method '" + std::string(name) + "'");
}

std::size_t BootstrapSample::retained_length(const BlockStatistics& stats) const noexcept {
  std::size_t total = 0;
  const std::size_t k = retained();
  for (std::size_t i = 0; i < k; ++i) total += stats.lengths[indices[i]];
  return total;
}

namespace {

void require_blocks(const BlockStatistics& stats) {
  if (stats.numreg() < 1) throw InsufficientBlocks(stats.numreg(), 1);
  if (stats.lengths.size() != stats.numreg()) {
    throw InvalidArgument("block statistics: sums and lengths differ in size");
  }
}

// Returns false when the draw retained no block.
bool draw_rbb_into(const BlockStatistics& stats, std::size_t n, RandomStream& rng,
                   BootstrapSample& out) {
  out.method = BootstrapMethod::rbb;
  out.indices.clear();
  out.total_length = 0;
  const std::uint64_t m = stats.numreg();
  // Lengths are >= 1, so this stops after at most n + 1 draws.
  while (out.total_length <= n) {
    const auto idx = static_cast<std::uint32_t>(rng.uniform_below(m));
    out.indices.push_back(idx);
    out.total_length += stats.lengths[idx];
  }
  return out.indices.size() > 1;
}

void draw_rgb_into(const BlockStatistics& stats, RandomStream& rng, BootstrapSample& out) {
  out.method = BootstrapMethod::rgb;
  const std::uint64_t m = stats.numreg();
  out.indices.resize(m);
  out.total_length = 0;
  for (auto& idx : out.indices) {
    idx = static_cast<std::uint32_t>(rng.uniform_below(m));
    out.total_length += stats.lengths[idx];
  }
}

struct ReplicateOutcome {
  double statistic = 0.0;
  std::size_t count = 0;
  std::size_t degenerate = 0;
};

}  // namespace

BootstrapSample rbb_draw(const BlockStatistics& stats, std::size_t n, RandomStream& rng) {
  require_blocks(stats);
  BootstrapSample out;
  if (!draw_rbb_into(stats, n, rng, out)) throw DegenerateDraw();
  return out;
}

BootstrapSample rgb_draw(const BlockStatistics& stats, RandomStream& rng) {
  require_blocks(stats);
  BootstrapSample out;
  draw_rgb_into(stats, rng, out);
  return out;
}

double bootstrap_statistic(const BootstrapSample& sample, const BlockStatistics& stats,
                           Studentization studentization) {
  return bootstrap_statistic(sample, stats, summarize(stats), studentization);
}

double bootstrap_statistic(const BootstrapSample& sample, const BlockStatistics& stats,
                           const EstimateSummary& original, Studentization studentization) {
  const std::size_t count = sample.retained();
  if (count == 0) throw DegenerateDraw();

  double acc = 0.0;
  for (std::size_t i = 0; i < count; ++i) acc += stats.f_sums[sample.indices[i]];
  const double g_star = acc / static_cast<double>(count);

  double spread = original.sigma_hat;
  if (studentization == Studentization::resampled) {
    if (count < 2) throw ZeroVariance();
    double ss = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double d = stats.f_sums[sample.indices[i]] - g_star;
      ss += d * d;
    }
    spread = std::sqrt(ss / static_cast<double>(count));
  }
  if (!(spread > 0.0)) throw ZeroVariance();
  return std::sqrt(static_cast<double>(count)) * (g_star - original.g_n) / spread;
}

BootstrapDistribution bootstrap_distribution(const BlockStatistics& stats, std::size_t n,
                                             std::size_t replicates, BootstrapMethod method,
                                             std::uint64_t seed, const BootstrapOptions& options) {
  if (replicates < 1) throw InvalidArgument("bootstrap needs at least one replicate");
  require_blocks(stats);
  const EstimateSummary original = summarize(stats);
  const bool point_mass = !(original.sigma_hat > 0.0);

  std::vector<ReplicateOutcome> outcomes(replicates);
  parallel_for(replicates, options.workers, [&](std::size_t r) {
    RandomStream rng(derive_stream(seed, "boot", r));
    BootstrapSample sample;
    ReplicateOutcome& out = outcomes[r];
    for (;;) {
      bool ok = true;
      if (method == BootstrapMethod::rbb) {
        ok = draw_rbb_into(stats, n, rng, sample);
      } else {
        draw_rgb_into(stats, rng, sample);
      }
      if (ok) {
        if (point_mass) {
          out.statistic = 0.0;
          out.count = sample.retained();
          return;
        }
        try {
          out.statistic = bootstrap_statistic(sample, stats, original, options.studentization);
          out.count = sample.retained();
          return;
        } catch (const ZeroVariance&) {
          // only reachable with resampled studentization
        }
      }
      if (++out.degenerate >= options.max_consecutive_degenerate) {
        throw TooManyDegenerate("replicate " + std::to_string(r) + " hit " +
                                std::to_string(out.degenerate) +
                                " consecutive degenerate draws");
      }
    }
  });

  BootstrapDistribution dist;
  dist.method = method;
  dist.seed = seed;
  dist.replicates.reserve(replicates);
  dist.values.reserve(replicates);
  for (const auto& o : outcomes) {
    dist.replicates.push_back({o.statistic, o.count});
    dist.values.push_back(o.statistic);
    dist.degenerate_draws += o.degenerate;
  }
  if (static_cast<double>(dist.degenerate_draws) >
      options.max_degenerate_fraction * static_cast<double>(replicates)) {
    throw TooManyDegenerate(std::to_string(dist.degenerate_draws) + " degenerate draws over " +
                            std::to_string(replicates) + " replicates");
  }
  std::sort(dist.values.begin(), dist.values.end());
  return dist;
}

double quantile_sorted(std::span<const double> sorted, double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("quantile level must lie in (0, 1)");
  if (sorted.empty()) throw InvalidArgument("quantile of an empty distribution");
  const auto b = static_cast<double>(sorted.size());
  double x = p * b;
  // Snap products such as 0.025 * 1000 that miss an integer by rounding.
  const double nearest = std::round(x);
  if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) x = nearest;
  const auto k = std::clamp<double>(std::ceil(x), 1.0, b);
  return sorted[static_cast<std::size_t>(k) - 1];
}

double quantile(const BootstrapDistribution& dist, double p) {
  return quantile_sorted(dist.values, p);
}

namespace {

void check_interval_inputs(double level, std::size_t numreg) {
  if (!(level > 0.0 && level < 1.0)) throw InvalidArgument("confidence level must lie in (0, 1)");
  if (numreg < 1) throw InsufficientBlocks(numreg, 1);
}

}  // namespace

ConfidenceInterval confidence_interval(double g_n, double sigma_hat, std::size_t numreg,
                                       const BootstrapDistribution& dist, double level) {
  check_interval_inputs(level, numreg);
  const double alpha = 1.0 - level;
  const double s = sigma_hat / std::sqrt(static_cast<double>(numreg));
  const double q_hi = quantile(dist, 1.0 - alpha / 2.0);
  const double q_lo = quantile(dist, alpha / 2.0);
  return {g_n - s * q_hi, g_n - s * q_lo, level};
}

ConfidenceInterval normal_confidence_interval(double g_n, double sigma_hat, std::size_t numreg,
                                              double level) {
  check_interval_inputs(level, numreg);
  const double z = normal_quantile(1.0 - (1.0 - level) / 2.0);
  const double half = z * sigma_hat / std::sqrt(static_cast<double>(numreg));
  return {g_n - half, g_n + half, level};
}

}  // namespace regenboot
