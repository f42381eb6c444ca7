// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "regenboot/error.hpp"
#include "regenboot/estimators.hpp"
#include "regenboot/parallel.hpp"

namespace regenboot {

double StudySetup::theta() const {
  if (!functional.theta) {
    throw InvalidArgument("functional '" + functional.name + "' has no known target; supply theta");
  }
  return *functional.theta;
}

Trajectory simulate(const StudySetup& setup, std::size_t n, RandomStream& rng) {
  if (setup.model) return simulate_chain(*setup.model, n, rng);
  return simulate_ssrw(n, rng);
}

namespace {

struct ReducedChain {
  bool kept = false;
  ChainRecord record;
};

ReducedChain reduce_chain(const StudySetup& setup, std::size_t n, StreamKey key, double theta,
                          double beta, double scale) {
  RandomStream rng(key);
  const Trajectory traj = simulate(setup, n, rng);
  const BlockDecomposition decomp = decompose(traj, setup.atom);
  ReducedChain out;
  out.record.numreg = decomp.numreg();
  out.record.normalized_visits = normalized_visit_count(decomp, beta, scale);
  if (decomp.numreg() < 2) return out;
  const BlockStatistics stats = block_functional(traj, decomp, setup.functional.f);
  const EstimateSummary summary = summarize(stats);
  if (!(summary.sigma_hat > 0.0)) return out;
  out.kept = true;
  out.record.g_n = summary.g_n;
  out.record.sigma_hat = summary.sigma_hat;
  out.record.l_n =
      std::sqrt(static_cast<double>(summary.numreg)) * (summary.g_n - theta) / summary.sigma_hat;
  return out;
}

}  // namespace

TrueDistributionSample true_distribution_mc(std::size_t n, std::size_t reps, std::uint64_t seed,
                                            const StudySetup& setup, double beta, double scale) {
  if (reps < 1) throw InvalidArgument("true distribution needs at least one chain");
  if (n < 1) throw InvalidArgument("true distribution needs n >= 1");
  const double theta = setup.theta();
  const std::uint64_t root = derive_seed(seed, "n", n);

  std::vector<ReducedChain> reduced(reps);
  parallel_for(reps, setup.workers, [&](std::size_t c) {
    reduced[c] = reduce_chain(setup, n, derive_stream(root, "chain", c), theta, beta, scale);
  });

  TrueDistributionSample out;
  out.values.reserve(reps);
  out.chains.reserve(reps);
  for (const auto& r : reduced) {
    if (!r.kept) {
      ++out.discarded;
      continue;
    }
    out.values.push_back(r.record.l_n);
    out.chains.push_back(r.record);
  }
  return out;
}

EcdfTable make_ecdf_table(const Ecdf& truth, const Ecdf& rbb, const Ecdf& rgb) {
  std::vector<double> jumps;
  jumps.reserve(truth.size() + rbb.size() + rgb.size());
  for (const Ecdf* e : {&truth, &rbb, &rgb}) {
    jumps.insert(jumps.end(), e->sorted().begin(), e->sorted().end());
  }
  std::sort(jumps.begin(), jumps.end());
  jumps.erase(std::unique(jumps.begin(), jumps.end()), jumps.end());

  std::vector<double> grid;
  if (jumps.size() <= kMaxEcdfGrid - 1) {
    grid = jumps;
  } else {
    const std::size_t keep = kMaxEcdfGrid - 1;
    grid.reserve(keep + 1);
    for (std::size_t i = 0; i < keep; ++i) {
      grid.push_back(jumps[i * (jumps.size() - 1) / (keep - 1)]);
    }
  }
  if (!std::binary_search(grid.begin(), grid.end(), 0.0)) {
    grid.insert(std::lower_bound(grid.begin(), grid.end(), 0.0), 0.0);
  }

  EcdfTable t;
  t.x = grid;
  for (const double x : grid) {
    t.f_true.push_back(truth(x));
    t.f_rbb.push_back(rbb(x));
    t.f_rgb.push_back(rgb(x));
    t.f_normal.push_back(normal_cdf(x));
  }
  const std::function<double(double)> phi = normal_cdf;
  t.ks_rbb_true = ks_distance(rbb, truth);
  t.ks_rgb_true = ks_distance(rgb, truth);
  t.ks_rbb_normal = ks_distance(rbb, phi);
  t.ks_rgb_normal = ks_distance(rgb, phi);
  t.ks_true_normal = ks_distance(truth, phi);
  return t;
}

CdfComparison compare_anchor_with_truth(std::size_t n, std::size_t replicates, const Ecdf& truth,
                                        std::uint64_t seed, std::size_t anchor_index,
                                        const StudySetup& setup) {
  const std::uint64_t root = derive_seed(seed, "n", n);
  const StreamKey key = derive_stream(root, "anchor", anchor_index);
  RandomStream rng(key);
  Trajectory anchor = simulate(setup, n, rng);
  BlockDecomposition decomp = decompose(anchor, setup.atom);
  if (decomp.numreg() < 2) throw InsufficientBlocks(decomp.numreg(), 2);
  const BlockStatistics stats = block_functional(anchor, decomp, setup.functional.f);

  BootstrapOptions options;
  options.studentization = setup.studentization;
  options.workers = setup.workers;
  BootstrapDistribution rbb = bootstrap_distribution(
      stats, n, replicates, BootstrapMethod::rbb, derive_seed(key.material(), "rbb", 0), options);
  BootstrapDistribution rgb = bootstrap_distribution(
      stats, n, replicates, BootstrapMethod::rgb, derive_seed(key.material(), "rgb", 0), options);

  EcdfTable table = make_ecdf_table(truth, Ecdf(rbb.values), Ecdf(rgb.values));
  return CdfComparison{std::move(table), std::move(anchor), std::move(decomp), std::move(rbb),
                       std::move(rgb), 0};
}

CdfComparison cdf_comparison(std::size_t n, std::size_t replicates, std::size_t true_reps,
                             std::uint64_t seed, std::size_t anchor_index,
                             const StudySetup& setup) {
  const TrueDistributionSample truth =
      true_distribution_mc(n, true_reps, derive_seed(seed, "truth", 0), setup);
  CdfComparison out =
      compare_anchor_with_truth(n, replicates, Ecdf(truth.values), seed, anchor_index, setup);
  out.true_discarded = truth.discarded;
  return out;
}

IntervalMethod bootstrap_interval_method(BootstrapMethod method, std::size_t replicates,
                                         Studentization studentization) {
  return IntervalMethod{
      std::string(to_string(method)),
      [=](const BlockStatistics& stats, const EstimateSummary& summary, std::uint64_t chain_seed,
          double level) {
        BootstrapOptions options;
        options.studentization = studentization;
        const BootstrapDistribution dist =
            bootstrap_distribution(stats, stats.horizon, replicates, method,
                                   derive_seed(chain_seed, to_string(method), 0), options);
        return IntervalOutcome{
            confidence_interval(summary.g_n, summary.sigma_hat, summary.numreg, dist, level),
            dist.degenerate_draws};
      }};
}

IntervalMethod normal_interval_method() {
  return IntervalMethod{"normal", [](const BlockStatistics&, const EstimateSummary& summary,
                                     std::uint64_t, double level) {
                          return IntervalOutcome{normal_confidence_interval(
                              summary.g_n, summary.sigma_hat, summary.numreg, level)};
                        }};
}

const CoverageRow& CoverageReport::at(std::size_t n, std::string_view method) const {
  for (const auto& row : rows) {
    if (row.n == n && row.method == method) return row;
  }
  throw InvalidArgument("no coverage row for n=" + std::to_string(n) + " method " +
                        std::string(method));
}

CoverageReport coverage_experiment(const std::vector<std::size_t>& n_list, std::size_t chains,
                                   double level, std::uint64_t seed,
                                   const std::vector<IntervalMethod>& methods,
                                   const StudySetup& setup) {
  if (chains < 1) throw InvalidArgument("coverage needs at least one chain");
  if (!(level > 0.0 && level < 1.0)) throw InvalidArgument("confidence level must lie in (0, 1)");
  const double theta = setup.theta();
  const std::size_t k = methods.size();

  struct ChainResult {
    bool excluded = true;
    std::vector<char> covered;
    std::vector<double> length;
    std::vector<std::size_t> degenerate;
  };

  CoverageReport report;
  for (const std::size_t n : n_list) {
    if (n < 1) throw InvalidArgument("coverage needs n >= 1");
    const std::uint64_t root = derive_seed(seed, "n", n);
    std::vector<ChainResult> results(chains);
    parallel_for(chains, setup.workers, [&](std::size_t c) {
      const StreamKey key = derive_stream(root, "chain", c);
      RandomStream rng(key);
      const Trajectory traj = simulate(setup, n, rng);
      const BlockDecomposition decomp = decompose(traj, setup.atom);
      if (decomp.numreg() < 2) return;
      const BlockStatistics stats = block_functional(traj, decomp, setup.functional.f);
      const EstimateSummary summary = summarize(stats);
      ChainResult& r = results[c];
      r.excluded = false;
      r.covered.resize(k);
      r.length.resize(k);
      r.degenerate.resize(k);
      for (std::size_t m = 0; m < k; ++m) {
        const IntervalOutcome o = methods[m].build(stats, summary, key.material(), level);
        r.covered[m] = o.interval.contains(theta) ? 1 : 0;
        r.length[m] = o.interval.length();
        r.degenerate[m] = o.degenerate_draws;
      }
    });

    std::size_t excluded = 0;
    for (const auto& r : results) excluded += r.excluded ? 1 : 0;
    const std::size_t used = chains - excluded;
    for (std::size_t m = 0; m < k; ++m) {
      CoverageRow row;
      row.n = n;
      row.method = methods[m].name;
      row.level = level;
      row.chains = chains;
      row.excluded = excluded;
      std::size_t hits = 0;
      double total_length = 0.0;
      for (const auto& r : results) {
        if (r.excluded) continue;
        hits += static_cast<std::size_t>(r.covered[m]);
        total_length += r.length[m];
        row.degenerate_draws += r.degenerate[m];
      }
      if (used > 0) {
        row.coverage = static_cast<double>(hits) / static_cast<double>(used);
        row.avg_length = total_length / static_cast<double>(used);
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

CoverageReport coverage_experiment(const std::vector<std::size_t>& n_list, std::size_t chains,
                                   std::size_t replicates, double level, std::uint64_t seed,
                                   const StudySetup& setup) {
  const std::vector<IntervalMethod> methods{
      bootstrap_interval_method(BootstrapMethod::rbb, replicates, setup.studentization),
      bootstrap_interval_method(BootstrapMethod::rgb, replicates, setup.studentization),
      normal_interval_method()};
  return coverage_experiment(n_list, chains, level, seed, methods, setup);
}

double mittag_leffler_moment(int m, double beta) {
  if (m < 0) throw InvalidArgument("moment order must be non-negative");
  return std::tgamma(static_cast<double>(m) + 1.0) /
         std::tgamma(1.0 + static_cast<double>(m) * beta);
}

std::vector<MomentRow> ml_moment_diagnostic(std::size_t n, std::size_t reps, int max_moment,
                                            double beta, double scale, std::uint64_t seed,
                                            const StudySetup& setup) {
  if (max_moment < 0 || max_moment > 4) throw InvalidArgument("max_moment must lie in [0, 4]");
  if (reps < 2) throw InvalidArgument("moment diagnostic needs at least two chains");
  if (n < 1) throw InvalidArgument("moment diagnostic needs n >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("beta must lie in (0, 1)");
  if (!(scale > 0.0)) throw InvalidArgument("normalization constant must be positive");

  const std::uint64_t root = derive_seed(seed, "n", n);
  std::vector<double> x(reps);
  parallel_for(reps, setup.workers, [&](std::size_t c) {
    RandomStream rng(derive_stream(root, "chain", c));
    const Trajectory traj = simulate(setup, n, rng);
    x[c] = normalized_visit_count(decompose(traj, setup.atom), beta, scale);
  });

  std::vector<MomentRow> rows;
  const auto r = static_cast<double>(reps);
  for (int m = 0; m <= max_moment; ++m) {
    double sum = 0.0;
    for (const double v : x) sum += std::pow(v, m);
    const double mean = sum / r;
    double ss = 0.0;
    for (const double v : x) ss += (std::pow(v, m) - mean) * (std::pow(v, m) - mean);
    rows.push_back({m, mean, mittag_leffler_moment(m, beta), std::sqrt(ss / (r - 1.0) / r)});
  }
  return rows;
}

}  // namespace regenboot
