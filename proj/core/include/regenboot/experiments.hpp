// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "regenboot/bootstrap.hpp"
#include "regenboot/chain.hpp"
#include "regenboot/distribution.hpp"
#include "regenboot/functional.hpp"
#include "regenboot/regeneration.hpp"

namespace regenboot {

// Seed layout. Every study receives 64-bit seed material `seed` and derives
//
//   per-n root        derive_seed(seed, "n", n)
//   chain c           derive_stream(root, "chain", c)
//   anchor chain a    derive_stream(root, "anchor", a)
//   truth sample      chains of derive_seed(seed, "truth", 0), laid out as above
//   bootstrap seed    derive_seed(chain.material(), "rbb" | "rgb", 0)
//
// so a chain's full pipeline depends only on its index.

/// What is simulated and estimated.
struct StudySetup {
  NamedFunctional functional = builtin_functional("inv_square");
  AtomSpec atom = AtomSpec::singleton(0);
  /// Unset means the simple symmetric random walk via simulate_ssrw.
  std::optional<ChainModel> model;
  Studentization studentization = Studentization::original;
  std::size_t workers = 1;

  /// Known target, or InvalidArgument if the functional has none.
  double theta() const;
};

Trajectory simulate(const StudySetup& setup, std::size_t n, RandomStream& rng);

/// One simulated chain reduced to what the studies need.
struct ChainRecord {
  std::size_t numreg = 0;
  double normalized_visits = 0.0;
  double g_n = 0.0;
  double sigma_hat = 0.0;
  double l_n = 0.0;
};

struct TrueDistributionSample {
  /// L_n of every kept chain, in chain order.
  std::vector<double> values;
  /// Kept chains, aligned with `values`.
  std::vector<ChainRecord> chains;
  /// Chains with numreg < 2 or zero spread.
  std::size_t discarded = 0;
};

/// `reps` independent chains of length n, each reduced to
/// L_n = sqrt(numreg) (G_n - theta) / sigma_hat. `normalized_visits` uses
/// T(n) / (n^beta * scale).
TrueDistributionSample true_distribution_mc(std::size_t n, std::size_t reps, std::uint64_t seed,
                                            const StudySetup& setup = {}, double beta = 0.5,
                                            double scale = 0.70710678118654752440);

/// Four CDFs on a shared grid plus their KS distances.
struct EcdfTable {
  std::vector<double> x;
  std::vector<double> f_true;
  std::vector<double> f_rbb;
  std::vector<double> f_rgb;
  std::vector<double> f_normal;

  double ks_rbb_true = 0.0;
  double ks_rgb_true = 0.0;
  double ks_rbb_normal = 0.0;
  double ks_rgb_normal = 0.0;
  double ks_true_normal = 0.0;
};

/// Largest grid kept in an EcdfTable.
inline constexpr std::size_t kMaxEcdfGrid = 2000;

/// Grid = merged jump points of the three samples plus 0, thinned evenly to
/// at most kMaxEcdfGrid points (endpoints and 0 always kept).
EcdfTable make_ecdf_table(const Ecdf& truth, const Ecdf& rbb, const Ecdf& rgb);

struct CdfComparison {
  EcdfTable table;
  Trajectory anchor;
  BlockDecomposition decomposition;
  BootstrapDistribution rbb;
  BootstrapDistribution rgb;
  std::size_t true_discarded = 0;
};

/// Bootstraps one anchor chain with both methods and compares against an
/// already simulated truth sample. Throws InsufficientBlocks if the anchor
/// has fewer than two complete blocks.
CdfComparison compare_anchor_with_truth(std::size_t n, std::size_t replicates,
                                        const Ecdf& truth, std::uint64_t seed,
                                        std::size_t anchor_index, const StudySetup& setup = {});

/// Full comparison at one n: truth sample of `true_reps` chains plus anchor
/// chain `anchor_index`.
CdfComparison cdf_comparison(std::size_t n, std::size_t replicates, std::size_t true_reps,
                             std::uint64_t seed, std::size_t anchor_index = 0,
                             const StudySetup& setup = {});

/// An interval builder evaluated per chain.
struct IntervalOutcome {
  ConfidenceInterval interval;
  std::size_t degenerate_draws = 0;
};

struct IntervalMethod {
  std::string name;
  /// (block statistics, summary, chain seed material, level) -> interval
  std::function<IntervalOutcome(const BlockStatistics&, const EstimateSummary&, std::uint64_t,
                                double)>
      build;
};

/// Percentile-t interval from `replicates` bootstrap replicates.
IntervalMethod bootstrap_interval_method(BootstrapMethod method, std::size_t replicates,
                                         Studentization studentization = Studentization::original);
/// G_n -/+ z sigma_hat / sqrt(numreg).
IntervalMethod normal_interval_method();

struct CoverageRow {
  std::size_t n = 0;
  std::string method;
  double level = 0.0;
  /// Chains simulated, including excluded ones.
  std::size_t chains = 0;
  double coverage = 0.0;
  double avg_length = 0.0;
  std::size_t excluded = 0;
  std::size_t degenerate_draws = 0;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;

  /// Row for (n, method); throws InvalidArgument if absent.
  const CoverageRow& at(std::size_t n, std::string_view method) const;
};

/// For each n, simulates `chains` chains and evaluates every method on the
/// same chains. Chains with numreg < 2 are excluded from every denominator.
CoverageReport coverage_experiment(const std::vector<std::size_t>& n_list, std::size_t chains,
                                   double level, std::uint64_t seed,
                                   const std::vector<IntervalMethod>& methods,
                                   const StudySetup& setup = {});

/// RBB, RGB and normal intervals with B replicates each.
CoverageReport coverage_experiment(const std::vector<std::size_t>& n_list, std::size_t chains,
                                   std::size_t replicates, double level, std::uint64_t seed,
                                   const StudySetup& setup = {});

struct MomentRow {
  int m = 0;
  double empirical = 0.0;
  double theoretical = 0.0;
  double std_err = 0.0;
};

/// m! / Gamma(1 + m beta).
double mittag_leffler_moment(int m, double beta);

/// Empirical moments m = 0..max_moment of T(n) / (n^beta * scale) over
/// `reps` chains against the Mittag-Leffler moments.
std::vector<MomentRow> ml_moment_diagnostic(std::size_t n, std::size_t reps, int max_moment,
                                            double beta, double scale, std::uint64_t seed,
                                            const StudySetup& setup = {});

}  // namespace regenboot
