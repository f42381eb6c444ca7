// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "regenboot/error.hpp"
#include "regenboot/experiments.hpp"
#include "regenboot/tables.hpp"

namespace regenboot {
namespace {

bool monotone_in_unit_interval(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0 || v[i] > 1.0) return false;
    if (i > 0 && v[i] < v[i - 1]) return false;
  }
  return true;
}

TEST(TrueDistribution, SingleChainKeptOrDiscarded) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = true_distribution_mc(50, 1, seed);
    EXPECT_EQ(s.values.size() + s.discarded, 1U);
    EXPECT_EQ(s.values.size(), s.chains.size());
  }
}

TEST(TrueDistribution, RecordsAreConsistent) {
  const auto s = true_distribution_mc(5000, 200, 4);
  EXPECT_EQ(s.values.size() + s.discarded, 200U);
  for (std::size_t i = 0; i < s.chains.size(); ++i) {
    const auto& c = s.chains[i];
    ASSERT_GE(c.numreg, 2U);
    ASSERT_GT(c.sigma_hat, 0.0);
    const double want = std::sqrt(static_cast<double>(c.numreg)) *
                        (c.g_n - kInverseSquareTarget) / c.sigma_hat;
    ASSERT_DOUBLE_EQ(s.values[i], want);
    ASSERT_DOUBLE_EQ(c.l_n, want);
  }
  const Ecdf e(s.values);
  EXPECT_TRUE(std::is_sorted(e.sorted().begin(), e.sorted().end()));
}

TEST(TrueDistribution, ChainStreamsFollowTheSeedLayout) {
  const auto s = true_distribution_mc(2000, 5, 17);
  const std::uint64_t root = derive_seed(17, "n", 2000);
  std::size_t kept = 0;
  for (std::size_t c = 0; c < 5; ++c) {
    RandomStream rng(derive_stream(root, "chain", c));
    const Trajectory t = simulate_ssrw(2000, rng);
    const auto stats = block_functional(t, decompose(t, AtomSpec::singleton(0)), inverse_square);
    if (stats.numreg() < 2) continue;
    EXPECT_DOUBLE_EQ(s.values[kept++], studentized_statistic(stats, kInverseSquareTarget));
  }
  EXPECT_EQ(kept, s.values.size());
}

TEST(TrueDistribution, WorkerCountDoesNotChangeResult) {
  StudySetup one;
  one.workers = 1;
  StudySetup many;
  many.workers = 8;
  EXPECT_EQ(true_distribution_mc(3000, 64, 2, one).values,
            true_distribution_mc(3000, 64, 2, many).values);
}

TEST(TrueDistribution, UnknownTargetRejected) {
  StudySetup setup;
  setup.functional = builtin_functional("one");
  EXPECT_THROW(true_distribution_mc(100, 10, 1, setup), InvalidArgument);
}

TEST(EcdfTable, IdenticalSamplesHaveZeroDistance) {
  const Ecdf a({-1.0, 0.5, 2.0});
  const auto t = make_ecdf_table(a, a, a);
  EXPECT_EQ(t.ks_rbb_true, 0.0);
  EXPECT_EQ(t.ks_rgb_true, 0.0);
  EXPECT_EQ(t.f_true, t.f_rbb);
}

TEST(EcdfTable, ColumnsAndGrid) {
  RandomStream rng(derive_stream(3, "ecdf-table", 0));
  std::vector<double> a(3000), b(1500), c(1500);
  for (auto* v : {&a, &b, &c}) {
    for (auto& x : *v) x = normal_quantile(std::max(1e-12, rng.uniform01()));
  }
  const auto t = make_ecdf_table(Ecdf(a), Ecdf(b), Ecdf(c));
  EXPECT_LE(t.x.size(), kMaxEcdfGrid);
  EXPECT_TRUE(std::is_sorted(t.x.begin(), t.x.end()));
  EXPECT_TRUE(std::binary_search(t.x.begin(), t.x.end(), 0.0));
  for (const auto* col : {&t.f_true, &t.f_rbb, &t.f_rgb, &t.f_normal}) {
    EXPECT_EQ(col->size(), t.x.size());
    EXPECT_TRUE(monotone_in_unit_interval(*col));
  }
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    EXPECT_NEAR(t.f_normal[i], oracle::normal_cdf_quadrature(t.x[i], 20000), 1e-7);
  }
  EXPECT_NEAR(t.ks_rbb_true, oracle::ks_two_sample(b, a), 1e-12);
}

TEST(CdfComparison, SmallRun) {
  const auto c = cdf_comparison(2000, 100, 100, 5, 0);
  EXPECT_EQ(c.rbb.size(), 100U);
  EXPECT_EQ(c.rgb.size(), 100U);
  EXPECT_GE(c.decomposition.numreg(), 2U);
  EXPECT_EQ(c.anchor.horizon(), 2000U);
  const auto zero = std::lower_bound(c.table.x.begin(), c.table.x.end(), 0.0);
  ASSERT_NE(zero, c.table.x.end());
  EXPECT_NEAR(c.table.f_normal[static_cast<std::size_t>(zero - c.table.x.begin())], 0.5, 1e-7);
}

TEST(CdfComparison, AnchorWithoutBlocksRejected) {
  StudySetup setup;
  setup.model = ChainModel{0, [](State x, RandomStream&) { return x + 1; }};
  const Ecdf truth({0.0, 1.0});
  EXPECT_THROW(compare_anchor_with_truth(100, 100, truth, 1, 0, setup), InsufficientBlocks);
}

TEST(Coverage, AlwaysCoveringStub) {
  const IntervalMethod everything{
      "all", [](const BlockStatistics&, const EstimateSummary&, std::uint64_t, double level) {
        const double inf = std::numeric_limits<double>::infinity();
        return IntervalOutcome{{-inf, inf, level}, 0};
      }};
  const auto r = coverage_experiment({1000}, 20, 0.95, 1, {everything});
  ASSERT_EQ(r.rows.size(), 1U);
  EXPECT_EQ(r.rows[0].coverage, 1.0);
  EXPECT_EQ(r.rows[0].chains, 20U);
}

TEST(Coverage, RowsForEveryMethodAndHorizon) {
  const auto r = coverage_experiment({500, 2000}, 30, 50, 0.9, 3);
  ASSERT_EQ(r.rows.size(), 6U);
  for (const auto& row : r.rows) {
    EXPECT_GE(row.coverage, 0.0);
    EXPECT_LE(row.coverage, 1.0);
    EXPECT_GE(row.avg_length, 0.0);
    EXPECT_EQ(row.level, 0.9);
  }
  EXPECT_EQ(r.at(2000, "rgb").n, 2000U);
  EXPECT_THROW(r.at(7, "rbb"), InvalidArgument);
  // Paired design: all methods see the same exclusions.
  EXPECT_EQ(r.at(500, "rbb").excluded, r.at(500, "normal").excluded);
}

TEST(Coverage, DeterministicAcrossWorkers) {
  StudySetup one;
  one.workers = 1;
  StudySetup many;
  many.workers = 8;
  const auto a = coverage_experiment({1000}, 40, 60, 0.95, 8, one);
  const auto b = coverage_experiment({1000}, 40, 60, 0.95, 8, many);
  EXPECT_EQ(to_csv_string(coverage_table(a)), to_csv_string(coverage_table(b)));
}

TEST(MittagLeffler, TheoreticalMoments) {
  EXPECT_DOUBLE_EQ(mittag_leffler_moment(0, 0.5), 1.0);
  EXPECT_NEAR(mittag_leffler_moment(1, 0.5), 2.0 / std::sqrt(3.14159265358979323846), 1e-14);
  EXPECT_NEAR(mittag_leffler_moment(2, 0.5), 2.0, 1e-14);
  EXPECT_NEAR(mittag_leffler_moment(1, 0.5), 1.12838, 1e-5);
}

TEST(MittagLeffler, DiagnosticShape) {
  const auto rows = ml_moment_diagnostic(2000, 100, 4, 0.5, 1.0 / std::sqrt(2.0), 1);
  ASSERT_EQ(rows.size(), 5U);
  EXPECT_EQ(rows[0].empirical, 1.0);
  EXPECT_EQ(rows[0].theoretical, 1.0);
  EXPECT_EQ(rows[0].std_err, 0.0);
  for (int m = 0; m < 5; ++m) EXPECT_EQ(rows[static_cast<std::size_t>(m)].m, m);
  EXPECT_THROW(ml_moment_diagnostic(2000, 100, 5, 0.5, 1.0, 1), InvalidArgument);
}

TEST(MittagLeffler, MeanVisitsMatchExactExpectation) {
  // E[T(n)] for the SSRW is known in closed form.
  const std::size_t n = 10000;
  const std::size_t reps = 4000;
  const double scale = 1.0;
  const auto rows = ml_moment_diagnostic(n, reps, 1, 0.5, scale, 31);
  const double want = oracle::ssrw_expected_visits(n) / std::sqrt(static_cast<double>(n));
  EXPECT_NEAR(rows[1].empirical, want, 4.0 * rows[1].std_err);
}

}  // namespace
}  // namespace regenboot
