// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

// Distributional checks at realistic horizons. Each takes seconds to tens of
// seconds on one core.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "regenboot/experiments.hpp"

namespace regenboot {
namespace {

const double kMl1 = 2.0 / std::sqrt(3.14159265358979323846);
const double kScale = 1.0 / std::sqrt(2.0);

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

TEST(Asymptotics, VisitCountFirstMoment) {
  // T(n)/sqrt(n/2) has mean 2/sqrt(pi) in the limit.
  const auto rows = ml_moment_diagnostic(1000000, 1000, 2, 0.5, kScale, 101);
  EXPECT_NEAR(rows[1].empirical, kMl1, 0.05 * kMl1);
  EXPECT_NEAR(rows[1].theoretical, kMl1, 1e-12);
  EXPECT_NEAR(rows[2].empirical, 2.0, 0.10 * 2.0);
}

TEST(Asymptotics, OccupationAtUnitTimeFirstMoment) {
  const std::size_t n = 1000000;
  const std::uint64_t root = derive_seed(102, "occupation", n);
  const std::vector<double> grid{1.0};
  double sum = 0.0;
  for (std::size_t c = 0; c < 1000; ++c) {
    RandomStream rng(derive_stream(root, "chain", c));
    const Trajectory t = simulate_ssrw(n, rng);
    sum += occupation_processes(decompose(t, AtomSpec::singleton(0)), 0.5, kScale, grid).visits[0];
  }
  EXPECT_NEAR(sum / 1000.0, kMl1, 0.05 * kMl1);
}

TEST(Asymptotics, StudentizedStatisticCloseToNormal) {
  const auto s = true_distribution_mc(100000, 2000, 103);
  const double ks = ks_distance(Ecdf(s.values), std::function<double(double)>(normal_cdf));
  RecordProperty("ks", std::to_string(ks));
  EXPECT_LE(ks, 0.05);
}

TEST(Asymptotics, StudentizedStatisticMeanNearZero) {
  const auto s = true_distribution_mc(100000, 5000, 104);
  double mean = 0.0;
  for (double v : s.values) mean += v;
  mean /= static_cast<double>(s.values.size());
  EXPECT_NEAR(mean, 0.0, 0.1);
}

TEST(Asymptotics, VisitCountAsymptoticallyIndependentOfStatistic) {
  const auto s = true_distribution_mc(100000, 2000, 105);
  std::vector<double> a, b;
  for (const auto& c : s.chains) {
    a.push_back(c.normalized_visits);
    b.push_back(c.l_n);
  }
  double ma = 0, mb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= static_cast<double>(a.size());
  mb /= static_cast<double>(b.size());
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  EXPECT_LE(std::abs(sab / std::sqrt(saa * sbb)), 0.1);
}

// sqrt(T~) (G_n - theta) / sigma with the true block standard deviation,
// estimated once from independent excursions.
TEST(Asymptotics, RandomlyIndexedCltImprovesWithHorizon) {
  std::mt19937_64 eng(20260101);
  double s1 = 0.0, s2 = 0.0;
  const int excursions = 200000;
  for (int i = 0; i < excursions; ++i) {
    const double v = oracle::inverse_square_excursion(eng, 100000);
    s1 += v;
    s2 += v * v;
  }
  const double m = s1 / excursions;
  const double sigma = std::sqrt(s2 / excursions - m * m);
  ASSERT_GT(sigma, 1.0);

  const std::function<double(double)> phi = normal_cdf;
  std::vector<double> medians;
  for (std::size_t n : {1000U, 10000U, 100000U}) {
    std::vector<double> batch_ks;
    for (std::uint64_t batch = 0; batch < 5; ++batch) {
      const auto s = true_distribution_mc(n, 400, derive_seed(106, "batch", batch));
      std::vector<double> z;
      for (const auto& c : s.chains) {
        z.push_back(std::sqrt(static_cast<double>(c.numreg)) * (c.g_n - kInverseSquareTarget) /
                    sigma);
      }
      batch_ks.push_back(ks_distance(Ecdf(z), phi));
    }
    medians.push_back(median(batch_ks));
  }
  EXPECT_GT(medians[0], medians[1]);
  EXPECT_GT(medians[1], medians[2]);
}

TEST(Asymptotics, RbbLawCloseToTrueLaw) {
  const std::size_t n = 50000;
  const auto truth = true_distribution_mc(n, 5000, derive_seed(107, "truth", 0));
  const auto c = compare_anchor_with_truth(n, 2000, Ecdf(truth.values), 107, 0);
  EXPECT_LE(c.table.ks_rbb_true, 0.1);
}

TEST(Asymptotics, IntervalsShrinkAndCoverageGrows) {
  const auto r = coverage_experiment({1000, 10000, 100000}, 500, 500, 0.95, 108);
  const auto& a = r.at(1000, "rbb");
  const auto& b = r.at(10000, "rbb");
  const auto& c = r.at(100000, "rbb");
  EXPECT_GT(a.avg_length, b.avg_length);
  EXPECT_GT(b.avg_length, c.avg_length);
  EXPECT_LE(a.coverage, b.coverage);
  EXPECT_LE(b.coverage, c.coverage);
  EXPECT_GE(c.coverage, r.at(100000, "rgb").coverage - 0.02);
}

}  // namespace
}  // namespace regenboot
