// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/tables.hpp"

#include <string>

namespace regenboot {

namespace {

CsvCell count(std::size_t v) { return static_cast<std::int64_t>(v); }

}  // namespace

CsvTable trajectory_table(const Trajectory& traj) {
  CsvTable t{{"t", "x"}, {}};
  t.rows.reserve(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) t.add_row({count(i), traj[i]});
  return t;
}

CsvTable block_table(const BlockStatistics& stats) {
  CsvTable t{{"j", "length", "f_sum"}, {}};
  for (std::size_t i = 0; i < stats.numreg(); ++i) {
    t.add_row({count(i + 1), count(stats.lengths[i]), stats.f_sums[i]});
  }
  return t;
}

CsvTable regeneration_table(const BlockDecomposition& decomp) {
  CsvTable t{{"j", "tau"}, {}};
  const auto visits = decomp.visit_times();
  for (std::size_t i = 0; i < visits.size(); ++i) t.add_row({count(i + 1), count(visits[i])});
  return t;
}

CsvTable bootstrap_table(const std::vector<const BootstrapDistribution*>& dists) {
  CsvTable t{{"replicate", "method", "statistic", "t_star"}, {}};
  for (const auto* d : dists) {
    const std::string method(to_string(d->method));
    for (std::size_t r = 0; r < d->replicates.size(); ++r) {
      t.add_row({count(r), method, d->replicates[r].statistic, count(d->replicates[r].count)});
    }
  }
  return t;
}

CsvTable ecdf_table(const EcdfTable& table) {
  CsvTable t{{"x", "F_true", "F_rbb", "F_rgb", "F_normal"}, {}};
  for (std::size_t i = 0; i < table.x.size(); ++i) {
    t.add_row({table.x[i], table.f_true[i], table.f_rbb[i], table.f_rgb[i], table.f_normal[i]});
  }
  return t;
}

CsvTable coverage_table(const CoverageReport& report) {
  CsvTable t{{"n", "method", "level", "chains", "coverage", "avg_length", "excluded",
              "degenerate_draws"},
             {}};
  for (const auto& r : report.rows) {
    t.add_row({count(r.n), r.method, r.level, count(r.chains), r.coverage, r.avg_length,
               count(r.excluded), count(r.degenerate_draws)});
  }
  return t;
}

CsvTable moment_table(const std::vector<MomentRow>& rows) {
  CsvTable t{{"m", "empirical", "theoretical", "std_err"}, {}};
  for (const auto& r : rows) {
    t.add_row({static_cast<std::int64_t>(r.m), r.empirical, r.theoretical, r.std_err});
  }
  return t;
}

}  // namespace regenboot
