// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "regenboot/bootstrap.hpp"
#include "regenboot/chain.hpp"
#include "regenboot/csv.hpp"
#include "regenboot/experiments.hpp"
#include "regenboot/regeneration.hpp"

namespace regenboot {

// Conversions from results to the on-disk CSV schemas.

/// `t,x`
CsvTable trajectory_table(const Trajectory& traj);
/// `j,length,f_sum`, j = 1..numreg
CsvTable block_table(const BlockStatistics& stats);
/// `j,tau`, one row per atom visit, j = 1..T
CsvTable regeneration_table(const BlockDecomposition& decomp);
/// `replicate,method,statistic,t_star`, replicates in draw order
CsvTable bootstrap_table(const std::vector<const BootstrapDistribution*>& dists);
/// `x,F_true,F_rbb,F_rgb,F_normal`
CsvTable ecdf_table(const EcdfTable& table);
/// `n,method,level,chains,coverage,avg_length,excluded,degenerate_draws`
CsvTable coverage_table(const CoverageReport& report);
/// `m,empirical,theoretical,std_err`
CsvTable moment_table(const std::vector<MomentRow>& rows);

}  // namespace regenboot
