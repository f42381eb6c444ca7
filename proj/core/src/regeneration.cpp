// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/regeneration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "regenboot/error.hpp"

namespace regenboot {

BlockDecomposition::BlockDecomposition(std::size_t horizon, std::vector<std::size_t> visit_times)
    : horizon_(horizon), visits_(std::move(visit_times)) {
  for (std::size_t i = 0; i < visits_.size(); ++i) {
    if (visits_[i] > horizon_ || (i > 0 && visits_[i] <= visits_[i - 1])) {
      throw InvalidArgument("visit times must be strictly increasing within [0, n]");
    }
  }
}

IndexRange BlockDecomposition::b0_range() const noexcept {
  if (visits_.empty()) return {0, horizon_ + 1};
  return {0, visits_.front() + 1};
}

IndexRange BlockDecomposition::tail_range() const noexcept {
  if (visits_.empty()) return {horizon_ + 1, horizon_ + 1};
  return {visits_.back() + 1, horizon_ + 1};
}

std::size_t BlockDecomposition::visits_up_to(std::size_t m) const noexcept {
  return static_cast<std::size_t>(
      std::upper_bound(visits_.begin(), visits_.end(), m) - visits_.begin());
}

void BlockStatistics::validate() const {
  if (f_sums.size() != lengths.size()) {
    throw InvalidArgument("block statistics: " + std::to_string(f_sums.size()) + " sums but " +
                          std::to_string(lengths.size()) + " lengths");
  }
  for (std::size_t i = 0; i < f_sums.size(); ++i) {
    if (lengths[i] == 0) throw InvalidArgument("block statistics: zero-length block");
    if (!std::isfinite(f_sums[i])) throw InvalidArgument("block statistics: non-finite block sum");
  }
}

BlockDecomposition decompose(const Trajectory& traj, const AtomSpec& atom) {
  const auto states = traj.states();
  std::vector<std::size_t> visits;
  if (const auto& s = atom.singleton_state()) {
    const State a = *s;
    for (std::size_t t = 0; t < states.size(); ++t) {
      if (states[t] == a) visits.push_back(t);
    }
  } else {
    for (std::size_t t = 0; t < states.size(); ++t) {
      if (atom.contains(states[t])) visits.push_back(t);
    }
  }
  return BlockDecomposition(traj.horizon(), std::move(visits));
}

namespace {

double range_sum(std::span<const State> states, IndexRange r, const Functional& f) {
  double acc = 0.0;
  for (std::size_t t = r.begin; t < r.end; ++t) acc += f(states[t]);
  return acc;
}

}  // namespace

BlockStatistics block_functional(const Trajectory& traj, const BlockDecomposition& decomp,
                                 const Functional& f) {
  if (decomp.horizon() != traj.horizon()) {
    throw InvalidArgument("decomposition horizon does not match trajectory");
  }
  const auto states = traj.states();
  BlockStatistics out;
  out.horizon = traj.horizon();
  const std::size_t k = decomp.numreg();
  out.f_sums.reserve(k);
  out.lengths.reserve(k);
  out.f_b0 = range_sum(states, decomp.b0_range(), f);
  for (std::size_t i = 0; i < k; ++i) {
    out.f_sums.push_back(range_sum(states, decomp.block_range(i), f));
    out.lengths.push_back(decomp.block_length(i));
  }
  out.f_tail = range_sum(states, decomp.tail_range(), f);
  return out;
}

double partial_sum(const Trajectory& traj, const Functional& f) {
  return range_sum(traj.states(), {0, traj.size()}, f);
}

double occupation_scale(double z, double beta, double scale) { return std::pow(z, beta) * scale; }

double inverse_occupation_scale(double z, double beta, double scale) {
  return std::pow(z / scale, 1.0 / beta);
}

OccupationPaths occupation_processes(const BlockDecomposition& decomp, double beta, double scale,
                                     std::span<const double> grid) {
  if (!(beta > 0.0 && beta < 1.0)) throw InvalidArgument("beta must lie in (0, 1)");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("normalization constant must be positive");
  }
  if (decomp.horizon() == 0) throw InvalidArgument("occupation processes need n >= 1");
  const auto n = static_cast<double>(decomp.horizon());
  const double u = occupation_scale(n, beta, scale);
  const double v = inverse_occupation_scale(n, beta, scale);
  const auto visits = decomp.visit_times();
  const std::size_t numreg = decomp.numreg();

  OccupationPaths out;
  out.grid.assign(grid.begin(), grid.end());
  out.visits.reserve(grid.size());
  out.lengths.reserve(grid.size());
  for (const double t : grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("grid points must be positive");
    const double nt = std::floor(n * t);
    // Past the horizon both counts saturate, so clamp before converting.
    const std::size_t m = nt >= n ? decomp.horizon() : static_cast<std::size_t>(nt);
    out.visits.push_back(static_cast<double>(decomp.visits_up_to(m)) / u);
    if (visits.empty()) {
      out.lengths.push_back(0.0);
    } else {
      // l(B_0) + ... + l(B_k) telescopes to the (k+1)-th visit time.
      const double kk = std::min(nt, static_cast<double>(numreg));
      out.lengths.push_back(static_cast<double>(visits[static_cast<std::size_t>(kk)]) / v);
    }
  }
  return out;
}

}  // namespace regenboot
