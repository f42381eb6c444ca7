// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "regenboot/chain.hpp"

namespace regenboot {

/// Membership test for the regeneration atom.
class AtomSpec {
 public:
  static AtomSpec singleton(State state) { return AtomSpec(state, {}); }
  static AtomSpec predicate(std::function<bool(State)> member) {
    return AtomSpec(std::nullopt, std::move(member));
  }

  bool contains(State x) const { return singleton_ ? x == *singleton_ : member_(x); }
  const std::optional<State>& singleton_state() const noexcept { return singleton_; }

 private:
  AtomSpec(std::optional<State> s, std::function<bool(State)> m)
      : singleton_(s), member_(std::move(m)) {}

  std::optional<State> singleton_;
  std::function<bool(State)> member_;
};

/// Half-open range [begin, end) of time indices.
struct IndexRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  bool empty() const noexcept { return end == begin; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Split of [0, n] at the atom visits t_1 < ... < t_T.
///
///   B_0           = [0, t_1]
///   B_j, j>=1     = (t_j, t_{j+1}],  j = 1..numreg, numreg = max(T - 1, 0)
///   tail B^(n)    = (t_T, n]        (possibly empty)
///
/// A visit at t = 0 counts, in which case B_0 is the single state X_0. With no
/// visit at all, B_0 covers the whole path and the tail is empty.
class BlockDecomposition {
 public:
  BlockDecomposition(std::size_t horizon, std::vector<std::size_t> visit_times);

  std::size_t horizon() const noexcept { return horizon_; }
  std::span<const std::size_t> visit_times() const noexcept { return visits_; }
  /// T_n(alpha).
  std::size_t visit_count() const noexcept { return visits_.size(); }
  /// Number of complete regeneration blocks.
  std::size_t numreg() const noexcept { return visits_.empty() ? 0 : visits_.size() - 1; }

  IndexRange b0_range() const noexcept;
  /// Range of B_{i+1}, for 0 <= i < numreg().
  IndexRange block_range(std::size_t i) const noexcept {
    return {visits_[i] + 1, visits_[i + 1] + 1};
  }
  std::size_t block_length(std::size_t i) const noexcept { return visits_[i + 1] - visits_[i]; }
  IndexRange tail_range() const noexcept;

  /// Visits in [0, m], m clamped to the horizon.
  std::size_t visits_up_to(std::size_t m) const noexcept;

  friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;

 private:
  std::size_t horizon_;
  std::vector<std::size_t> visits_;
};

/// Sufficient data for block estimation and resampling: one (f-sum, length)
/// pair per complete block B_1..B_numreg, plus the discarded edge blocks.
struct BlockStatistics {
  std::vector<double> f_sums;
  std::vector<std::size_t> lengths;
  double f_b0 = 0.0;
  double f_tail = 0.0;
  std::size_t horizon = 0;

  std::size_t numreg() const noexcept { return f_sums.size(); }

  /// Throws InvalidArgument unless sizes agree, lengths are positive and
  /// sums are finite.
  void validate() const;
};

using Functional = std::function<double(State)>;

BlockDecomposition decompose(const Trajectory& traj, const AtomSpec& atom);

/// Sums f over each range, left to right in time.
BlockStatistics block_functional(const Trajectory& traj, const BlockDecomposition& decomp,
                                 const Functional& f);

/// S_n(f) = f(X_0) + ... + f(X_n), accumulated left to right.
double partial_sum(const Trajectory& traj, const Functional& f);

/// Step paths T_n(t) = T(floor(n t)) / u(n) and
/// C_n(t) = sum_{k=0}^{floor(n t)} l(B_k) / v(n) on a grid of t > 0,
/// with u(z) = z^beta * scale and v = u^{-1}.
///
/// Only the observed blocks B_0..B_numreg enter C_n; l(B_0) is the first
/// visit time. Both paths are zero when the atom is never visited.
struct OccupationPaths {
  std::vector<double> grid;
  std::vector<double> visits;
  std::vector<double> lengths;
};

OccupationPaths occupation_processes(const BlockDecomposition& decomp, double beta,
                                     double scale, std::span<const double> grid);

/// u(z) = z^beta * scale.
double occupation_scale(double z, double beta, double scale);
/// v(z) = (z / scale)^(1 / beta), the inverse of occupation_scale.
double inverse_occupation_scale(double z, double beta, double scale);

}  // namespace regenboot
