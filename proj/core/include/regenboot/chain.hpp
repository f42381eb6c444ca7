// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "regenboot/random.hpp"

namespace regenboot {

using State = std::int64_t;

/// A realized path X_0..X_n of an integer-state chain. Immutable once built.
class Trajectory {
 public:
  /// `states` must hold at least X_0.
  explicit Trajectory(std::vector<State> states);

  /// Time horizon n (the path has n + 1 states).
  std::size_t horizon() const noexcept { return states_.size() - 1; }
  std::size_t size() const noexcept { return states_.size(); }
  std::span<const State> states() const noexcept { return states_; }
  State operator[](std::size_t t) const noexcept { return states_[t]; }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;

 private:
  std::vector<State> states_;
};

/// Transition rule of a time-homogeneous chain. `step` must be a pure
/// function of the current state and the draws it takes from the stream.
struct ChainModel {
  State initial_state = 0;
  std::function<State(State, RandomStream&)> step;

  /// The simple symmetric random walk started at 0. Consumes one bit per step
  /// (set bit moves up), matching simulate_ssrw draw for draw.
  static ChainModel simple_symmetric_walk();
};

/// X_0 = 0, X_t = X_{t-1} + Y_t with Y_t = +1 when the t-th stream bit is set
/// and -1 otherwise. Bits are taken least significant first from successive
/// 64-bit words.
Trajectory simulate_ssrw(std::size_t n, RandomStream& rng);

Trajectory simulate_chain(const ChainModel& model, std::size_t n, RandomStream& rng);

}  // namespace regenboot
