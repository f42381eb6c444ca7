// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/chain.hpp"

#include <algorithm>
#include <utility>

#include "regenboot/error.hpp"

namespace regenboot {

Trajectory::Trajectory(std::vector<State> states) : states_(std::move(states)) {
  if (states_.empty()) {
    throw InvalidArgument("trajectory needs at least the initial state");
  }
}

ChainModel ChainModel::simple_symmetric_walk() {
  return ChainModel{0, [](State x, RandomStream& rng) { return rng.next_bit() ? x + 1 : x - 1; }};
}

Trajectory simulate_ssrw(std::size_t n, RandomStream& rng) {
  std::vector<State> states(n + 1);
  State x = 0;
  states[0] = 0;
  std::size_t t = 1;
  while (t <= n) {
    std::uint64_t word = rng.next_u64();
    const std::size_t take = std::min<std::size_t>(64, n - t + 1);
    for (std::size_t i = 0; i < take; ++i, ++t) {
      // +1 for a set bit, -1 otherwise
      x += static_cast<State>((word & 1U) << 1) - 1;
      word >>= 1;
      states[t] = x;
    }
  }
  return Trajectory(std::move(states));
}

Trajectory simulate_chain(const ChainModel& model, std::size_t n, RandomStream& rng) {
  if (!model.step) {
    throw InvalidArgument("chain model has no transition rule");
  }
  std::vector<State> states;
  states.reserve(n + 1);
  states.push_back(model.initial_state);
  for (std::size_t t = 1; t <= n; ++t) {
    states.push_back(model.step(states.back(), rng));
  }
  return Trajectory(std::move(states));
}

}  // namespace regenboot
