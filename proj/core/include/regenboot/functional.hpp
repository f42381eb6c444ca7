// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "regenboot/regeneration.hpp"

namespace regenboot {

/// f(k) = 1/k^2, f(0) = 0.
inline double inverse_square(State k) noexcept {
  if (k == 0) return 0.0;
  const auto x = static_cast<double>(k);
  return 1.0 / (x * x);
}

/// Integral of inverse_square against the SSRW invariant measure (counting
/// measure normalized at the origin): 2 * zeta(2).
inline constexpr double kInverseSquareTarget = std::numbers::pi * std::numbers::pi / 3.0;

struct NamedFunctional {
  std::string name;
  Functional f;
  /// Known integral, when there is one.
  std::optional<double> theta;
};

/// "inv_square" or "one". Throws InvalidArgument for anything else.
NamedFunctional builtin_functional(std::string_view name);

}  // namespace regenboot
