// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace regenboot {

/// Right-continuous empirical CDF of a non-empty sample.
class Ecdf {
 public:
  explicit Ecdf(std::vector<double> sample);

  /// Fraction of the sample <= x.
  double operator()(double x) const noexcept;
  /// Fraction of the sample < x.
  double left_limit(double x) const noexcept;

  std::span<const double> sorted() const noexcept { return sorted_; }
  std::size_t size() const noexcept { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

/// sup_x |F_a(x) - F_b(x)|, evaluated at every jump of either ECDF.
double ks_distance(const Ecdf& a, const Ecdf& b);

/// sup_x |F_a(x) - F(x)| against a continuous CDF, checking both sides of
/// every jump.
double ks_distance(const Ecdf& a, const std::function<double(double)>& cdf);

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile, 0 < p < 1.
double normal_quantile(double p);

}  // namespace regenboot
