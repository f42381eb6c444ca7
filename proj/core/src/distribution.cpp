// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/distribution.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/erf.hpp>

#include "regenboot/error.hpp"

namespace regenboot {

Ecdf::Ecdf(std::vector<double> sample) : sorted_(std::move(sample)) {
  if (sorted_.empty()) throw InvalidArgument("empirical CDF of an empty sample");
  for (const double x : sorted_) {
    if (std::isnan(x)) throw InvalidArgument("empirical CDF sample contains NaN");
  }
  std::sort(sorted_.begin(), sorted_.end());
}

double Ecdf::operator()(double x) const noexcept {
  const auto k = std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
  return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

double Ecdf::left_limit(double x) const noexcept {
  const auto k = std::lower_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin();
  return static_cast<double>(k) / static_cast<double>(sorted_.size());
}

double ks_distance(const Ecdf& a, const Ecdf& b) {
  const auto xs = a.sorted();
  const auto ys = b.sorted();
  const auto na = static_cast<double>(xs.size());
  const auto nb = static_cast<double>(ys.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < xs.size() || j < ys.size()) {
    double v;
    if (j == ys.size() || (i < xs.size() && xs[i] <= ys[j])) {
      v = xs[i];
    } else {
      v = ys[j];
    }
    while (i < xs.size() && xs[i] == v) ++i;
    while (j < ys.size() && ys[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return d;
}

double ks_distance(const Ecdf& a, const std::function<double(double)>& cdf) {
  const auto xs = a.sorted();
  const auto na = static_cast<double>(xs.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    const double v = xs[i];
    const double before = static_cast<double>(i) / na;
    while (i < xs.size() && xs[i] == v) ++i;
    const double after = static_cast<double>(i) / na;
    const double f = cdf(v);
    d = std::max({d, std::abs(after - f), std::abs(before - f)});
  }
  return d;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("normal quantile level must lie in (0, 1)");
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

}  // namespace regenboot
