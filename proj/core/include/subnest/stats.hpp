#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "subnest/errors.hpp"
#include "subnest/rng.hpp"

namespace subnest {

// Neumaier compensated summation; order-stable totals for long accumulations.
inline double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

inline double mean(std::span<const double> values) {
  if (values.empty()) raise(ErrorCode::precondition, "mean of empty range");
  return compensated_sum(values) / static_cast<double>(values.size());
}

// Sample variance with divisor n-1.
inline double sample_variance(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) raise(ErrorCode::precondition, "variance needs at least 2 values");
  const double m = mean(values);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = values[i] - m;
    sq[i] = d * d;
  }
  return compensated_sum(sq) / static_cast<double>(n - 1);
}

inline double standard_deviation(std::span<const double> values) {
  return std::sqrt(sample_variance(values));
}

// Linear-interpolation quantile on a copy of the data (R type 7).
inline double quantile(std::span<const double> values, double prob) {
  if (values.empty()) raise(ErrorCode::precondition, "quantile of empty range");
  if (prob < 0.0 || prob > 1.0) raise(ErrorCode::precondition, "quantile prob outside [0,1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double h = prob * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

inline double normal_upper_quantile(double alpha) {
  return normal_quantile(1.0 - alpha / 2.0);
}

}  // namespace subnest
