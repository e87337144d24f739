#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace blamebench {

// Overflow-safe logistic function.
inline double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double l2_norm(std::span<const double> a) {
  return std::sqrt(dot(a, a));
}

inline double l2_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline bool all_finite(std::span<const double> v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

// Ranks with ties resolved by average rank (1-based, as in rank statistics).
std::vector<double> average_ranks(std::span<const double> values);

// Pearson correlation; throws NumericError when either side has zero variance.
double pearson_correlation(std::span<const double> a, std::span<const double> b);

double mean(std::span<const double> v);
double median(std::vector<double> v);  // by value: needs to sort
double stddev(std::span<const double> v);

// Indices of the k largest |values|, ties broken by lower index first.
std::vector<std::size_t> top_k_by_magnitude(std::span<const double> values, std::size_t k);
// Indices of the k smallest |values|, ties broken by lower index first.
std::vector<std::size_t> bottom_k_by_magnitude(std::span<const double> values, std::size_t k);

// Shortest round-trippable decimal representation of a double ("%.17g",
// trimmed). Used by every writer so reports are byte-stable.
std::string format_double(double v);

}  // namespace blamebench
