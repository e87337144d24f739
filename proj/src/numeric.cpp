#include "blamebench/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>

#include "blamebench/errors.hpp"

namespace blamebench {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // positions i..j share the same value; assign the average 1-based rank
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double pearson_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw NumericError("pearson_correlation: need two equal-length vectors of size >= 2");
  }
  const double ma = mean(a);
  const double mb = mean(b);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma;
    const double db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw NumericError("pearson_correlation: zero variance input");
  }
  return sab / std::sqrt(saa * sbb);
}

double mean(std::span<const double> v) {
  if (v.empty()) throw NumericError("mean of empty vector");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double median(std::vector<double> v) {
  if (v.empty()) throw NumericError("median of empty vector");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double stddev(std::span<const double> v) {
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size()));
}

namespace {

std::vector<std::size_t> k_by_magnitude(std::span<const double> values, std::size_t k,
                                        bool largest) {
  if (k == 0 || k > values.size()) {
    throw ConfigError("top-k selection: k out of range");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(values[a]);
    const double mb = std::abs(values[b]);
    if (ma != mb) return largest ? ma > mb : ma < mb;
    return a < b;
  });
  order.resize(k);
  return order;
}

}  // namespace

std::vector<std::size_t> top_k_by_magnitude(std::span<const double> values, std::size_t k) {
  return k_by_magnitude(values, k, /*largest=*/true);
}

std::vector<std::size_t> bottom_k_by_magnitude(std::span<const double> values, std::size_t k) {
  return k_by_magnitude(values, k, /*largest=*/false);
}

std::string format_double(double v) {
  char buf[64];
  // shortest representation that parses back to the identical double
  for (int prec = 1; prec <= 17; ++prec) {
    const int len = std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    double back = 0.0;
    const auto res = std::from_chars(buf, buf + len, back);
    if (res.ec == std::errc{} && back == v) return std::string(buf, static_cast<std::size_t>(len));
  }
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

}  // namespace blamebench
