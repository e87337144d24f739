#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blamebench/errors.hpp"

namespace blamebench {

// Dense row-major matrix of doubles. Small data only; the harness works at
// desk scale (thousands of rows, tens of features).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<double> row_copy(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

// Where a dataset came from: generator id, its parameter string (JSON for
// structured generators) and the seed used. Loaded datasets carry the path.
struct Provenance {
  std::string generator;
  std::string params;
  std::uint64_t seed = 0;
};

// Tabular binary-classification dataset, optionally with per-instance
// ground-truth importance scores of the same shape as the features.
struct Dataset {
  Matrix features;                       // N x M
  std::vector<int> labels;               // N values in {0,1}
  std::vector<std::string> feature_names;  // M names
  std::optional<Matrix> ground_truth;    // N x M when present
  Provenance provenance;

  std::size_t n_instances() const { return features.rows(); }
  std::size_t n_features() const { return features.cols(); }

  std::span<const double> instance(std::size_t i) const { return features.row(i); }

  // Throws DataError on any invariant violation: NaN/Inf entries, non-binary
  // labels, shape mismatches, or an empty matrix.
  void validate() const;

  // Per-feature mean and population standard deviation over all instances.
  std::vector<double> feature_means() const;
  std::vector<double> feature_stds() const;
};

// One explained row. `index` refers back to the owning dataset when known.
struct Instance {
  std::vector<double> values;
  std::optional<std::size_t> index;
};

// Per-feature contribution vector for one instance, in contribution form:
// positive scores push the explained output up. For completeness-satisfying
// explainers, base_value + sum(scores) reproduces the explained output.
struct Attribution {
  std::vector<double> scores;
  std::optional<double> base_value;
  int target = 1;  // binary-only harness: the explained class is always 1
  std::string explainer_id;
};

}  // namespace blamebench
