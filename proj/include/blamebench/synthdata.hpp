#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blamebench/rng.hpp"
#include "blamebench/types.hpp"

namespace blamebench {

enum class Transform { identity, sin, cos, abs, square, exp, negexp };

Transform transform_from_string(const std::string& s);
std::string to_string(Transform t);

// One additive term: coefficient * T(inner_scale * x[feature]).
// inner_scale covers generating functions like sin(2*x).
struct PolynomialTerm {
  double coefficient = 1.0;
  std::size_t feature = 0;
  Transform transform = Transform::identity;
  double inner_scale = 1.0;
};

// Additive generating polynomial for label scores and their analytic
// gradient. Feature count is the highest referenced index + 1.
struct PolynomialSpec {
  std::vector<PolynomialTerm> terms;
  double intercept = 0.0;

  std::size_t n_features() const;
  double evaluate(std::span<const double> x) const;
  std::vector<double> gradient(std::span<const double> x) const;

  void validate() const;  // throws ConfigError
};

// Diagonal-Gaussian clusters with binary feature masks. Labels come either
// from fixed per-cluster values or from the sign of the masked linear score
// weights . mask . (x - center).
struct ClusterSpec {
  Matrix centers;  // K x M
  Matrix scales;   // K x M, all > 0
  Matrix masks;    // K x M entries in {0,1}
  Matrix weights;  // K x M, used only where mask = 1
  std::optional<std::vector<int>> cluster_labels;  // K values in {0,1}; absent = from-score

  std::size_t n_clusters() const { return centers.rows(); }
  std::size_t n_features() const { return centers.cols(); }
  void validate() const;  // throws ConfigError
};

// Chen et al. style generators: 10-d standard Gaussian features, label drawn
// with probability sigmoid(score), constant binary ground-truth masks.
Dataset generate_xor(std::size_t n, RunSeed seed);
Dataset generate_orange_skin(std::size_t n, RunSeed seed);
Dataset generate_nonlinear_additive(std::size_t n, RunSeed seed);

// Switch-feature generator. Feature 0 selects which block of features drives
// the label: the +3 mixture component uses the orange-skin score on features
// 1-4, the -3 component the nonlinear-additive score on features 5-8.
// include_switch_in_gt marks feature 0 itself important (default); disable it
// for the strict block-only masks.
Dataset generate_switch(std::size_t n, RunSeed seed, bool include_switch_in_gt = true);

// Polynomial generator: label = 1 iff spec(x) + noise * eps > 0. Provisional
// per-instance ground truth is the analytic gradient at x, zero-padded over
// redundant features; the model-dependent boundary refinement lives in the
// groundtruth module.
Dataset generate_seneca_rc(const PolynomialSpec& spec, std::size_t n, double noise,
                           std::size_t n_redundant, RunSeed seed);

Dataset generate_gaussian_clusters(const ClusterSpec& spec, std::size_t n, RunSeed seed);

// Raw label scores, exposed for label-law fidelity checks.
double xor_score(std::span<const double> x);
double orange_skin_score(std::span<const double> x, std::size_t first = 0);
double nonlinear_additive_score(std::span<const double> x, std::size_t first = 0);

}  // namespace blamebench
