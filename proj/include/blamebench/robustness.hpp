#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "blamebench/models.hpp"
#include "blamebench/rng.hpp"
#include "blamebench/types.hpp"

namespace blamebench {

// How "removed" features are replaced. dataset_mean substitutes the average
// feature value in the dataset, the canonical tabular baseline.
struct NullificationStrategy {
  enum class Kind { dataset_mean, zero, fixed_vector };
  Kind kind = Kind::dataset_mean;
  std::vector<double> fixed_values;  // used for fixed_vector only

  static NullificationStrategy mean() { return {Kind::dataset_mean, {}}; }
  static NullificationStrategy zero() { return {Kind::zero, {}}; }
  static NullificationStrategy fixed(std::vector<double> v) {
    return {Kind::fixed_vector, std::move(v)};
  }

  // Baseline vector of length M for the given dataset.
  std::vector<double> baseline(const Dataset& ds) const;
  std::string name() const;
};

NullificationStrategy nullification_from_string(const std::string& s);

// Replaces the features listed in `indices` with the strategy's baseline.
// Rejects an empty index set.
std::vector<double> nullify(std::span<const double> x, std::span<const std::size_t> indices,
                            const NullificationStrategy& strategy, const Dataset& ds);

// |f(x') - f(x)| / ||x - x'||_2 with the K largest-magnitude attribution
// features nullified; f is predict_proba. Throws
// DegenerateNullificationError when nullification does not move the instance.
double importance_by_deletion(const Model& model, std::span<const double> x,
                              const Attribution& attribution, std::size_t k,
                              const NullificationStrategy& strategy, const Dataset& ds);

// Same quotient with the K smallest-magnitude features nullified; robust
// explanations yield small values here and large ones under deletion.
double importance_by_preservation(const Model& model, std::span<const double> x,
                                  const Attribution& attribution, std::size_t k,
                                  const NullificationStrategy& strategy, const Dataset& ds);

struct ContinuityConfig {
  double epsilon = 0.1;        // Euclidean ball radius in feature-space units
  std::size_t n_samples = 50;  // draws inside the ball
};

// Worst-case explanation change per unit input change over sampled points in
// the epsilon-ball around x. The explainer callable must be deterministic
// (frozen internal seed) so the measure reflects input sensitivity only.
double continuity(const std::function<std::vector<double>(std::span<const double>)>& explainer,
                  std::span<const double> x, const ContinuityConfig& cfg, Rng& rng);

struct DeletionProbe {
  double deletion_score = 0.0;
  double f_x = 0.0;
  double f_x_nullified = 0.0;
  bool class_flipped = false;
  // True when the model kept its class with confidence despite top-K
  // removal: the oracle, not the explanation, is then the suspect.
  bool oracle_suspect = false;
};

// Deletion measure plus the blame-problem flag. confidence_margin is how far
// from 0.5 the retained prediction must sit for the oracle to be suspect.
DeletionProbe deletion_blame_probe(const Model& model, std::span<const double> x,
                                   const Attribution& attribution, std::size_t k,
                                   const NullificationStrategy& strategy, const Dataset& ds,
                                   double confidence_margin = 0.25);

}  // namespace blamebench
