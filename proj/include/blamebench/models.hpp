#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blamebench/rng.hpp"
#include "blamebench/types.hpp"

namespace blamebench {

// Which output an evaluator or explainer consumes. Every model exposes both:
// predict_proba (class-1 probability) and predict_margin (log-odds for
// classifiers, raw output for regression).
enum class OutputKind { probability, margin };

OutputKind output_kind_from_string(const std::string& s);
std::string to_string(OutputKind k);

// One mutable parameter group, ordered from the output side inward. Blocks
// are copies; fitted models stay immutable.
struct ParameterBlock {
  std::string name;
  std::vector<double> values;
};

struct TrainingMeta {
  double lr = 0.0;
  std::size_t epochs = 0;
  double l2 = 0.0;
  std::uint64_t seed = 0;
  double final_loss = 0.0;
  std::vector<double> loss_history;  // in-memory only, not serialized
};

class Model {
 public:
  virtual ~Model() = default;

  virtual std::string kind() const = 0;
  virtual std::size_t n_features() const = 0;

  // Log-odds for classifiers, raw prediction for regression models.
  virtual double predict_margin(std::span<const double> x) const = 0;

  // Class-1 probability: sigmoid(margin), clamped into (0,1).
  double predict_proba(std::span<const double> x) const;

  double output(std::span<const double> x, OutputKind k) const;

  virtual bool has_gradient() const { return false; }

  // d margin / dx; throws NumericError when has_gradient() is false.
  virtual std::vector<double> margin_gradient(std::span<const double> x) const;

  // d predict_proba / dx = p(1-p) * margin_gradient.
  std::vector<double> gradient(std::span<const double> x) const;

  std::vector<double> output_gradient(std::span<const double> x, OutputKind k) const;

  virtual std::vector<ParameterBlock> parameter_blocks() const = 0;
  virtual std::unique_ptr<Model> with_parameter_blocks(
      const std::vector<ParameterBlock>& blocks) const = 0;

  // Fresh values for one block, drawn from the model's initialization law.
  virtual std::vector<double> random_block_like(std::size_t block, Rng& rng) const = 0;

  virtual std::unique_ptr<Model> clone() const = 0;

 protected:
  void check_width(std::span<const double> x) const;
};

class LogisticModel final : public Model {
 public:
  std::vector<double> weights;
  double bias = 0.0;
  TrainingMeta training;

  LogisticModel() = default;
  LogisticModel(std::vector<double> w, double b) : weights(std::move(w)), bias(b) {}

  std::string kind() const override { return "logistic"; }
  std::size_t n_features() const override { return weights.size(); }
  double predict_margin(std::span<const double> x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> margin_gradient(std::span<const double> x) const override;
  std::vector<ParameterBlock> parameter_blocks() const override;
  std::unique_ptr<Model> with_parameter_blocks(
      const std::vector<ParameterBlock>& blocks) const override;
  std::vector<double> random_block_like(std::size_t block, Rng& rng) const override;
  std::unique_ptr<Model> clone() const override;
};

// Ridge regression model. predict_margin is the raw real-valued output;
// predict_proba squashes it through the sigmoid like every other model.
class LinearModel final : public Model {
 public:
  std::vector<double> weights;
  double bias = 0.0;
  TrainingMeta training;

  LinearModel() = default;
  LinearModel(std::vector<double> w, double b) : weights(std::move(w)), bias(b) {}

  std::string kind() const override { return "linear"; }
  std::size_t n_features() const override { return weights.size(); }
  double predict_margin(std::span<const double> x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> margin_gradient(std::span<const double> x) const override;
  std::vector<ParameterBlock> parameter_blocks() const override;
  std::unique_ptr<Model> with_parameter_blocks(
      const std::vector<ParameterBlock>& blocks) const override;
  std::vector<double> random_block_like(std::size_t block, Rng& rng) const override;
  std::unique_ptr<Model> clone() const override;
};

// Gaussian naive Bayes with diagonal per-class covariance. predict_margin is
// the two-class log-posterior-odds, which decomposes additively per feature.
class GaussianNBModel final : public Model {
 public:
  double prior0 = 0.5;
  double prior1 = 0.5;
  std::vector<double> mean0, mean1;  // per-feature class-conditional means
  std::vector<double> var0, var1;    // per-feature variances, >= var_floor
  double var_floor = 1e-9;

  std::string kind() const override { return "gaussian_nb"; }
  std::size_t n_features() const override { return mean0.size(); }
  double predict_margin(std::span<const double> x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> margin_gradient(std::span<const double> x) const override;
  std::vector<ParameterBlock> parameter_blocks() const override;
  std::unique_ptr<Model> with_parameter_blocks(
      const std::vector<ParameterBlock>& blocks) const override;
  std::vector<double> random_block_like(std::size_t block, Rng& rng) const override;
  std::unique_ptr<Model> clone() const override;

  // log N(x_m; mu_{c,m}, var_{c,m}): the per-feature additive terms of the
  // log-odds, used by the GNB ground-truth extraction.
  double log_density(int cls, std::size_t feature, double value) const;
  double log_prior_ratio() const;
};

// Fully-connected tanh network with a scalar sigmoid output. Zero hidden
// layers degenerate to logistic regression.
class MlpModel final : public Model {
 public:
  struct Layer {
    Matrix w;                  // out x in
    std::vector<double> bias;  // out
  };
  std::vector<Layer> layers;  // input side first
  TrainingMeta training;

  std::string kind() const override { return "mlp"; }
  std::size_t n_features() const override {
    return layers.empty() ? 0 : layers.front().w.cols();
  }
  double predict_margin(std::span<const double> x) const override;
  bool has_gradient() const override { return true; }
  std::vector<double> margin_gradient(std::span<const double> x) const override;
  // Block 0 is the output layer, the last block the first hidden layer.
  std::vector<ParameterBlock> parameter_blocks() const override;
  std::unique_ptr<Model> with_parameter_blocks(
      const std::vector<ParameterBlock>& blocks) const override;
  std::vector<double> random_block_like(std::size_t block, Rng& rng) const override;
  std::unique_ptr<Model> clone() const override;
};

// Full-batch gradient descent on L2-regularized cross-entropy with a
// backtracking step size, so the loss trace is non-increasing by
// construction. Throws NumericError on divergence, DataError when a class is
// missing.
LogisticModel fit_logistic(const Dataset& ds, double lr, std::size_t epochs, double l2,
                           RunSeed seed);

// Closed-form ridge normal equations (intercept unpenalized). Throws
// NumericError on a singular system when l2 = 0.
LinearModel fit_linear(const Dataset& ds, double l2);

GaussianNBModel fit_gaussian_nb(const Dataset& ds, double var_floor = 1e-9);

MlpModel fit_mlp(const Dataset& ds, const std::vector<std::size_t>& hidden_sizes, double lr,
                 std::size_t epochs, RunSeed seed);

// Row-wise predict_proba over a feature matrix; errors on width mismatch.
std::vector<double> predict_batch(const Model& model, const Matrix& x);

// Fraction of rows whose thresholded probability (p >= 0.5 -> 1) matches.
double accuracy(const Model& model, const Dataset& ds);

}  // namespace blamebench
