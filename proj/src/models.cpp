#include "blamebench/models.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "blamebench/numeric.hpp"

namespace blamebench {

namespace {
constexpr double kProbaFloor = 1e-15;
constexpr double kLogisticInitStd = 0.01;
}  // namespace

OutputKind output_kind_from_string(const std::string& s) {
  if (s == "probability") return OutputKind::probability;
  if (s == "margin") return OutputKind::margin;
  throw ConfigError("unknown output kind: " + s);
}

std::string to_string(OutputKind k) {
  return k == OutputKind::probability ? "probability" : "margin";
}

void Model::check_width(std::span<const double> x) const {
  if (x.size() != n_features()) {
    throw DataError("instance width " + std::to_string(x.size()) +
                    " does not match model feature count " + std::to_string(n_features()));
  }
}

double Model::predict_proba(std::span<const double> x) const {
  const double p = sigmoid(predict_margin(x));
  return std::clamp(p, kProbaFloor, 1.0 - kProbaFloor);
}

double Model::output(std::span<const double> x, OutputKind k) const {
  return k == OutputKind::probability ? predict_proba(x) : predict_margin(x);
}

std::vector<double> Model::margin_gradient(std::span<const double>) const {
  throw NumericError("model '" + kind() + "' does not expose a gradient");
}

std::vector<double> Model::gradient(std::span<const double> x) const {
  const double p = predict_proba(x);
  std::vector<double> g = margin_gradient(x);
  const double scale = p * (1.0 - p);
  for (double& v : g) v *= scale;
  return g;
}

std::vector<double> Model::output_gradient(std::span<const double> x, OutputKind k) const {
  return k == OutputKind::probability ? gradient(x) : margin_gradient(x);
}

// ---------------------------------------------------------------------------
// LogisticModel
// ---------------------------------------------------------------------------

double LogisticModel::predict_margin(std::span<const double> x) const {
  check_width(x);
  return bias + dot(weights, x);
}

std::vector<double> LogisticModel::margin_gradient(std::span<const double> x) const {
  check_width(x);
  return weights;
}

std::vector<ParameterBlock> LogisticModel::parameter_blocks() const {
  std::vector<double> v = weights;
  v.push_back(bias);
  return {{"coefficients", std::move(v)}};
}

std::unique_ptr<Model> LogisticModel::with_parameter_blocks(
    const std::vector<ParameterBlock>& blocks) const {
  if (blocks.size() != 1 || blocks[0].values.size() != weights.size() + 1) {
    throw ConfigError("logistic model expects one parameter block of size M+1");
  }
  auto copy = std::make_unique<LogisticModel>(*this);
  copy->weights.assign(blocks[0].values.begin(), blocks[0].values.end() - 1);
  copy->bias = blocks[0].values.back();
  return copy;
}

std::vector<double> LogisticModel::random_block_like(std::size_t block, Rng& rng) const {
  if (block != 0) throw ConfigError("logistic model has a single parameter block");
  std::normal_distribution<double> init(0.0, kLogisticInitStd);
  std::vector<double> v(weights.size() + 1);
  for (double& w : v) w = init(rng);
  return v;
}

std::unique_ptr<Model> LogisticModel::clone() const {
  return std::make_unique<LogisticModel>(*this);
}

// ---------------------------------------------------------------------------
// LinearModel
// ---------------------------------------------------------------------------

double LinearModel::predict_margin(std::span<const double> x) const {
  check_width(x);
  return bias + dot(weights, x);
}

std::vector<double> LinearModel::margin_gradient(std::span<const double> x) const {
  check_width(x);
  return weights;
}

std::vector<ParameterBlock> LinearModel::parameter_blocks() const {
  std::vector<double> v = weights;
  v.push_back(bias);
  return {{"coefficients", std::move(v)}};
}

std::unique_ptr<Model> LinearModel::with_parameter_blocks(
    const std::vector<ParameterBlock>& blocks) const {
  if (blocks.size() != 1 || blocks[0].values.size() != weights.size() + 1) {
    throw ConfigError("linear model expects one parameter block of size M+1");
  }
  auto copy = std::make_unique<LinearModel>(*this);
  copy->weights.assign(blocks[0].values.begin(), blocks[0].values.end() - 1);
  copy->bias = blocks[0].values.back();
  return copy;
}

std::vector<double> LinearModel::random_block_like(std::size_t block, Rng& rng) const {
  if (block != 0) throw ConfigError("linear model has a single parameter block");
  std::normal_distribution<double> init(0.0, 1.0);
  std::vector<double> v(weights.size() + 1);
  for (double& w : v) w = init(rng);
  return v;
}

std::unique_ptr<Model> LinearModel::clone() const {
  return std::make_unique<LinearModel>(*this);
}

// ---------------------------------------------------------------------------
// GaussianNBModel
// ---------------------------------------------------------------------------

double GaussianNBModel::log_density(int cls, std::size_t feature, double value) const {
  const double mu = cls == 1 ? mean1[feature] : mean0[feature];
  const double var = cls == 1 ? var1[feature] : var0[feature];
  const double d = value - mu;
  return -0.5 * std::log(2.0 * M_PI * var) - d * d / (2.0 * var);
}

double GaussianNBModel::log_prior_ratio() const { return std::log(prior1 / prior0); }

double GaussianNBModel::predict_margin(std::span<const double> x) const {
  check_width(x);
  double m = log_prior_ratio();
  for (std::size_t j = 0; j < x.size(); ++j) {
    m += log_density(1, j, x[j]) - log_density(0, j, x[j]);
  }
  return m;
}

std::vector<double> GaussianNBModel::margin_gradient(std::span<const double> x) const {
  check_width(x);
  std::vector<double> g(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    g[j] = -(x[j] - mean1[j]) / var1[j] + (x[j] - mean0[j]) / var0[j];
  }
  return g;
}

std::vector<ParameterBlock> GaussianNBModel::parameter_blocks() const {
  // layout: mean0 | var0 | mean1 | var1
  std::vector<double> v;
  v.reserve(4 * n_features());
  v.insert(v.end(), mean0.begin(), mean0.end());
  v.insert(v.end(), var0.begin(), var0.end());
  v.insert(v.end(), mean1.begin(), mean1.end());
  v.insert(v.end(), var1.begin(), var1.end());
  return {{"class_statistics", std::move(v)}};
}

std::unique_ptr<Model> GaussianNBModel::with_parameter_blocks(
    const std::vector<ParameterBlock>& blocks) const {
  const std::size_t m = n_features();
  if (blocks.size() != 1 || blocks[0].values.size() != 4 * m) {
    throw ConfigError("gaussian_nb model expects one parameter block of size 4M");
  }
  auto copy = std::make_unique<GaussianNBModel>(*this);
  const auto& v = blocks[0].values;
  for (std::size_t j = 0; j < m; ++j) {
    copy->mean0[j] = v[j];
    copy->var0[j] = std::max(v[m + j], var_floor);
    copy->mean1[j] = v[2 * m + j];
    copy->var1[j] = std::max(v[3 * m + j], var_floor);
  }
  return copy;
}

std::vector<double> GaussianNBModel::random_block_like(std::size_t block, Rng& rng) const {
  if (block != 0) throw ConfigError("gaussian_nb model has a single parameter block");
  const std::size_t m = n_features();
  std::normal_distribution<double> mean_law(0.0, 1.0);
  std::vector<double> v(4 * m);
  for (std::size_t j = 0; j < m; ++j) {
    v[j] = mean_law(rng);
    v[m + j] = std::abs(mean_law(rng)) + var_floor;
    v[2 * m + j] = mean_law(rng);
    v[3 * m + j] = std::abs(mean_law(rng)) + var_floor;
  }
  return v;
}

std::unique_ptr<Model> GaussianNBModel::clone() const {
  return std::make_unique<GaussianNBModel>(*this);
}

// ---------------------------------------------------------------------------
// MlpModel
// ---------------------------------------------------------------------------

namespace {

// Forward pass keeping post-activation values per layer; activations[0] = x.
std::vector<std::vector<double>> mlp_forward(const MlpModel& model,
                                             std::span<const double> x) {
  std::vector<std::vector<double>> activations;
  activations.reserve(model.layers.size() + 1);
  activations.emplace_back(x.begin(), x.end());
  for (std::size_t l = 0; l < model.layers.size(); ++l) {
    const auto& layer = model.layers[l];
    const auto& a = activations.back();
    std::vector<double> z(layer.w.rows());
    for (std::size_t r = 0; r < layer.w.rows(); ++r) {
      z[r] = layer.bias[r] + dot(layer.w.row(r), a);
    }
    if (l + 1 < model.layers.size()) {
      for (double& v : z) v = std::tanh(v);
    }
    activations.push_back(std::move(z));
  }
  return activations;
}

}  // namespace

double MlpModel::predict_margin(std::span<const double> x) const {
  check_width(x);
  const auto activations = mlp_forward(*this, x);
  return activations.back()[0];
}

std::vector<double> MlpModel::margin_gradient(std::span<const double> x) const {
  check_width(x);
  const auto activations = mlp_forward(*this, x);
  // delta starts as d margin / d a_L = 1 at the scalar output
  std::vector<double> delta{1.0};
  for (std::size_t l = layers.size(); l-- > 0;) {
    const auto& layer = layers[l];
    if (l + 1 < layers.size()) {
      // activations[l+1] holds tanh(z_l): act' = 1 - tanh^2
      const auto& a = activations[l + 1];
      for (std::size_t r = 0; r < delta.size(); ++r) delta[r] *= 1.0 - a[r] * a[r];
    }
    std::vector<double> prev(layer.w.cols(), 0.0);
    for (std::size_t r = 0; r < layer.w.rows(); ++r) {
      const auto row = layer.w.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) prev[c] += row[c] * delta[r];
    }
    delta = std::move(prev);
  }
  return delta;
}

std::vector<ParameterBlock> MlpModel::parameter_blocks() const {
  std::vector<ParameterBlock> blocks;
  blocks.reserve(layers.size());
  for (std::size_t i = layers.size(); i-- > 0;) {
    const auto& layer = layers[i];
    std::vector<double> v = layer.w.data();
    v.insert(v.end(), layer.bias.begin(), layer.bias.end());
    blocks.push_back({"layer" + std::to_string(i), std::move(v)});
  }
  return blocks;
}

std::unique_ptr<Model> MlpModel::with_parameter_blocks(
    const std::vector<ParameterBlock>& blocks) const {
  if (blocks.size() != layers.size()) {
    throw ConfigError("mlp expects one parameter block per layer");
  }
  auto copy = std::make_unique<MlpModel>(*this);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t l = layers.size() - 1 - b;  // block 0 = output layer
    auto& layer = copy->layers[l];
    const std::size_t n_w = layer.w.data().size();
    if (blocks[b].values.size() != n_w + layer.bias.size()) {
      throw ConfigError("mlp parameter block " + std::to_string(b) + " has wrong size");
    }
    std::copy_n(blocks[b].values.begin(), n_w, layer.w.data().begin());
    std::copy_n(blocks[b].values.begin() + static_cast<std::ptrdiff_t>(n_w),
                layer.bias.size(), layer.bias.begin());
  }
  return copy;
}

std::vector<double> MlpModel::random_block_like(std::size_t block, Rng& rng) const {
  if (block >= layers.size()) throw ConfigError("mlp parameter block index out of range");
  const std::size_t l = layers.size() - 1 - block;
  const auto& layer = layers[l];
  const double s = 1.0 / std::sqrt(static_cast<double>(layer.w.cols()));
  std::uniform_real_distribution<double> init(-s, s);
  std::vector<double> v(layer.w.data().size() + layer.bias.size());
  for (double& w : v) w = init(rng);
  return v;
}

std::unique_ptr<Model> MlpModel::clone() const { return std::make_unique<MlpModel>(*this); }

// ---------------------------------------------------------------------------
// Fitting
// ---------------------------------------------------------------------------

namespace {

void require_both_classes(const Dataset& ds) {
  bool has0 = false, has1 = false;
  for (int y : ds.labels) (y == 1 ? has1 : has0) = true;
  if (!has0 || !has1) {
    throw DataError("training data must contain both classes");
  }
}

double logistic_loss(const Dataset& ds, std::span<const double> w, double b, double l2) {
  double loss = 0.0;
  const std::size_t n = ds.n_instances();
  for (std::size_t i = 0; i < n; ++i) {
    const double z = b + dot(w, ds.instance(i));
    // -log sigmoid(z) = log(1 + exp(-z)), stable form
    const double log1pexp = z > 0.0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
    loss += ds.labels[i] == 1 ? log1pexp : log1pexp + z;
  }
  loss /= static_cast<double>(n);
  loss += 0.5 * l2 * dot(w, w);
  return loss;
}

}  // namespace

LogisticModel fit_logistic(const Dataset& ds, double lr, std::size_t epochs, double l2,
                           RunSeed seed) {
  ds.validate();
  if (ds.n_instances() < 2) throw DataError("fit_logistic needs N >= 2");
  require_both_classes(ds);
  if (!(lr > 0.0)) throw ConfigError("fit_logistic: lr must be > 0");
  if (l2 < 0.0) throw ConfigError("fit_logistic: l2 must be >= 0");

  const std::size_t n = ds.n_instances();
  const std::size_t m = ds.n_features();
  Rng rng = derive_stream(seed, "fit/logistic", 0);
  std::normal_distribution<double> init(0.0, kLogisticInitStd);
  std::vector<double> w(m);
  for (double& v : w) v = init(rng);
  double b = 0.0;

  double loss = logistic_loss(ds, w, b, l2);
  std::vector<double> history{loss};
  double step = lr;
  std::vector<double> gw(m);
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    std::fill(gw.begin(), gw.end(), 0.0);
    double gb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = ds.instance(i);
      const double p = sigmoid(b + dot(w, x));
      const double r = p - static_cast<double>(ds.labels[i]);
      for (std::size_t j = 0; j < m; ++j) gw[j] += r * x[j];
      gb += r;
    }
    for (std::size_t j = 0; j < m; ++j) gw[j] = gw[j] / static_cast<double>(n) + l2 * w[j];
    gb /= static_cast<double>(n);

    // backtracking keeps the loss trace non-increasing
    bool accepted = false;
    for (int attempt = 0; attempt < 60; ++attempt) {
      std::vector<double> w_new(m);
      for (std::size_t j = 0; j < m; ++j) w_new[j] = w[j] - step * gw[j];
      const double b_new = b - step * gb;
      const double loss_new = logistic_loss(ds, w_new, b_new, l2);
      if (std::isfinite(loss_new) && loss_new <= loss) {
        w = std::move(w_new);
        b = b_new;
        loss = loss_new;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      throw NumericError("fit_logistic: diverged (no finite descent step found)");
    }
    history.push_back(loss);
  }
  if (!all_finite(w) || !std::isfinite(b)) {
    throw NumericError("fit_logistic: parameters diverged");
  }

  LogisticModel model(std::move(w), b);
  model.training = {lr, epochs, l2, seed.master_seed, loss, std::move(history)};
  return model;
}

LinearModel fit_linear(const Dataset& ds, double l2) {
  ds.validate();
  if (l2 < 0.0) throw ConfigError("fit_linear: l2 must be >= 0");
  const std::size_t n = ds.n_instances();
  const std::size_t m = ds.n_features();

  // normal equations over [1 X]; intercept unpenalized
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m + 1, m + 1);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = ds.instance(i);
    Eigen::VectorXd xi(m + 1);
    xi(0) = 1.0;
    for (std::size_t j = 0; j < m; ++j) xi(static_cast<Eigen::Index>(j) + 1) = x[j];
    g += xi * xi.transpose();
    rhs += static_cast<double>(ds.labels[i]) * xi;
  }
  g /= static_cast<double>(n);
  rhs /= static_cast<double>(n);
  for (std::size_t j = 1; j <= m; ++j) {
    g(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) += l2;
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(g);
  if (!lu.isInvertible()) {
    throw NumericError("fit_linear: singular normal equations (need N > M or l2 > 0)");
  }
  const Eigen::VectorXd beta = lu.solve(rhs);
  const double residual = (g * beta - rhs).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-8)) {
    throw NumericError("fit_linear: normal-equation residual " + format_double(residual) +
                       " exceeds 1e-8");
  }

  LinearModel model;
  model.bias = beta(0);
  model.weights.resize(m);
  for (std::size_t j = 0; j < m; ++j) model.weights[j] = beta(static_cast<Eigen::Index>(j) + 1);
  model.training.l2 = l2;
  return model;
}

GaussianNBModel fit_gaussian_nb(const Dataset& ds, double var_floor) {
  ds.validate();
  require_both_classes(ds);
  if (!(var_floor > 0.0)) throw ConfigError("fit_gaussian_nb: var_floor must be > 0");
  const std::size_t n = ds.n_instances();
  const std::size_t m = ds.n_features();

  GaussianNBModel model;
  model.var_floor = var_floor;
  model.mean0.assign(m, 0.0);
  model.mean1.assign(m, 0.0);
  model.var0.assign(m, 0.0);
  model.var1.assign(m, 0.0);
  std::size_t n1 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto& mu = ds.labels[i] == 1 ? model.mean1 : model.mean0;
    if (ds.labels[i] == 1) ++n1;
    for (std::size_t j = 0; j < m; ++j) mu[j] += ds.features(i, j);
  }
  const std::size_t n0 = n - n1;
  for (std::size_t j = 0; j < m; ++j) {
    model.mean0[j] /= static_cast<double>(n0);
    model.mean1[j] /= static_cast<double>(n1);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& var = ds.labels[i] == 1 ? model.var1 : model.var0;
    const auto& mu = ds.labels[i] == 1 ? model.mean1 : model.mean0;
    for (std::size_t j = 0; j < m; ++j) {
      const double d = ds.features(i, j) - mu[j];
      var[j] += d * d;
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    model.var0[j] = std::max(model.var0[j] / static_cast<double>(n0), var_floor);
    model.var1[j] = std::max(model.var1[j] / static_cast<double>(n1), var_floor);
  }
  model.prior0 = static_cast<double>(n0) / static_cast<double>(n);
  model.prior1 = static_cast<double>(n1) / static_cast<double>(n);
  return model;
}

namespace {

double mlp_loss(const MlpModel& model, const Dataset& ds) {
  double loss = 0.0;
  for (std::size_t i = 0; i < ds.n_instances(); ++i) {
    const double z = model.predict_margin(ds.instance(i));
    const double log1pexp = z > 0.0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
    loss += ds.labels[i] == 1 ? log1pexp : log1pexp + z;
  }
  return loss / static_cast<double>(ds.n_instances());
}

// Accumulated parameter gradients of the mean cross-entropy loss.
std::vector<MlpModel::Layer> mlp_parameter_gradients(const MlpModel& model,
                                                     const Dataset& ds) {
  std::vector<MlpModel::Layer> grads;
  grads.reserve(model.layers.size());
  for (const auto& layer : model.layers) {
    grads.push_back({Matrix(layer.w.rows(), layer.w.cols(), 0.0),
                     std::vector<double>(layer.bias.size(), 0.0)});
  }
  const std::size_t n = ds.n_instances();
  for (std::size_t i = 0; i < n; ++i) {
    const auto activations = mlp_forward(model, ds.instance(i));
    const double p = sigmoid(activations.back()[0]);
    std::vector<double> delta{(p - static_cast<double>(ds.labels[i])) /
                              static_cast<double>(n)};
    for (std::size_t l = model.layers.size(); l-- > 0;) {
      const auto& layer = model.layers[l];
      if (l + 1 < model.layers.size()) {
        const auto& a = activations[l + 1];
        for (std::size_t r = 0; r < delta.size(); ++r) delta[r] *= 1.0 - a[r] * a[r];
      }
      const auto& a_in = activations[l];
      for (std::size_t r = 0; r < layer.w.rows(); ++r) {
        for (std::size_t c = 0; c < layer.w.cols(); ++c) {
          grads[l].w(r, c) += delta[r] * a_in[c];
        }
        grads[l].bias[r] += delta[r];
      }
      std::vector<double> prev(layer.w.cols(), 0.0);
      for (std::size_t r = 0; r < layer.w.rows(); ++r) {
        const auto row = layer.w.row(r);
        for (std::size_t c = 0; c < row.size(); ++c) prev[c] += row[c] * delta[r];
      }
      delta = std::move(prev);
    }
  }
  return grads;
}

}  // namespace

MlpModel fit_mlp(const Dataset& ds, const std::vector<std::size_t>& hidden_sizes, double lr,
                 std::size_t epochs, RunSeed seed) {
  ds.validate();
  if (ds.n_instances() < 2) throw DataError("fit_mlp needs N >= 2");
  require_both_classes(ds);
  if (!(lr > 0.0)) throw ConfigError("fit_mlp: lr must be > 0");
  for (std::size_t h : hidden_sizes) {
    if (h == 0) throw ConfigError("fit_mlp: hidden layer sizes must be >= 1");
  }

  MlpModel model;
  std::vector<std::size_t> sizes{ds.n_features()};
  sizes.insert(sizes.end(), hidden_sizes.begin(), hidden_sizes.end());
  sizes.push_back(1);
  Rng rng = derive_stream(seed, "fit/mlp", 0);
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const std::size_t fan_in = sizes[l];
    const std::size_t fan_out = sizes[l + 1];
    const double s = 1.0 / std::sqrt(static_cast<double>(fan_in));
    std::uniform_real_distribution<double> init(-s, s);
    MlpModel::Layer layer{Matrix(fan_out, fan_in), std::vector<double>(fan_out)};
    for (double& v : layer.w.data()) v = init(rng);
    for (double& v : layer.bias) v = init(rng);
    model.layers.push_back(std::move(layer));
  }

  double loss = mlp_loss(model, ds);
  std::vector<double> history{loss};
  double step = lr;
  for (std::size_t epoch = 0; epoch < epochs; ++epoch) {
    const auto grads = mlp_parameter_gradients(model, ds);
    bool accepted = false;
    for (int attempt = 0; attempt < 60; ++attempt) {
      MlpModel candidate = model;
      for (std::size_t l = 0; l < candidate.layers.size(); ++l) {
        auto& lw = candidate.layers[l].w.data();
        const auto& gw = grads[l].w.data();
        for (std::size_t t = 0; t < lw.size(); ++t) lw[t] -= step * gw[t];
        for (std::size_t t = 0; t < candidate.layers[l].bias.size(); ++t) {
          candidate.layers[l].bias[t] -= step * grads[l].bias[t];
        }
      }
      const double loss_new = mlp_loss(candidate, ds);
      if (std::isfinite(loss_new) && loss_new <= loss) {
        model = std::move(candidate);
        loss = loss_new;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      throw NumericError("fit_mlp: diverged (no finite descent step found)");
    }
    history.push_back(loss);
  }

  model.training = {lr, epochs, 0.0, seed.master_seed, loss, std::move(history)};
  return model;
}

std::vector<double> predict_batch(const Model& model, const Matrix& x) {
  if (x.rows() > 0 && x.cols() != model.n_features()) {
    throw DataError("predict_batch: matrix width does not match model");
  }
  std::vector<double> out(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) out[i] = model.predict_proba(x.row(i));
  return out;
}

double accuracy(const Model& model, const Dataset& ds) {
  std::size_t correct = 0;
  for (std::size_t i = 0; i < ds.n_instances(); ++i) {
    const int pred = model.predict_proba(ds.instance(i)) >= 0.5 ? 1 : 0;
    if (pred == ds.labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(ds.n_instances());
}

}  // namespace blamebench
