#include "blamebench/synthdata.hpp"

#include <algorithm>
#include <cmath>

#include "blamebench/numeric.hpp"

namespace blamebench {

Transform transform_from_string(const std::string& s) {
  if (s == "identity") return Transform::identity;
  if (s == "sin") return Transform::sin;
  if (s == "cos") return Transform::cos;
  if (s == "abs") return Transform::abs;
  if (s == "square") return Transform::square;
  if (s == "exp") return Transform::exp;
  if (s == "negexp") return Transform::negexp;
  throw ConfigError("unknown polynomial transform: " + s);
}

std::string to_string(Transform t) {
  switch (t) {
    case Transform::identity: return "identity";
    case Transform::sin: return "sin";
    case Transform::cos: return "cos";
    case Transform::abs: return "abs";
    case Transform::square: return "square";
    case Transform::exp: return "exp";
    case Transform::negexp: return "negexp";
  }
  throw ConfigError("invalid transform enum");
}

namespace {

double apply_transform(Transform t, double u) {
  switch (t) {
    case Transform::identity: return u;
    case Transform::sin: return std::sin(u);
    case Transform::cos: return std::cos(u);
    case Transform::abs: return std::abs(u);
    case Transform::square: return u * u;
    case Transform::exp: return std::exp(u);
    case Transform::negexp: return std::exp(-u);
  }
  return 0.0;
}

// d/du of the transform; abs uses sign(u) with sign(0) = 0.
double transform_derivative(Transform t, double u) {
  switch (t) {
    case Transform::identity: return 1.0;
    case Transform::sin: return std::cos(u);
    case Transform::cos: return -std::sin(u);
    case Transform::abs: return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
    case Transform::square: return 2.0 * u;
    case Transform::exp: return std::exp(u);
    case Transform::negexp: return -std::exp(-u);
  }
  return 0.0;
}

}  // namespace

std::size_t PolynomialSpec::n_features() const {
  std::size_t m = 0;
  for (const auto& t : terms) m = std::max(m, t.feature + 1);
  return m;
}

double PolynomialSpec::evaluate(std::span<const double> x) const {
  double s = intercept;
  for (const auto& t : terms) {
    s += t.coefficient * apply_transform(t.transform, t.inner_scale * x[t.feature]);
  }
  return s;
}

std::vector<double> PolynomialSpec::gradient(std::span<const double> x) const {
  std::vector<double> g(n_features(), 0.0);
  for (const auto& t : terms) {
    const double u = t.inner_scale * x[t.feature];
    g[t.feature] += t.coefficient * transform_derivative(t.transform, u) * t.inner_scale;
  }
  return g;
}

void PolynomialSpec::validate() const {
  if (terms.empty()) throw ConfigError("polynomial spec needs at least one term");
  for (const auto& t : terms) {
    if (!std::isfinite(t.coefficient) || !std::isfinite(t.inner_scale)) {
      throw ConfigError("polynomial term has non-finite parameters");
    }
  }
}

void ClusterSpec::validate() const {
  const std::size_t k = centers.rows();
  const std::size_t m = centers.cols();
  if (k < 2) throw ConfigError("cluster spec needs K >= 2 clusters");
  if (m < 1) throw ConfigError("cluster spec needs M >= 1 features");
  auto check_shape = [&](const Matrix& mat, const char* what) {
    if (mat.rows() != k || mat.cols() != m) {
      throw ConfigError(std::string("cluster spec: ") + what + " shape mismatch");
    }
  };
  check_shape(scales, "scales");
  check_shape(masks, "masks");
  check_shape(weights, "weights");
  for (double s : scales.data()) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("cluster scales must be positive");
  }
  for (double v : masks.data()) {
    if (v != 0.0 && v != 1.0) throw ConfigError("cluster masks must be binary");
  }
  if (cluster_labels) {
    if (cluster_labels->size() != k) throw ConfigError("cluster_labels size mismatch");
    for (int l : *cluster_labels) {
      if (l != 0 && l != 1) throw ConfigError("cluster_labels must be in {0,1}");
    }
  }
}

namespace {

constexpr std::size_t kChenFeatures = 10;

std::vector<std::string> default_names(std::size_t m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (std::size_t j = 0; j < m; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

// Shared skeleton for the Chen generators: iid standard normal features,
// P(Y=1|x) = sigmoid(score(x)), constant ground-truth mask.
Dataset generate_chen(std::size_t n, RunSeed seed, const std::string& id,
                      double (*score)(std::span<const double>),
                      const std::vector<std::size_t>& important) {
  if (n < 1) throw DataError("generator '" + id + "': n must be >= 1");
  Dataset ds;
  ds.features = Matrix(n, kChenFeatures);
  ds.labels.resize(n);
  ds.feature_names = default_names(kChenFeatures);
  Matrix gt(n, kChenFeatures, 0.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = derive_stream(seed, "synth/" + id, i);
    for (std::size_t j = 0; j < kChenFeatures; ++j) ds.features(i, j) = normal(rng);
    const double p = sigmoid(score(ds.features.row(i)));
    ds.labels[i] = unif(rng) < p ? 1 : 0;
    for (std::size_t j : important) gt(i, j) = 1.0;
  }
  ds.ground_truth = std::move(gt);
  ds.provenance = {id, "", seed.master_seed};
  ds.validate();
  return ds;
}

}  // namespace

double xor_score(std::span<const double> x) { return x[0] * x[1]; }

double orange_skin_score(std::span<const double> x, std::size_t first) {
  double s = -4.0;
  for (std::size_t j = first; j < first + 4; ++j) s += x[j] * x[j];
  return s;
}

double nonlinear_additive_score(std::span<const double> x, std::size_t first) {
  return -100.0 * std::sin(2.0 * x[first]) + 2.0 * std::abs(x[first + 1]) + x[first + 2] +
         std::exp(-x[first + 3]);
}

Dataset generate_xor(std::size_t n, RunSeed seed) {
  return generate_chen(n, seed, "xor", &xor_score, {0, 1});
}

Dataset generate_orange_skin(std::size_t n, RunSeed seed) {
  return generate_chen(
      n, seed, "orange_skin",
      [](std::span<const double> x) { return orange_skin_score(x, 0); }, {0, 1, 2, 3});
}

Dataset generate_nonlinear_additive(std::size_t n, RunSeed seed) {
  return generate_chen(
      n, seed, "nonlinear_additive",
      [](std::span<const double> x) { return nonlinear_additive_score(x, 0); },
      {0, 1, 2, 3});
}

Dataset generate_switch(std::size_t n, RunSeed seed, bool include_switch_in_gt) {
  if (n < 1) throw DataError("generator 'switch': n must be >= 1");
  Dataset ds;
  ds.features = Matrix(n, kChenFeatures);
  ds.labels.resize(n);
  ds.feature_names = default_names(kChenFeatures);
  Matrix gt(n, kChenFeatures, 0.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = derive_stream(seed, "synth/switch", i);
    const bool plus_component = unif(rng) < 0.5;
    ds.features(i, 0) = (plus_component ? 3.0 : -3.0) + normal(rng);
    for (std::size_t j = 1; j < kChenFeatures; ++j) ds.features(i, j) = normal(rng);
    const auto x = ds.features.row(i);
    const double score =
        plus_component ? orange_skin_score(x, 1) : nonlinear_additive_score(x, 5);
    ds.labels[i] = unif(rng) < sigmoid(score) ? 1 : 0;
    if (include_switch_in_gt) gt(i, 0) = 1.0;
    const std::size_t first = plus_component ? 1 : 5;
    for (std::size_t j = first; j < first + 4; ++j) gt(i, j) = 1.0;
  }
  ds.ground_truth = std::move(gt);
  ds.provenance = {"switch", include_switch_in_gt ? "switch_in_gt=1" : "switch_in_gt=0",
                   seed.master_seed};
  ds.validate();
  return ds;
}

Dataset generate_seneca_rc(const PolynomialSpec& spec, std::size_t n, double noise,
                           std::size_t n_redundant, RunSeed seed) {
  spec.validate();
  if (n < 1) throw DataError("generator 'seneca_rc': n must be >= 1");
  if (noise < 0.0) throw ConfigError("seneca_rc noise must be >= 0");
  const std::size_t m_used = spec.n_features();
  const std::size_t m = m_used + n_redundant;
  Dataset ds;
  ds.features = Matrix(n, m);
  ds.labels.resize(n);
  ds.feature_names = default_names(m);
  Matrix gt(n, m, 0.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = derive_stream(seed, "synth/seneca_rc", i);
    for (std::size_t j = 0; j < m; ++j) ds.features(i, j) = normal(rng);
    const auto x = ds.features.row(i);
    const double value = spec.evaluate(x.first(m_used));
    if (!std::isfinite(value)) {
      throw NumericError("seneca_rc: polynomial evaluates to a non-finite value");
    }
    ds.labels[i] = value + noise * normal(rng) > 0.0 ? 1 : 0;
    const std::vector<double> grad = spec.gradient(x.first(m_used));
    if (!all_finite(grad)) {
      throw NumericError("seneca_rc: polynomial gradient is non-finite");
    }
    for (std::size_t j = 0; j < m_used; ++j) gt(i, j) = grad[j];
    // redundant features keep gt 0
  }
  ds.ground_truth = std::move(gt);
  ds.provenance = {"seneca_rc",
                   "noise=" + format_double(noise) + ";redundant=" + std::to_string(n_redundant),
                   seed.master_seed};
  ds.validate();
  return ds;
}

Dataset generate_gaussian_clusters(const ClusterSpec& spec, std::size_t n, RunSeed seed) {
  spec.validate();
  if (n < 1) throw DataError("generator 'gaussian_clusters': n must be >= 1");
  const std::size_t k = spec.n_clusters();
  const std::size_t m = spec.n_features();
  Dataset ds;
  ds.features = Matrix(n, m);
  ds.labels.resize(n);
  ds.feature_names = default_names(m);
  Matrix gt(n, m, 0.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = derive_stream(seed, "synth/gaussian_clusters", i);
    const std::size_t c = pick(rng);
    double masked_score = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double v = spec.centers(c, j) + spec.scales(c, j) * normal(rng);
      ds.features(i, j) = v;
      masked_score += spec.weights(c, j) * spec.masks(c, j) * (v - spec.centers(c, j));
      gt(i, j) = spec.masks(c, j);
    }
    if (spec.cluster_labels) {
      ds.labels[i] = (*spec.cluster_labels)[c];
    } else {
      ds.labels[i] = masked_score > 0.0 ? 1 : 0;
    }
  }
  ds.ground_truth = std::move(gt);
  // The mask-to-label rule (sign of the masked linear score) is a convention
  // of this harness, recorded in provenance so reports carry it.
  ds.provenance = {"gaussian_clusters",
                   spec.cluster_labels ? "labels=fixed" : "labels=masked_linear_score_sign",
                   seed.master_seed};
  ds.validate();
  return ds;
}

}  // namespace blamebench
