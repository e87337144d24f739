#include "blamebench/model_io.hpp"

#include <fstream>

#include <json.hpp>

namespace blamebench {

namespace {

using nlohmann::json;

json training_to_json(const TrainingMeta& t) {
  return json{{"lr", t.lr},
              {"epochs", t.epochs},
              {"l2", t.l2},
              {"seed", t.seed},
              {"final_loss", t.final_loss}};
}

TrainingMeta training_from_json(const json& j) {
  TrainingMeta t;
  t.lr = j.value("lr", 0.0);
  t.epochs = j.value("epochs", std::size_t{0});
  t.l2 = j.value("l2", 0.0);
  t.seed = j.value("seed", std::uint64_t{0});
  t.final_loss = j.value("final_loss", 0.0);
  return t;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw DataError("model file: expected a non-empty matrix");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (j[r].size() != cols) throw DataError("model file: ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

}  // namespace

void save_model(const Model& model, const std::filesystem::path& path) {
  json j;
  j["kind"] = model.kind();
  if (const auto* lm = dynamic_cast<const LogisticModel*>(&model)) {
    j["weights"] = lm->weights;
    j["bias"] = lm->bias;
    j["training"] = training_to_json(lm->training);
  } else if (const auto* lin = dynamic_cast<const LinearModel*>(&model)) {
    j["weights"] = lin->weights;
    j["bias"] = lin->bias;
    j["training"] = training_to_json(lin->training);
  } else if (const auto* nb = dynamic_cast<const GaussianNBModel*>(&model)) {
    j["prior0"] = nb->prior0;
    j["prior1"] = nb->prior1;
    j["mean0"] = nb->mean0;
    j["mean1"] = nb->mean1;
    j["var0"] = nb->var0;
    j["var1"] = nb->var1;
    j["var_floor"] = nb->var_floor;
  } else if (const auto* mlp = dynamic_cast<const MlpModel*>(&model)) {
    json layers = json::array();
    for (const auto& layer : mlp->layers) {
      layers.push_back(json{{"w", matrix_to_json(layer.w)}, {"b", layer.bias}});
    }
    j["layers"] = std::move(layers);
    j["activation"] = "tanh";
    j["training"] = training_to_json(mlp->training);
  } else {
    throw ConfigError("save_model: unknown model kind '" + model.kind() + "'");
  }

  std::ofstream out(path);
  if (!out) throw DataError("cannot open for writing: " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw DataError("write failed: " + path.string());
}

std::unique_ptr<Model> load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open model file: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw DataError("model file " + path.string() + ": " + e.what());
  }
  const std::string kind = j.value("kind", "");
  try {
    if (kind == "logistic") {
      auto m = std::make_unique<LogisticModel>();
      m->weights = j.at("weights").get<std::vector<double>>();
      m->bias = j.at("bias").get<double>();
      if (j.contains("training")) m->training = training_from_json(j["training"]);
      return m;
    }
    if (kind == "linear") {
      auto m = std::make_unique<LinearModel>();
      m->weights = j.at("weights").get<std::vector<double>>();
      m->bias = j.at("bias").get<double>();
      if (j.contains("training")) m->training = training_from_json(j["training"]);
      return m;
    }
    if (kind == "gaussian_nb") {
      auto m = std::make_unique<GaussianNBModel>();
      m->prior0 = j.at("prior0").get<double>();
      m->prior1 = j.at("prior1").get<double>();
      m->mean0 = j.at("mean0").get<std::vector<double>>();
      m->mean1 = j.at("mean1").get<std::vector<double>>();
      m->var0 = j.at("var0").get<std::vector<double>>();
      m->var1 = j.at("var1").get<std::vector<double>>();
      m->var_floor = j.value("var_floor", 1e-9);
      return m;
    }
    if (kind == "mlp") {
      auto m = std::make_unique<MlpModel>();
      for (const auto& layer_json : j.at("layers")) {
        MlpModel::Layer layer;
        layer.w = matrix_from_json(layer_json.at("w"));
        layer.bias = layer_json.at("b").get<std::vector<double>>();
        if (layer.bias.size() != layer.w.rows()) {
          throw DataError("model file: layer bias size mismatch");
        }
        m->layers.push_back(std::move(layer));
      }
      if (m->layers.empty()) throw DataError("model file: mlp has no layers");
      if (j.contains("training")) m->training = training_from_json(j["training"]);
      return m;
    }
  } catch (const json::exception& e) {
    throw DataError("model file " + path.string() + ": " + e.what());
  }
  throw DataError("model file " + path.string() + ": unknown kind '" + kind + "'");
}

}  // namespace blamebench
