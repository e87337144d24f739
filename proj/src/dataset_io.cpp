#include "blamebench/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "blamebench/numeric.hpp"

namespace blamebench {

void Dataset::validate() const {
  if (features.rows() < 1 || features.cols() < 1) {
    throw DataError("dataset must have N >= 1 instances and M >= 1 features");
  }
  const std::size_t n = features.rows();
  const std::size_t m = features.cols();
  if (feature_names.size() != m) {
    throw DataError("feature_names size does not match feature count");
  }
  if (labels.size() != n) {
    throw DataError("labels size does not match instance count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] != 0 && labels[i] != 1) {
      throw DataError("label at row " + std::to_string(i) + " is not in {0,1}");
    }
  }
  if (!all_finite(features.data())) {
    throw DataError("dataset features contain NaN/Inf");
  }
  if (ground_truth) {
    if (ground_truth->rows() != n || ground_truth->cols() != m) {
      throw DataError("ground_truth shape does not match features");
    }
    if (!all_finite(ground_truth->data())) {
      throw DataError("ground_truth contains NaN/Inf");
    }
  }
}

std::vector<double> Dataset::feature_means() const {
  const std::size_t n = features.rows();
  const std::size_t m = features.cols();
  std::vector<double> mu(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) mu[j] += features(i, j);
  }
  for (double& v : mu) v /= static_cast<double>(n);
  return mu;
}

std::vector<double> Dataset::feature_stds() const {
  const std::size_t n = features.rows();
  const std::size_t m = features.cols();
  const std::vector<double> mu = feature_means();
  std::vector<double> var(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const double d = features(i, j) - mu[j];
      var[j] += d * d;
    }
  }
  for (double& v : var) v = std::sqrt(v / static_cast<double>(n));
  return var;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(cur);
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row_no, const std::string& col) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  while (first != last && (*first == ' ' || *first == '\t')) ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc{} || res.ptr != last) {
    throw DataError("row " + std::to_string(row_no) + ": cannot parse '" + cell +
                    "' in column '" + col + "'");
  }
  return v;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot open dataset file: " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError("empty dataset file: " + path.string());
  }
  const std::vector<std::string> header = split_csv_line(line);

  std::vector<std::string> feature_names;
  std::vector<std::size_t> feature_cols;
  std::vector<std::pair<std::string, std::size_t>> gt_cols;  // feature name -> column
  std::ptrdiff_t label_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    const std::string& name = header[c];
    if (name == schema.label_column) {
      if (label_col >= 0) throw DataError("duplicate label column");
      label_col = static_cast<std::ptrdiff_t>(c);
    } else if (name.rfind(schema.gt_prefix, 0) == 0) {
      gt_cols.emplace_back(name.substr(schema.gt_prefix.size()), c);
    } else {
      feature_names.push_back(name);
      feature_cols.push_back(c);
    }
  }
  if (label_col < 0) {
    throw DataError("label column '" + schema.label_column + "' not found");
  }
  if (feature_names.empty()) {
    throw DataError("no feature columns found");
  }
  const std::size_t m = feature_names.size();

  std::vector<std::size_t> gt_for_feature;  // column index per feature
  const bool has_gt = !gt_cols.empty();
  if (has_gt) {
    if (gt_cols.size() != m) {
      throw DataError("ground-truth columns do not cover every feature");
    }
    gt_for_feature.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      bool found = false;
      for (const auto& [fname, col] : gt_cols) {
        if (fname == feature_names[j]) {
          gt_for_feature[j] = col;
          found = true;
          break;
        }
      }
      if (!found) {
        throw DataError("missing ground-truth column for feature '" + feature_names[j] + "'");
      }
    }
  }

  std::vector<double> feat_values;
  std::vector<double> gt_values;
  std::vector<int> labels;
  std::size_t row_no = 1;
  while (std::getline(in, line)) {
    ++row_no;
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != header.size()) {
      throw DataError("row " + std::to_string(row_no) + ": expected " +
                      std::to_string(header.size()) + " cells, got " +
                      std::to_string(cells.size()));
    }
    for (std::size_t j = 0; j < m; ++j) {
      feat_values.push_back(parse_cell(cells[feature_cols[j]], row_no, feature_names[j]));
    }
    if (has_gt) {
      for (std::size_t j = 0; j < m; ++j) {
        gt_values.push_back(parse_cell(cells[gt_for_feature[j]], row_no,
                                       schema.gt_prefix + feature_names[j]));
      }
    }
    const double lv = parse_cell(cells[static_cast<std::size_t>(label_col)], row_no,
                                 schema.label_column);
    if (lv != 0.0 && lv != 1.0) {
      throw DataError("row " + std::to_string(row_no) + ": label must be 0 or 1, got " +
                      cells[static_cast<std::size_t>(label_col)]);
    }
    labels.push_back(static_cast<int>(lv));
  }

  const std::size_t n = labels.size();
  Dataset ds;
  ds.feature_names = feature_names;
  ds.labels = std::move(labels);
  ds.features = Matrix(n, m);
  ds.features.data() = std::move(feat_values);
  if (has_gt) {
    Matrix gt(n, m);
    gt.data() = std::move(gt_values);
    ds.ground_truth = std::move(gt);
  }
  ds.provenance = {"file", path.string(), 0};
  ds.validate();
  return ds;
}

void save_dataset(const Dataset& ds, const std::filesystem::path& path,
                  const CsvSchema& schema) {
  ds.validate();
  for (const std::string& name : ds.feature_names) {
    if (name.find(',') != std::string::npos || name.find('\n') != std::string::npos) {
      throw DataError("feature name '" + name + "' contains a CSV delimiter");
    }
  }
  std::ofstream out(path);
  if (!out) {
    throw DataError("cannot open for writing: " + path.string());
  }
  for (std::size_t j = 0; j < ds.feature_names.size(); ++j) {
    if (j) out << ',';
    out << ds.feature_names[j];
  }
  if (ds.ground_truth) {
    for (const std::string& name : ds.feature_names) {
      out << ',' << schema.gt_prefix << name;
    }
  }
  out << ',' << schema.label_column << '\n';

  const std::size_t n = ds.n_instances();
  const std::size_t m = ds.n_features();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j) out << ',';
      out << format_double(ds.features(i, j));
    }
    if (ds.ground_truth) {
      for (std::size_t j = 0; j < m; ++j) {
        out << ',' << format_double((*ds.ground_truth)(i, j));
      }
    }
    out << ',' << ds.labels[i] << '\n';
  }
  if (!out) {
    throw DataError("write failed: " + path.string());
  }
}

}  // namespace blamebench
