#pragma once

#include <filesystem>
#include <string>

#include "blamebench/types.hpp"

namespace blamebench {

// Column mapping for dataset CSV files. Defaults match the canonical layout:
// feature columns in order, optional "gt_<feature>" columns, final "label".
struct CsvSchema {
  std::string label_column = "label";
  std::string gt_prefix = "gt_";
};

// Reads a dataset CSV. Ground truth is populated iff gt_ columns are present
// (then one per feature is required). Throws DataError with the offending row
// number on malformed input and on invariant violations (non-binary labels,
// non-finite values).
Dataset load_dataset(const std::filesystem::path& path, const CsvSchema& schema = {});

// Writes a dataset CSV that load_dataset round-trips exactly. Validates the
// dataset before touching the filesystem.
void save_dataset(const Dataset& ds, const std::filesystem::path& path,
                  const CsvSchema& schema = {});

}  // namespace blamebench
