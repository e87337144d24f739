#pragma once

#include <filesystem>
#include <memory>

#include "blamebench/models.hpp"

namespace blamebench {

// Model files are JSON documents: a kind tag, parameter arrays and training
// metadata. load_model dispatches on the kind tag.
void save_model(const Model& model, const std::filesystem::path& path);
std::unique_ptr<Model> load_model(const std::filesystem::path& path);

}  // namespace blamebench
