#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ease/vocabulary.hpp"

namespace ease::detail {

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc);

Vocabulary vocab_from_json(const nlohmann::json& doc, const char* key);

/// "<file>.vocab.json" next to a binary artifact.
std::filesystem::path sidecar_path(const std::filesystem::path& artifact);

std::vector<double> doubles_from_json(const nlohmann::json& doc, const char* key);

}  // namespace ease::detail
