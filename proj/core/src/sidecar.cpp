#include "sidecar.hpp"

#include <fstream>

#include <fmt/format.h>

#include "ease/error.hpp"

namespace ease::detail {

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void write_json_file(const std::filesystem::path& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out << doc.dump(1) << '\n';
  if (!out) throw Error(fmt::format("write failed: {}", path.string()));
}

Vocabulary vocab_from_json(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw FormatError(fmt::format("vocabulary '{}' missing", key));
  }
  return Vocabulary(doc[key].get<std::vector<std::string>>());
}

std::filesystem::path sidecar_path(const std::filesystem::path& artifact) {
  auto p = artifact;
  p += ".vocab.json";
  return p;
}

std::vector<double> doubles_from_json(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key) || doc[key].is_null()) return {};
  return doc[key].get<std::vector<double>>();
}

}  // namespace ease::detail
