#include "ease/model_io.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

#include "binary_io.hpp"
#include "ease/error.hpp"
#include "sidecar.hpp"

namespace ease {

void write_model(const WeightModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(fmt::format("cannot write {}", path.string()));
  out.write(kModelMagic, 4);
  detail::put_u32(out, kModelFormatVersion);
  detail::put_u64(out, model.n_items());
  detail::put_f64(out, model.lambda);
  out.put(static_cast<char>(model.gram_mode));
  out.put(static_cast<char>(model.variant));
  const auto& hash = model.items.hash();
  out.write(reinterpret_cast<const char*>(hash.data()), static_cast<std::streamsize>(hash.size()));
  detail::put_f64s(out, model.weights.values());
  if (!out) throw Error(fmt::format("write failed: {}", path.string()));

  nlohmann::json sidecar;
  sidecar["items"] = model.items.ids();
  sidecar["column_means"] = model.column_means;
  sidecar["column_stds"] = model.column_stds;
  detail::write_json_file(detail::sidecar_path(path), sidecar);
}

WeightModel read_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open {}", path.string()));
  char magic[4];
  detail::read_exact(in, magic, 4);
  if (!std::equal(magic, magic + 4, kModelMagic)) {
    throw FormatError(path.string() + ": not a model file (bad magic)");
  }
  const auto version = detail::get_u32(in);
  if (version != kModelFormatVersion) {
    throw FormatError(fmt::format("{}: unsupported format version {}", path.string(), version));
  }
  WeightModel model;
  const auto n = detail::get_u64(in);
  model.lambda = detail::get_f64(in);
  const auto mode = in.get();
  const auto variant = in.get();
  if (mode < 0 || mode > 2 || variant < 0 || variant > 1) {
    throw FormatError(path.string() + ": bad mode/variant byte");
  }
  model.gram_mode = static_cast<GramMode>(mode);
  model.variant = static_cast<Variant>(variant);
  VocabHash hash{};
  detail::read_exact(in, reinterpret_cast<char*>(hash.data()), hash.size());

  const auto sidecar = detail::read_json_file(detail::sidecar_path(path));
  model.items = detail::vocab_from_json(sidecar, "items");
  model.column_means = detail::doubles_from_json(sidecar, "column_means");
  model.column_stds = detail::doubles_from_json(sidecar, "column_stds");
  if (model.items.size() != n || model.items.hash() != hash) {
    throw VocabMismatchError(path.string() + ": vocabulary sidecar does not match model header");
  }

  model.weights = DenseMatrix(n, n);
  detail::get_f64s(in, model.weights.values());
  if (in.peek() != std::char_traits<char>::eof()) {
    throw FormatError(path.string() + ": trailing bytes after weight payload");
  }
  return model;
}

}  // namespace ease
