#pragma once

#include <cstdint>
#include <filesystem>

#include "ease/solver.hpp"

namespace ease {

inline constexpr char kModelMagic[4] = {'E', 'A', 'S', 'R'};
inline constexpr std::uint32_t kModelFormatVersion = 1;

// Layout (all little-endian):
//   "EASR" | u32 version | u64 n_items | f64 lambda | u8 gram_mode |
//   u8 variant | 32-byte item vocab hash | n_items² f64 weights, row-major
// The item ids and column statistics live in "<path>.vocab.json".
void write_model(const WeightModel& model, const std::filesystem::path& path);

/// Throws FormatError on a bad magic/version/size and VocabMismatchError if
/// the sidecar does not hash to the value stored in the header.
WeightModel read_model(const std::filesystem::path& path);

}  // namespace ease
