#pragma once

#include <cstdint>
#include <string_view>

namespace ease {

using UserIndex = std::uint32_t;
using ItemIndex = std::uint32_t;

/// Column transform applied to X before forming the Gram matrix.
enum class GramMode : std::uint8_t {
  cooccurrence = 0,  ///< plain XᵀX
  centered = 1,      ///< zero-mean columns (proportional to the covariance)
  standardized = 2,  ///< zero-mean, unit-variance columns (correlation)
};

std::string_view to_string(GramMode mode);

/// Throws std::invalid_argument for unknown names.
GramMode parse_gram_mode(std::string_view name);

}  // namespace ease
