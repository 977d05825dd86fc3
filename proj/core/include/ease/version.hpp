#pragma once

namespace ease {
inline constexpr const char* kVersion = "0.3.0";
}
