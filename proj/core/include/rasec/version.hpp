#pragma once

#include <string_view>

namespace rasec {

inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace rasec
