#pragma once

#include <string_view>

namespace totalcol {

inline constexpr std::string_view tool_version = "1.0.0";

}  // namespace totalcol
