#pragma once

namespace qwom {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qwom
