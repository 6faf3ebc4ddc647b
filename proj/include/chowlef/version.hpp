#pragma once

namespace chowlef {

inline constexpr const char* kToolName = "chowlef";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace chowlef
