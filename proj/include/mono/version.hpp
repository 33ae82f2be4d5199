#pragma once

namespace mono {

inline constexpr const char* kToolName = "monograph";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace mono
