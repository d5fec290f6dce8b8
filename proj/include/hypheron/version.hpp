#pragma once

namespace hypheron {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "hypheron";

} // namespace hypheron
