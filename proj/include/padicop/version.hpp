#pragma once

namespace padicop {

inline constexpr const char* kVersion = "0.1.0";

} // namespace padicop
