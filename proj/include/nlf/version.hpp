#pragma once

namespace nlf {

inline constexpr const char* kVersion = "0.1.0";

} // namespace nlf
