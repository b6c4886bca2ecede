#pragma once

namespace binomdiv {

inline constexpr const char* kVersion = "0.1.0";

} // namespace binomdiv
