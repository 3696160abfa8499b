#pragma once

namespace beatty {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace beatty
