#pragma once

namespace faddeyeva {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace faddeyeva
