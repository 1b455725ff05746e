#pragma once

namespace cyclotomo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cyclotomo
