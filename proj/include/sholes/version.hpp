#pragma once

namespace sholes {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace sholes
