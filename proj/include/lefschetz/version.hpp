#pragma once

namespace lefschetz {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace lefschetz
