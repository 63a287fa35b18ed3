#pragma once

namespace dimwall {

inline constexpr const char* kVersion = "0.1.0";

} // namespace dimwall
