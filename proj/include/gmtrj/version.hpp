#pragma once

namespace gmtrj {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kTraceFormatVersion = 1;

}  // namespace gmtrj
