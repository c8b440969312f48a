#pragma once

namespace gwkit {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace gwkit
