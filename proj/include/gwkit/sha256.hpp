#pragma once

#include <string>

namespace gwkit {

/* Hex digest of the SHA-256 of `data`. */
std::string sha256_hex(const std::string& data);

}  // namespace gwkit
