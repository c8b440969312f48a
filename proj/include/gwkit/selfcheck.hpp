#pragma once

#include <string>
#include <vector>

namespace gwkit {

struct PropertyResult {
    std::string name;
    bool pass = false;
    std::string detail;
    long ms = 0;
};

struct SelfcheckReport {
    std::vector<PropertyResult> results;
    bool all_pass = true;
    long total_ms = 0;
};

/* Runs the full property suite over the built-in example library under data_dir.
   fast = true caps every case at d_max = 1. */
SelfcheckReport run_selfcheck(const std::string& data_dir, bool fast);

}  // namespace gwkit
