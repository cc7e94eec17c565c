#pragma once

#include "arithjet/json_io.hpp"

#include <string>
#include <vector>

namespace arithjet {

struct VerifyOptions {
    uint64_t seed = 20260808;
    size_t samples = 200;
    std::string cache_dir;
};

// Known suites: witt, delta, jet, series, graded. "all" expands to every one.
njson run_verify(const std::vector<std::string>& suites, const VerifyOptions& opt);

bool verify_report_pass(const njson& report);

}  // namespace arithjet
