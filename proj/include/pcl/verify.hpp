#pragma once

#include "pcl/pva.hpp"

#include <string>
#include <vector>

namespace pcl {

// Configuration of a verification run. Identical configurations always
// produce byte-identical reports: sampling uses only the seed, never clocks.
struct RunConfig {
    unsigned long long seed = 1;
    int max_degree = 2;
    int max_order = 2;
    int max_arity = 3;
    std::string structure = "gfz"; // shipped name or descriptor file path
};

struct SuiteResult {
    bool pass = true;
    std::string report;
};

const std::vector<std::string>& suite_names();

// Run one named suite. Throws std::invalid_argument for an unknown suite
// name or a malformed structure descriptor.
SuiteResult run_suite(const std::string& suite, const RunConfig& config);

// Resolve the structure field: a shipped name, otherwise a descriptor file.
PVAStructure resolve_structure(const std::string& name_or_path);

} // namespace pcl
