#pragma once

#include <string>
#include <vector>

namespace lgw {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs every acceptance criterion; all comparisons are exact.
std::vector<CriterionResult> run_acceptance();

}  // namespace lgw
